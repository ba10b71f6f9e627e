// Copyright 2026 The distsampler Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DISTSAMPLER_PERMUTATION_HPP
#define DISTSAMPLER_PERMUTATION_HPP

#include <cstddef>
#include <vector>

namespace distsampler {

/// A bijection on {0, ..., size-1}; sigma(i) == mapping()[i].
class Permutation {
   public:
    Permutation() = default;
    /// Throws InvalidInput if `mapping` is not a bijection.
    explicit Permutation(std::vector<std::size_t> mapping);

    static Permutation identity(std::size_t n);

    std::size_t size() const noexcept { return mapping_.size(); }
    std::size_t operator[](std::size_t i) const { return mapping_[i]; }
    const std::vector<std::size_t> &mapping() const noexcept { return mapping_; }

    Permutation inverse() const;
    /// Number of indices with sigma(i) != i.
    std::size_t displaced_count() const noexcept;

    friend bool operator==(const Permutation &, const Permutation &) = default;

   private:
    std::vector<std::size_t> mapping_;
};

}  // namespace distsampler

#endif
