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

#ifndef DISTSAMPLER_COMBINATORICS_HPP
#define DISTSAMPLER_COMBINATORICS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "distsampler/permutation.hpp"

namespace distsampler {

// All counts are exact 64-bit values; anything that would overflow throws
// Error(CostGuard) instead of wrapping.

std::uint64_t factorial(std::size_t n);
std::uint64_t binomial(std::size_t n, std::size_t k);
/// !j via !j = (j-1)(!(j-1) + !(j-2)), !0 = 1, !1 = 0.
std::uint64_t subfactorial(std::size_t j);
/// Permutations of n elements that displace exactly j of them: C(n,j) * !j.
std::uint64_t rencontres(std::size_t n, std::size_t j);

/// Permutations of n elements with n-j fixed points. j == 1 is legal and
/// simply empty.
struct FixedPointClass {
    std::size_t n = 0;
    std::size_t j = 0;

    static FixedPointClass make(std::size_t n, std::size_t j);
    std::uint64_t size() const { return rencontres(n, j); }
};

struct TermCount {
    /// Complex permanents of size j evaluated by the truncated engine:
    /// sum_{j<=k} C(n,j)^2 * !j.
    std::uint64_t permanents = 0;
    /// sum_{j<=k} C(n,j)^2 * !j * 2^j * j.
    std::uint64_t steps = 0;
};

TermCount term_count(std::size_t n, std::size_t k);
/// log10 of TermCount::steps, finite for any n (used where the exact count
/// overflows 64 bits). Returns -inf when the step count is zero.
double log10_term_steps(std::size_t n, std::size_t k);

/// Lexicographic stream of the fixed-point-free permutations of {0..j-1}.
/// j == 0 yields one empty permutation; j == 1 yields nothing.
class DerangementStream {
   public:
    explicit DerangementStream(std::size_t j);
    /// Advances to the next derangement; false when exhausted.
    bool next();
    const std::vector<std::size_t> &current() const noexcept { return perm_; }
    Permutation permutation() const { return Permutation(perm_); }

   private:
    std::vector<std::size_t> perm_;
    bool started_ = false;
    bool done_ = false;
};

/// Lexicographic stream of the size-j subsets of {0..n-1}.
class SubsetStream {
   public:
    SubsetStream(std::size_t n, std::size_t j);
    bool next();
    const std::vector<std::size_t> &current() const noexcept { return subset_; }

   private:
    std::size_t n_;
    std::vector<std::size_t> subset_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<Permutation> enumerate_derangements(std::size_t j);
std::vector<std::vector<std::size_t>> enumerate_subsets(std::size_t n, std::size_t j);

/// Indices in {0..n-1} not in the (sorted) subset.
std::vector<std::size_t> complement(const std::vector<std::size_t> &subset, std::size_t n);

}  // namespace distsampler

#endif
