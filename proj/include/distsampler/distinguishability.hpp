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

#ifndef DISTSAMPLER_DISTINGUISHABILITY_HPP
#define DISTSAMPLER_DISTINGUISHABILITY_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "distsampler/matrix.hpp"
#include "distsampler/permutation.hpp"

namespace distsampler {

/// Every pairwise overlap equals x: S_ij = x + (1 - x) delta_ij.
struct UniformOverlap {
    double x = 1.0;
};

/// Full Gram matrix of single-photon internal states, S_ij = <psi_i|psi_j>.
struct GeneralOverlap {
    ComplexMatrix s;
};

class DistinguishabilityModel {
   public:
    /// Throws InvalidInput unless 0 <= x <= 1.
    static DistinguishabilityModel uniform(double x);
    /// Not validated here; see validate_model / require_valid.
    static DistinguishabilityModel general(ComplexMatrix s);

    bool is_uniform() const noexcept { return std::holds_alternative<UniformOverlap>(v_); }
    double x() const { return std::get<UniformOverlap>(v_).x; }
    const ComplexMatrix &s() const { return std::get<GeneralOverlap>(v_).s; }
    /// Photon count fixed by the model; nullopt for Uniform.
    std::optional<std::size_t> dimension() const;
    /// S as an explicit n x n matrix (Uniform expanded).
    ComplexMatrix overlap_matrix(std::size_t n) const;

   private:
    explicit DistinguishabilityModel(std::variant<UniformOverlap, GeneralOverlap> v) : v_(std::move(v)) {}
    std::variant<UniformOverlap, GeneralOverlap> v_;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const noexcept { return violations.empty(); }
};

/// Checks Uniform: 0 <= x <= 1. General: square, Hermitian to 1e-12,
/// S_ii == 1, |S_ij| <= 1, smallest eigenvalue >= -1e-10.
ValidationReport validate_model(const DistinguishabilityModel &model);
/// Throws InvalidInput listing the violations.
void require_valid(const DistinguishabilityModel &model);

/// prod_j S[sigma(j)][j]. For Uniform this is x^(displaced points of sigma).
Complex overlap_weight(const DistinguishabilityModel &model, const Permutation &sigma);

}  // namespace distsampler

#endif
