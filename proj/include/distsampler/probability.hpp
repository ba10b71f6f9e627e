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

#ifndef DISTSAMPLER_PROBABILITY_HPP
#define DISTSAMPLER_PROBABILITY_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "distsampler/distinguishability.hpp"
#include "distsampler/matrix.hpp"

namespace distsampler {

/// Cost guards for the probability engines. `from_env()` reads
/// DISTSAMPLER_MAX_STEPS, which overrides `max_terms`.
struct CostLimits {
    std::size_t max_exact_n = 9;
    std::uint64_t max_terms = 100'000'000;

    static CostLimits from_env();
};

/// Serial is the reference path; Parallel splits the column subsets of each
/// order across OpenMP threads. Both reduce in the same fixed order and give
/// bit-identical results.
enum class Execution { Serial, Parallel };

/// Outcome probability summed over all n! permutations sigma of the photon
/// labels: sum_sigma (prod_j S[sigma(j)][j]) Perm(M .* conj(M[:, sigma])).
/// Throws CostGuard for n > limits.max_exact_n, InvalidInput for a model of
/// the wrong size or an unphysical S, NumericalInconsistency if the total
/// has an imaginary part above 1e-9 max(1,|P|) or is below -1e-9.
double exact_probability(const ComplexMatrix &m, const DistinguishabilityModel &model,
                         const CostLimits &limits = CostLimits::from_env());

/// One order j of the fixed-point expansion. `coefficient` is c_j (no x
/// factor), `term` is c_j x^j.
struct Contribution {
    std::size_t j = 0;
    double coefficient = 0.0;
    double term = 0.0;
};

struct TruncationResult {
    std::size_t k = 0;
    /// Raw sum of the terms. Can be slightly negative for large x; not clamped.
    double p_k = 0.0;
    /// Orders 0, 2, 3, ..., k (order 1 is always empty).
    std::vector<Contribution> contributions;
    std::uint64_t permanents_evaluated = 0;
};

struct Coefficient {
    std::size_t j = 0;
    double value = 0.0;
};

/// c_j for j in {0, 2, ..., j_max}: the sum of Perm(M .* conj(M[:, sigma]))
/// over permutations displacing exactly j photons. Each permutation term is
/// factorized by Laplace expansion over its displaced column set rho:
///   sum_{row sets R, |R| = j} Perm(interference block R x rho)
///                             * Perm(|M|^2 block on the complements),
/// so only j x j complex permanents are needed.
std::vector<Coefficient> coefficients(const ComplexMatrix &m, std::size_t j_max,
                                      const CostLimits &limits = CostLimits::from_env(),
                                      Execution exec = Execution::Parallel);

/// P_k = sum_{j <= k} c_j x^j. k is the largest displaced-photon count kept,
/// so k = 0 and k = 1 agree, and k = n equals exact_probability for a
/// Uniform(x) model.
TruncationResult truncated_probability(const ComplexMatrix &m, double x, std::size_t k,
                                       const CostLimits &limits = CostLimits::from_env(),
                                       Execution exec = Execution::Parallel);

/// n! / N^n, the scale used to express truncation errors.
double baseline_probability(std::size_t n, std::size_t n_modes);

}  // namespace distsampler

#endif
