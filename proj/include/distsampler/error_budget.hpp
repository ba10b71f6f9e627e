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

#ifndef DISTSAMPLER_ERROR_BUDGET_HPP
#define DISTSAMPLER_ERROR_BUDGET_HPP

#include <cstddef>
#include <cstdint>
#include <optional>

namespace distsampler {

/// Large-n relative truncation error of P_k, Delta P_k / P_0, obtained by
/// summing the geometric series of |c_j| x^j with |c_j| ~ P_0 / 2:
///   x^(k+1) / (2 sqrt(1 - x^2)).
/// Throws InvalidInput for x outside [0, 1) (the series diverges at x = 1).
double error_bound(std::size_t k, double x);

/// Only the leading omitted term, x^(k+1) / 2.
double first_term_bound(std::size_t k, double x);

/// The x at which error_bound(k, x) == epsilon, found by bisection (the bound
/// is increasing in x). Accurate to 1e-12.
double threshold_x(std::size_t k, double epsilon);

struct ErrorBudget {
    std::size_t n = 0;
    double x = 0.0;
    double epsilon = 0.0;
    /// Smallest k with error_bound(k, x) <= epsilon.
    std::size_t k_required = 0;
    /// k_required < n: a truncation below the full permanent meets epsilon.
    bool feasible = false;
    /// Smallest k with first_term_bound(k, x) <= epsilon, and whether it is < n.
    std::size_t first_term_order = 0;
    bool first_term_feasible = false;
    /// Estimated Ryser steps for P_{k_required}; nullopt if it overflows 64 bits.
    std::optional<std::uint64_t> estimated_steps;
    double log10_estimated_steps = 0.0;
    /// log10(2^n n), the cost of one n x n complex permanent.
    double log10_full_permanent_steps = 0.0;
    /// feasible and the truncation costs no more than one full permanent.
    bool within_permanent_budget = false;
    /// x where error_bound(n - 1, x) == epsilon.
    double boundary_x = 0.0;
    /// n! / N^n when the mode count is known.
    std::optional<double> p0;
};

/// Throws InvalidInput if epsilon <= 0, n == 0 or x outside [0, 1).
ErrorBudget required_order(double x, double epsilon, std::size_t n,
                           std::optional<std::size_t> n_modes = std::nullopt);

}  // namespace distsampler

#endif
