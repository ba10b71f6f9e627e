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

#include "distsampler/error_budget.hpp"

#include <cmath>
#include <limits>

#include "distsampler/combinatorics.hpp"
#include "distsampler/errors.hpp"
#include "distsampler/probability.hpp"

namespace distsampler {

namespace {

void check_x(double x) {
    if (!(x >= 0.0 && x < 1.0)) {
        throw Error(ErrorKind::InvalidInput, "invalid input: error bound is undefined for x outside [0, 1)");
    }
}

// Smallest k >= 0 with bound(k) <= epsilon, bound decreasing in k. Stops at
// `cap` (returned as-is when even k = cap fails).
template <typename Bound>
std::size_t smallest_order(Bound bound, double epsilon, std::size_t cap) {
    for (std::size_t k = 0; k < cap; ++k) {
        if (bound(k) <= epsilon) return k;
    }
    return cap;
}

}  // namespace

double error_bound(std::size_t k, double x) {
    check_x(x);
    return std::pow(x, static_cast<double>(k + 1)) / (2.0 * std::sqrt(1.0 - x * x));
}

double first_term_bound(std::size_t k, double x) {
    check_x(x);
    return std::pow(x, static_cast<double>(k + 1)) / 2.0;
}

double threshold_x(std::size_t k, double epsilon) {
    if (!(epsilon > 0.0)) throw Error(ErrorKind::InvalidInput, "invalid input: epsilon must be positive");
    double lo = 0.0;
    double hi = 1.0;
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        if (error_bound(k, mid) <= epsilon) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

ErrorBudget required_order(double x, double epsilon, std::size_t n, std::optional<std::size_t> n_modes) {
    if (!(epsilon > 0.0)) throw Error(ErrorKind::InvalidInput, "invalid input: epsilon must be positive");
    if (n == 0) throw Error(ErrorKind::InvalidInput, "invalid input: n must be >= 1");
    check_x(x);

    ErrorBudget b;
    b.n = n;
    b.x = x;
    b.epsilon = epsilon;
    b.k_required = smallest_order([&](std::size_t k) { return error_bound(k, x); }, epsilon, n);
    b.feasible = b.k_required < n;
    b.first_term_order = smallest_order([&](std::size_t k) { return first_term_bound(k, x); }, epsilon, n);
    b.first_term_feasible = b.first_term_order < n;

    const std::size_t k_cost = std::min(b.k_required, n);
    b.log10_estimated_steps = log10_term_steps(n, k_cost);
    try {
        b.estimated_steps = term_count(n, k_cost).steps;
    } catch (const Error &) {
        b.estimated_steps = std::nullopt;
    }
    b.log10_full_permanent_steps = static_cast<double>(n) * std::log10(2.0) + std::log10(static_cast<double>(n));
    b.within_permanent_budget = b.feasible && b.log10_estimated_steps <= b.log10_full_permanent_steps;
    b.boundary_x = threshold_x(n - 1, epsilon);
    if (n_modes) b.p0 = baseline_probability(n, *n_modes);
    return b;
}

}  // namespace distsampler
