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

#include "distsampler/scan.hpp"

#include <cmath>
#include <string>

#include "distsampler/combinatorics.hpp"
#include "distsampler/errors.hpp"

namespace distsampler {

namespace {

void check_ensemble(std::size_t n, std::size_t n_modes, std::size_t trials) {
    if (n == 0) throw Error(ErrorKind::InvalidInput, "invalid input: n must be >= 1");
    if (n_modes < n) throw Error(ErrorKind::InvalidInput, "invalid input: N must be >= n");
    if (trials == 0) throw Error(ErrorKind::InvalidInput, "invalid input: trials must be >= 1");
}

ComplexMatrix trial_submatrix(std::size_t n, std::size_t n_modes, std::uint64_t seed, std::size_t trial) {
    const ComplexMatrix u = haar_unitary(n_modes, derive_seed(seed, trial));
    return extract_submatrix(u, OutcomePattern::first_modes(n_modes, n));
}

template <typename Body>
void for_each_trial(std::size_t trials, Execution exec, Body body) {
    const auto count = static_cast<std::ptrdiff_t>(trials);
    std::vector<int> failed(trials, 0);
    std::vector<Error> errors(trials, Error(ErrorKind::NumericalInconsistency, ""));
    auto guarded = [&](std::ptrdiff_t t) {
        try {
            body(static_cast<std::size_t>(t));
        } catch (const Error &e) {
            failed[t] = 1;
            errors[t] = e;
        }
    };
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t t = 0; t < count; ++t) guarded(t);
    } else {
        for (std::ptrdiff_t t = 0; t < count; ++t) guarded(t);
    }
    for (std::size_t t = 0; t < trials; ++t)
        if (failed[t]) throw errors[t];
}

}  // namespace

std::vector<ErrorScanRow> ensemble_error_scan(const ErrorScanConfig &cfg, Execution exec, const CostLimits &limits) {
    check_ensemble(cfg.n, cfg.n_modes, cfg.trials);
    for (double x : cfg.x_grid)
        if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorKind::InvalidInput, "invalid input: x grid outside [0, 1]");
    for (std::size_t k : cfg.k_list)
        if (k > cfg.n) throw Error(ErrorKind::InvalidOrder, "invalid order: k = " + std::to_string(k) + " exceeds n");
    if (cfg.n > limits.max_exact_n) throw Error(ErrorKind::CostGuard, "cost guard: ensemble scan needs the exact engine");
    if (term_count(cfg.n, cfg.n).permanents > limits.max_terms) {
        throw Error(ErrorKind::CostGuard, "cost guard: coefficient expansion exceeds budget");
    }

    const double p0 = baseline_probability(cfg.n, cfg.n_modes);
    const std::size_t cells = cfg.x_grid.size() * cfg.k_list.size();
    // errors[t * cells + cell]
    std::vector<double> rel(cfg.trials * cells, 0.0);

    for_each_trial(cfg.trials, exec, [&](std::size_t t) {
        const ComplexMatrix m = trial_submatrix(cfg.n, cfg.n_modes, cfg.seed, t);
        const auto coeffs = coefficients(m, cfg.n, limits, Execution::Serial);
        for (std::size_t xi = 0; xi < cfg.x_grid.size(); ++xi) {
            const double x = cfg.x_grid[xi];
            const double exact = exact_probability(m, DistinguishabilityModel::uniform(x), limits);
            for (std::size_t ki = 0; ki < cfg.k_list.size(); ++ki) {
                double p_k = 0.0;
                for (const auto &c : coeffs)
                    if (c.j <= cfg.k_list[ki]) p_k += c.value * std::pow(x, static_cast<double>(c.j));
                rel[t * cells + xi * cfg.k_list.size() + ki] = std::abs(p_k - exact) / p0;
            }
        }
    });

    std::vector<ErrorScanRow> rows;
    for (std::size_t xi = 0; xi < cfg.x_grid.size(); ++xi) {
        for (std::size_t ki = 0; ki < cfg.k_list.size(); ++ki) {
            const std::size_t cell = xi * cfg.k_list.size() + ki;
            double sq = 0.0, abs_sum = 0.0;
            for (std::size_t t = 0; t < cfg.trials; ++t) {
                const double e = rel[t * cells + cell];
                sq += e * e;
                abs_sum += e;
            }
            const double trials = static_cast<double>(cfg.trials);
            rows.push_back(ErrorScanRow{cfg.x_grid[xi], cfg.k_list[ki], std::sqrt(sq / trials), abs_sum / trials,
                                        cfg.trials});
        }
    }
    return rows;
}

std::vector<CoefficientScanRow> coefficient_scan(std::size_t n, std::size_t n_modes, std::size_t trials,
                                                 std::uint64_t seed, Execution exec, const CostLimits &limits) {
    check_ensemble(n, n_modes, trials);
    if (term_count(n, n).permanents > limits.max_terms) {
        throw Error(ErrorKind::CostGuard, "cost guard: coefficient expansion exceeds budget");
    }
    const double p0 = baseline_probability(n, n_modes);
    const std::size_t orders = n >= 2 ? n : 1;  // j = 0, 2, ..., n
    std::vector<double> normalized(trials * orders, 0.0);

    for_each_trial(trials, exec, [&](std::size_t t) {
        const ComplexMatrix m = trial_submatrix(n, n_modes, seed, t);
        const auto coeffs = coefficients(m, n, limits, Execution::Serial);
        for (std::size_t i = 0; i < coeffs.size(); ++i) normalized[t * orders + i] = std::abs(coeffs[i].value) / p0;
    });

    std::vector<CoefficientScanRow> rows;
    std::size_t i = 0;
    for (std::size_t j = 0; j <= n; ++j) {
        if (j == 1) continue;
        double sq = 0.0, abs_sum = 0.0;
        for (std::size_t t = 0; t < trials; ++t) {
            const double v = normalized[t * orders + i];
            sq += v * v;
            abs_sum += v;
        }
        rows.push_back(CoefficientScanRow{j, std::sqrt(sq / trials), abs_sum / trials, 0.5, trials});
        ++i;
    }
    return rows;
}

}  // namespace distsampler
