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

#include "distsampler/probability.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>

#include "distsampler/combinatorics.hpp"
#include "distsampler/errors.hpp"
#include "distsampler/permanent.hpp"

namespace distsampler {

CostLimits CostLimits::from_env() {
    CostLimits limits;
    if (const char *env = std::getenv("DISTSAMPLER_MAX_STEPS")) {
        char *end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0') limits.max_terms = v;
    }
    return limits;
}

double baseline_probability(std::size_t n, std::size_t n_modes) {
    return std::exp(std::lgamma(n + 1.0) - static_cast<double>(n) * std::log(static_cast<double>(n_modes)));
}

double exact_probability(const ComplexMatrix &m, const DistinguishabilityModel &model,
                         const CostLimits &limits) {
    if (!m.is_square()) throw Error(ErrorKind::InvalidDimension, "invalid dimension: M must be square");
    const std::size_t n = m.rows();
    if (n > limits.max_exact_n) {
        throw Error(ErrorKind::CostGuard, "cost guard: exact engine limited to n <= " +
                                              std::to_string(limits.max_exact_n));
    }
    require_valid(model);
    if (auto dim = model.dimension(); dim && *dim != n) {
        throw Error(ErrorKind::InvalidInput, "invalid input: overlap matrix size does not match photon count");
    }

    std::vector<std::size_t> mapping(n);
    std::iota(mapping.begin(), mapping.end(), 0);
    Complex total(0.0, 0.0);
    do {
        const Permutation sigma(mapping);
        const Complex w = overlap_weight(model, sigma);
        if (w == Complex(0.0, 0.0)) continue;
        total += w * permanent_ryser(interference_matrix(m, sigma));
    } while (std::next_permutation(mapping.begin(), mapping.end()));

    if (std::abs(total.imag()) > 1e-9 * std::max(1.0, std::abs(total))) {
        throw Error(ErrorKind::NumericalInconsistency, "numerical inconsistency: probability has imaginary residue");
    }
    const double p = total.real();
    if (p < -1e-9) throw Error(ErrorKind::NumericalInconsistency, "numerical inconsistency: negative probability");
    return std::max(p, 0.0);
}

namespace {

struct OrderTotal {
    Complex value;
    std::uint64_t permanents = 0;
};

// Contribution of one displaced column set rho: sum over its derangements and
// over the row sets R that carry the interfering block.
Complex displaced_set_total(const ComplexMatrix &m, const std::vector<double> &abs2,
                            const std::vector<std::size_t> &rho,
                            const std::vector<std::vector<std::size_t>> &row_sets,
                            const std::vector<std::vector<std::size_t>> &derangements) {
    const std::size_t n = m.rows();
    const std::size_t j = rho.size();
    const std::vector<std::size_t> rho_bar = complement(rho, n);
    std::vector<Complex> block(j * j);
    std::vector<double> classical((n - j) * (n - j));
    Complex total(0.0, 0.0);
    for (const auto &rows : row_sets) {
        const std::vector<std::size_t> rows_bar = complement(rows, n);
        for (std::size_t r = 0; r < n - j; ++r)
            for (std::size_t c = 0; c < n - j; ++c)
                classical[r * (n - j) + c] = abs2[rows_bar[r] * n + rho_bar[c]];
        const double classical_perm = kernels::ryser(std::span<const double>(classical), n - j);

        Complex interfering(0.0, 0.0);
        for (const auto &dp : derangements) {
            for (std::size_t r = 0; r < j; ++r) {
                const std::size_t row = rows[r];
                for (std::size_t c = 0; c < j; ++c) {
                    block[r * j + c] = m(row, rho[c]) * std::conj(m(row, rho[dp[c]]));
                }
            }
            interfering += kernels::ryser(std::span<const Complex>(block), j);
        }
        total += interfering * classical_perm;
    }
    return total;
}

OrderTotal order_total(const ComplexMatrix &m, const std::vector<double> &abs2, std::size_t j,
                       Execution exec) {
    const std::size_t n = m.rows();
    const auto subsets = enumerate_subsets(n, j);
    std::vector<std::vector<std::size_t>> derangements;
    for (DerangementStream s(j); s.next();) derangements.push_back(s.current());

    OrderTotal out;
    out.permanents = static_cast<std::uint64_t>(subsets.size()) * subsets.size() * derangements.size();
    if (derangements.empty()) return out;

    std::vector<Complex> slots(subsets.size());
    const auto count = static_cast<std::ptrdiff_t>(subsets.size());
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            slots[i] = displaced_set_total(m, abs2, subsets[i], subsets, derangements);
        }
    } else {
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            slots[i] = displaced_set_total(m, abs2, subsets[i], subsets, derangements);
        }
    }
    // Fixed-order reduction keeps the result independent of thread scheduling.
    for (const Complex &v : slots) out.value += v;
    return out;
}

std::vector<double> abs_squared_entries(const ComplexMatrix &m) {
    std::vector<double> out(m.entries().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::norm(m.entries()[i]);
    return out;
}

void check_truncation_inputs(const ComplexMatrix &m, std::size_t k, const CostLimits &limits) {
    if (!m.is_square()) throw Error(ErrorKind::InvalidDimension, "invalid dimension: M must be square");
    if (k > m.rows()) {
        throw Error(ErrorKind::InvalidOrder, "invalid order: k = " + std::to_string(k) + " exceeds n = " +
                                                 std::to_string(m.rows()));
    }
    const TermCount tc = term_count(m.rows(), k);
    if (tc.permanents > limits.max_terms) {
        throw Error(ErrorKind::CostGuard, "cost guard: " + std::to_string(tc.permanents) +
                                              " permanents exceed budget " + std::to_string(limits.max_terms));
    }
}

std::vector<std::pair<Coefficient, std::uint64_t>> coefficient_terms(const ComplexMatrix &m, std::size_t j_max,
                                                                     Execution exec) {
    const std::vector<double> abs2 = abs_squared_entries(m);
    std::vector<std::pair<Coefficient, std::uint64_t>> out;
    for (std::size_t j = 0; j <= j_max; ++j) {
        if (j == 1) continue;
        const OrderTotal t = order_total(m, abs2, j, exec);
        if (std::abs(t.value.imag()) > 1e-9 * std::max(1.0, std::abs(t.value))) {
            throw Error(ErrorKind::NumericalInconsistency,
                        "numerical inconsistency: coefficient c_" + std::to_string(j) + " has imaginary residue");
        }
        out.push_back({Coefficient{j, t.value.real()}, t.permanents});
    }
    return out;
}

}  // namespace

std::vector<Coefficient> coefficients(const ComplexMatrix &m, std::size_t j_max, const CostLimits &limits,
                                      Execution exec) {
    check_truncation_inputs(m, j_max, limits);
    std::vector<Coefficient> out;
    for (const auto &[c, perms] : coefficient_terms(m, j_max, exec)) out.push_back(c);
    return out;
}

TruncationResult truncated_probability(const ComplexMatrix &m, double x, std::size_t k, const CostLimits &limits,
                                       Execution exec) {
    if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorKind::InvalidInput, "invalid input: x must lie in [0, 1]");
    check_truncation_inputs(m, k, limits);
    TruncationResult result;
    result.k = k;
    for (const auto &[c, perms] : coefficient_terms(m, k, exec)) {
        const double term = c.value * std::pow(x, static_cast<double>(c.j));
        result.contributions.push_back(Contribution{c.j, c.value, term});
        result.p_k += term;
        result.permanents_evaluated += perms;
    }
    return result;
}

}  // namespace distsampler
