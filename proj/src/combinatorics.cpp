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

#include "distsampler/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "distsampler/errors.hpp"

namespace distsampler {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorKind::CostGuard, "count overflows 64 bits");
    return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorKind::CostGuard, "count overflows 64 bits");
    return out;
}

double log10_binomial(std::size_t n, std::size_t k) {
    return (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) / std::log(10.0);
}

// log10(!j); !j = round(j!/e) for j >= 1.
double log10_subfactorial(std::size_t j) {
    if (j == 0) return 0.0;
    if (j == 1) return -std::numeric_limits<double>::infinity();
    if (j < 20) return std::log10(static_cast<double>(subfactorial(j)));
    return (std::lgamma(j + 1.0) - 1.0) / std::log(10.0);
}

}  // namespace

std::uint64_t factorial(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f = checked_mul(f, i);
    return f;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t c = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        // c * (n - k + i) / i is exact at every step; divide by the gcd first
        // so the intermediate product overflows only when the result does.
        const std::uint64_t num = n - k + i;
        const std::uint64_t g = std::gcd(c, i);
        c = checked_mul(c / g, num / (i / g));
    }
    return c;
}

std::uint64_t subfactorial(std::size_t j) {
    if (j == 0) return 1;
    std::uint64_t prev2 = 1;  // !0
    std::uint64_t prev1 = 0;  // !1
    for (std::size_t i = 2; i <= j; ++i) {
        const std::uint64_t cur = checked_mul(i - 1, checked_add(prev1, prev2));
        prev2 = prev1;
        prev1 = cur;
    }
    return prev1;
}

std::uint64_t rencontres(std::size_t n, std::size_t j) {
    if (j > n) throw Error(ErrorKind::InvalidInput, "invalid input: rencontres needs j <= n");
    const std::uint64_t d = subfactorial(j);
    if (d == 0) return 0;
    return checked_mul(binomial(n, j), d);
}

FixedPointClass FixedPointClass::make(std::size_t n, std::size_t j) {
    if (j > n) throw Error(ErrorKind::InvalidInput, "invalid input: displaced count exceeds n");
    return FixedPointClass{n, j};
}

TermCount term_count(std::size_t n, std::size_t k) {
    if (k > n) throw Error(ErrorKind::InvalidOrder, "invalid order: k > n");
    TermCount tc;
    for (std::size_t j = 0; j <= k; ++j) {
        const std::uint64_t d = subfactorial(j);
        if (d == 0) continue;
        const std::uint64_t c = binomial(n, j);
        const std::uint64_t perms = checked_mul(checked_mul(c, c), d);
        tc.permanents = checked_add(tc.permanents, perms);
        if (j >= 64) throw Error(ErrorKind::CostGuard, "count overflows 64 bits");
        tc.steps = checked_add(tc.steps, checked_mul(checked_mul(perms, std::uint64_t{1} << j), j));
    }
    return tc;
}

double log10_term_steps(std::size_t n, std::size_t k) {
    if (k > n) throw Error(ErrorKind::InvalidOrder, "invalid order: k > n");
    // log-sum-exp over j of log10(C(n,j)^2 * !j * 2^j * j)
    std::vector<double> logs;
    for (std::size_t j = 2; j <= k; ++j) {
        logs.push_back(2.0 * log10_binomial(n, j) + log10_subfactorial(j) + j * std::log10(2.0) +
                       std::log10(static_cast<double>(j)));
    }
    if (logs.empty()) return -std::numeric_limits<double>::infinity();
    const double top = *std::max_element(logs.begin(), logs.end());
    double acc = 0.0;
    for (double l : logs) acc += std::pow(10.0, l - top);
    return top + std::log10(acc);
}

DerangementStream::DerangementStream(std::size_t j) : perm_(j) {
    std::iota(perm_.begin(), perm_.end(), 0);
}

bool DerangementStream::next() {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        if (perm_.empty()) return true;
    } else if (perm_.empty() || !std::next_permutation(perm_.begin(), perm_.end())) {
        done_ = true;
        return false;
    }
    for (;;) {
        bool fixed_free = true;
        for (std::size_t i = 0; i < perm_.size(); ++i) {
            if (perm_[i] == i) {
                fixed_free = false;
                break;
            }
        }
        if (fixed_free) return true;
        if (!std::next_permutation(perm_.begin(), perm_.end())) {
            done_ = true;
            return false;
        }
    }
}

SubsetStream::SubsetStream(std::size_t n, std::size_t j) : n_(n), subset_(j) {
    if (j > n) throw Error(ErrorKind::InvalidInput, "invalid input: subset size exceeds n");
    std::iota(subset_.begin(), subset_.end(), 0);
}

bool SubsetStream::next() {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        return true;
    }
    const std::size_t j = subset_.size();
    std::size_t i = j;
    while (i > 0 && subset_[i - 1] == n_ - j + (i - 1)) --i;
    if (i == 0) {
        done_ = true;
        return false;
    }
    ++subset_[i - 1];
    for (std::size_t t = i; t < j; ++t) subset_[t] = subset_[t - 1] + 1;
    return true;
}

std::vector<Permutation> enumerate_derangements(std::size_t j) {
    std::vector<Permutation> out;
    DerangementStream s(j);
    while (s.next()) out.push_back(s.permutation());
    return out;
}

std::vector<std::vector<std::size_t>> enumerate_subsets(std::size_t n, std::size_t j) {
    std::vector<std::vector<std::size_t>> out;
    SubsetStream s(n, j);
    while (s.next()) out.push_back(s.current());
    return out;
}

std::vector<std::size_t> complement(const std::vector<std::size_t> &subset, std::size_t n) {
    std::vector<std::size_t> out;
    out.reserve(n - subset.size());
    std::size_t p = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (p < subset.size() && subset[p] == i) {
            ++p;
        } else {
            out.push_back(i);
        }
    }
    return out;
}

}  // namespace distsampler
