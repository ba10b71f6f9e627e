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

#include "distsampler/permanent.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "distsampler/errors.hpp"

namespace distsampler {

namespace {

constexpr std::size_t kMaxRyserDim = 30;
constexpr std::size_t kMaxNaiveDim = 10;

template <typename T>
T ryser_gray(std::span<const T> a, std::size_t n) {
    if (n == 0) return T(1);
    if (n == 1) return a[0];
    std::array<T, kMaxRyserDim> row_sum{};
    T total(0);
    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::uint64_t gray = 0;
    for (std::uint64_t step = 1; step < subsets; ++step) {
        const auto col = static_cast<std::size_t>(std::countr_zero(step));
        gray ^= std::uint64_t{1} << col;
        if (gray & (std::uint64_t{1} << col)) {
            for (std::size_t r = 0; r < n; ++r) row_sum[r] += a[r * n + col];
        } else {
            for (std::size_t r = 0; r < n; ++r) row_sum[r] -= a[r * n + col];
        }
        T prod = row_sum[0];
        for (std::size_t r = 1; r < n; ++r) prod *= row_sum[r];
        if (std::popcount(gray) & 1) {
            total -= prod;
        } else {
            total += prod;
        }
    }
    return (n & 1) ? -total : total;
}

void require_square(const ComplexMatrix &a) {
    if (!a.is_square()) throw Error(ErrorKind::InvalidDimension, "invalid dimension: permanent needs a square matrix");
    if (a.rows() > kMaxRyserDim) throw Error(ErrorKind::CostGuard, "permanent dimension exceeds 30");
}

}  // namespace

namespace kernels {

Complex ryser(std::span<const Complex> a, std::size_t n) { return ryser_gray<Complex>(a, n); }
double ryser(std::span<const double> a, std::size_t n) { return ryser_gray<double>(a, n); }

}  // namespace kernels

Complex permanent_ryser(const ComplexMatrix &a) {
    require_square(a);
    return kernels::ryser(a.entries(), a.rows());
}

Complex permanent_naive(const ComplexMatrix &a) {
    if (!a.is_square()) throw Error(ErrorKind::InvalidDimension, "invalid dimension: permanent needs a square matrix");
    const std::size_t n = a.rows();
    if (n > kMaxNaiveDim) throw Error(ErrorKind::CostGuard, "naive permanent refuses dimension > 10");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Complex total(0.0, 0.0);
    do {
        Complex prod(1.0, 0.0);
        for (std::size_t i = 0; i < n; ++i) prod *= a(i, perm[i]);
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Complex permanent_nonneg(const ComplexMatrix &a) {
    require_square(a);
    constexpr double tol = 1e-14;
    std::vector<double> re(a.entries().size());
    for (std::size_t i = 0; i < re.size(); ++i) {
        const Complex z = a.entries()[i];
        if (std::abs(z.imag()) > tol || z.real() < -tol) {
            throw Error(ErrorKind::InvalidInput, "invalid input: permanent_nonneg needs real nonnegative entries");
        }
        re[i] = z.real();
    }
    return kernels::ryser(std::span<const double>(re), a.rows());
}

}  // namespace distsampler
