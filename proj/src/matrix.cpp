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

#include "distsampler/matrix.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "distsampler/errors.hpp"

namespace distsampler {

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidDimension: return "invalid dimension";
        case ErrorKind::InvalidPattern: return "invalid pattern";
        case ErrorKind::InvalidInput: return "invalid input";
        case ErrorKind::InvalidOrder: return "invalid order";
        case ErrorKind::CostGuard: return "cost guard";
        case ErrorKind::NumericalInconsistency: return "numerical inconsistency";
        case ErrorKind::ChainStuck: return "chain stuck";
        case ErrorKind::Io: return "i/o error";
    }
    return "unknown error";
}

Permutation::Permutation(std::vector<std::size_t> mapping) : mapping_(std::move(mapping)) {
    std::vector<bool> seen(mapping_.size(), false);
    for (std::size_t v : mapping_) {
        if (v >= mapping_.size() || seen[v]) {
            throw Error(ErrorKind::InvalidInput, "permutation mapping is not a bijection");
        }
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = i;
    return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(mapping_.size());
    for (std::size_t i = 0; i < mapping_.size(); ++i) inv[mapping_[i]] = i;
    return Permutation(std::move(inv));
}

std::size_t Permutation::displaced_count() const noexcept {
    std::size_t d = 0;
    for (std::size_t i = 0; i < mapping_.size(); ++i) d += mapping_[i] != i;
    return d;
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw Error(ErrorKind::InvalidDimension,
                    "invalid dimension: expected " + std::to_string(rows_ * cols_) +
                        " entries, got " + std::to_string(data_.size()));
    }
    for (const Complex &z : data_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error(ErrorKind::InvalidInput, "matrix entry is not finite");
        }
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

ComplexMatrix ComplexMatrix::abs_squared() const {
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = std::norm(data_[i]);
    return out;
}

ComplexMatrix ComplexMatrix::select(std::span<const std::size_t> row_idx,
                                    std::span<const std::size_t> col_idx) const {
    ComplexMatrix out(row_idx.size(), col_idx.size());
    for (std::size_t r = 0; r < row_idx.size(); ++r)
        for (std::size_t c = 0; c < col_idx.size(); ++c)
            out(r, c) = (*this)(row_idx[r], col_idx[c]);
    return out;
}

double ComplexMatrix::unitarity_residual() const {
    if (!is_square()) throw Error(ErrorKind::InvalidDimension, "unitarity check needs a square matrix");
    const ComplexMatrix g = adjoint() * (*this);
    double worst = 0.0;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            worst = std::max(worst, std::abs(g(r, c) - (r == c ? 1.0 : 0.0)));
    return worst;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) throw Error(ErrorKind::InvalidDimension, "invalid dimension in product");
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex v = a(r, k);
            for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += v * b(k, c);
        }
    return out;
}

namespace {

void check_mode_list(const std::vector<std::size_t> &modes, std::size_t n_modes, const char *what) {
    for (std::size_t i = 0; i < modes.size(); ++i) {
        if (modes[i] >= n_modes) {
            throw Error(ErrorKind::InvalidPattern, std::string("invalid pattern: ") + what +
                                                       " mode " + std::to_string(modes[i]) +
                                                       " out of range");
        }
        if (i > 0 && modes[i] <= modes[i - 1]) {
            throw Error(ErrorKind::InvalidPattern,
                        std::string("invalid pattern: ") + what + " modes must be strictly increasing");
        }
    }
}

}  // namespace

OutcomePattern OutcomePattern::make(std::size_t n_modes, std::vector<std::size_t> inputs,
                                    std::vector<std::size_t> outputs) {
    if (inputs.size() != outputs.size()) {
        throw Error(ErrorKind::InvalidPattern, "invalid pattern: input and output counts differ");
    }
    if (inputs.size() > n_modes) {
        throw Error(ErrorKind::InvalidPattern, "invalid pattern: more photons than modes");
    }
    check_mode_list(inputs, n_modes, "input");
    check_mode_list(outputs, n_modes, "output");
    return OutcomePattern{n_modes, std::move(inputs), std::move(outputs)};
}

OutcomePattern OutcomePattern::first_modes(std::size_t n_modes, std::size_t n) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    return make(n_modes, idx, idx);
}

ComplexMatrix haar_unitary(std::size_t n_modes, std::uint64_t seed) {
    if (n_modes == 0) throw Error(ErrorKind::InvalidDimension, "invalid dimension: N must be >= 1");
    const auto n = static_cast<Eigen::Index>(n_modes);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd z(n, n);
    // Row-major fill so the draw order is independent of Eigen's storage order.
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            z(r, c) = Complex(re, im);
        }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
    const Eigen::MatrixXcd &packed = qr.matrixQR();
    for (Eigen::Index c = 0; c < n; ++c) {
        const Complex d = packed(c, c);
        const double mag = std::abs(d);
        if (mag > 0.0) q.col(c) *= d / mag;
    }
    ComplexMatrix out(n_modes, n_modes);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c)
            out(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = q(r, c);
    return out;
}

ComplexMatrix extract_submatrix(const ComplexMatrix &unitary, const OutcomePattern &pattern) {
    for (std::size_t m : pattern.input_modes)
        if (m >= unitary.cols()) throw Error(ErrorKind::InvalidPattern, "invalid pattern: input mode out of range");
    for (std::size_t m : pattern.output_modes)
        if (m >= unitary.rows()) throw Error(ErrorKind::InvalidPattern, "invalid pattern: output mode out of range");
    return unitary.select(pattern.output_modes, pattern.input_modes);
}

ComplexMatrix interference_matrix(const ComplexMatrix &m, const Permutation &sigma) {
    if (!m.is_square() || sigma.size() != m.cols()) {
        throw Error(ErrorKind::InvalidDimension, "invalid dimension: permutation does not match matrix");
    }
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c) * std::conj(m(r, sigma[c]));
    return out;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace distsampler
