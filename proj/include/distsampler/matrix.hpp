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

#ifndef DISTSAMPLER_MATRIX_HPP
#define DISTSAMPLER_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "distsampler/permutation.hpp"

namespace distsampler {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Entries are always finite.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    /// Throws InvalidDimension on a size mismatch, InvalidInput on NaN/Inf.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Complex &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    std::span<const Complex> entries() const noexcept { return data_; }
    std::span<const Complex> row(std::size_t r) const {
        return std::span<const Complex>(data_).subspan(r * cols_, cols_);
    }

    ComplexMatrix adjoint() const;
    /// Entrywise |a|^2, stored with zero imaginary part.
    ComplexMatrix abs_squared() const;
    /// Rows and columns picked by index lists, in the given order.
    ComplexMatrix select(std::span<const std::size_t> row_idx,
                         std::span<const std::size_t> col_idx) const;

    /// max_{ij} |(A^dagger A - I)_{ij}|; requires a square matrix.
    double unitarity_residual() const;

    friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);

/// The n input modes (columns, i.e. photons) and n output modes (rows) that
/// select the scattering submatrix from an N-mode unitary. Collision-free:
/// both lists strictly increasing.
struct OutcomePattern {
    std::size_t n_modes = 0;
    std::vector<std::size_t> input_modes;
    std::vector<std::size_t> output_modes;

    /// Throws InvalidPattern if any invariant fails.
    static OutcomePattern make(std::size_t n_modes, std::vector<std::size_t> inputs,
                               std::vector<std::size_t> outputs);
    /// Inputs and outputs both {0, ..., n-1}.
    static OutcomePattern first_modes(std::size_t n_modes, std::size_t n);

    std::size_t photons() const noexcept { return input_modes.size(); }

    friend bool operator==(const OutcomePattern &, const OutcomePattern &) = default;
};

/// Haar-distributed N x N unitary: Ginibre matrix, Householder QR, then each
/// column of Q multiplied by the phase of R's diagonal entry. Draws from
/// std::mt19937_64 seeded with `seed`; same seed gives the same matrix.
ComplexMatrix haar_unitary(std::size_t n_modes, std::uint64_t seed);

/// Entry (r, c) = U[output_modes[r], input_modes[c]].
ComplexMatrix extract_submatrix(const ComplexMatrix &unitary, const OutcomePattern &pattern);

/// A[r][c] = M[r][c] * conj(M[r][sigma(c)]).
ComplexMatrix interference_matrix(const ComplexMatrix &m, const Permutation &sigma);

/// SplitMix64 step, used to derive independent per-trial / per-chain seeds.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

}  // namespace distsampler

#endif
