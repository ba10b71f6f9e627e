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

#ifndef DISTSAMPLER_PERMANENT_HPP
#define DISTSAMPLER_PERMANENT_HPP

#include <cstddef>
#include <span>

#include "distsampler/matrix.hpp"

namespace distsampler {

/// Perm(A) by Ryser inclusion-exclusion, visiting column subsets in Gray-code
/// order so each step updates the row sums with a single column: O(2^n n).
/// A 0x0 matrix has permanent 1. Plain double accumulation, no compensated
/// summation; accurate to ~1e-12 relative for the n <= 16 used here.
Complex permanent_ryser(const ComplexMatrix &a);

/// Sum over all n! permutations. Test oracle; refuses n > 10 (CostGuard).
Complex permanent_naive(const ComplexMatrix &a);

/// Permanent of a matrix with real nonnegative entries (|M|^2 blocks). Exact
/// Ryser in real arithmetic. Throws InvalidInput for an entry with
/// |imag| > 1e-14 or real part < -1e-14.
Complex permanent_nonneg(const ComplexMatrix &a);

namespace kernels {

// Raw row-major kernels used inside the probability engines. `n` is the
// matrix dimension; `a.size()` must be n*n.
Complex ryser(std::span<const Complex> a, std::size_t n);
double ryser(std::span<const double> a, std::size_t n);

}  // namespace kernels

}  // namespace distsampler

#endif
