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

#include <gtest/gtest.h>

#include <cmath>

#include "distsampler/errors.hpp"
#include "distsampler/matrix.hpp"
#include "test_util.hpp"

using namespace distsampler;

TEST(HaarUnitary, SingleModeIsAPhase) {
    for (std::uint64_t seed : {0u, 1u, 99u}) {
        const ComplexMatrix u = haar_unitary(1, seed);
        EXPECT_NEAR(std::abs(u(0, 0)), 1.0, 1e-12);
    }
}

TEST(HaarUnitary, UnitaryUpTo64Modes) {
    for (std::size_t n : {2u, 4u, 7u, 16u, 33u, 64u}) {
        EXPECT_LT(haar_unitary(n, 1234 + n).unitarity_residual(), 1e-12) << "N=" << n;
    }
}

TEST(HaarUnitary, SameSeedIsBitIdentical) {
    EXPECT_EQ(haar_unitary(6, 42), haar_unitary(6, 42));
    EXPECT_NE(haar_unitary(6, 42), haar_unitary(6, 43));
}

TEST(HaarUnitary, SecondMomentIsOneOverN) {
    // E|U_00|^2 = 1/N under the Haar measure.
    const std::size_t n = 4;
    const int trials = 10000;
    double sum = 0.0, sq = 0.0;
    for (int t = 0; t < trials; ++t) {
        const double v = std::norm(haar_unitary(n, static_cast<std::uint64_t>(t))(0, 0));
        sum += v;
        sq += v * v;
    }
    const double mean = sum / trials;
    const double se = std::sqrt((sq / trials - mean * mean) / trials);
    EXPECT_LT(std::abs(mean - 0.25), 3 * se);
}

TEST(HaarUnitary, ZeroModesRejected) {
    try {
        haar_unitary(0, 1);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidDimension);
    }
}

TEST(ExtractSubmatrix, IdentityBlocks) {
    const ComplexMatrix id = ComplexMatrix::identity(4);
    EXPECT_EQ(extract_submatrix(id, OutcomePattern::make(4, {0, 1}, {0, 1})), ComplexMatrix::identity(2));
    EXPECT_EQ(extract_submatrix(id, OutcomePattern::make(4, {0, 1}, {2, 3})), ComplexMatrix(2, 2));
}

TEST(ExtractSubmatrix, RowIsOutputColumnIsInput) {
    const ComplexMatrix u = haar_unitary(4, 5);
    const ComplexMatrix m = extract_submatrix(u, OutcomePattern::make(4, {0}, {2}));
    ASSERT_EQ(m.rows(), 1u);
    EXPECT_EQ(m(0, 0), u(2, 0));
}

TEST(ExtractSubmatrix, FullPatternReturnsUnitary) {
    const ComplexMatrix u = haar_unitary(5, 8);
    EXPECT_EQ(extract_submatrix(u, OutcomePattern::first_modes(5, 5)), u);
}

TEST(ExtractSubmatrix, OutOfRangeIsInvalidPattern) {
    const ComplexMatrix u = haar_unitary(3, 8);
    OutcomePattern p{5, {0, 4}, {1, 2}};
    try {
        extract_submatrix(u, p);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidPattern);
    }
}

TEST(OutcomePattern, RejectsDuplicatesAndUnsortedModes) {
    EXPECT_THROW(OutcomePattern::make(4, {0, 0}, {1, 2}), Error);
    EXPECT_THROW(OutcomePattern::make(4, {1, 0}, {1, 2}), Error);
    EXPECT_THROW(OutcomePattern::make(4, {0, 1}, {1}), Error);
    EXPECT_THROW(OutcomePattern::make(1, {0, 1}, {0, 1}), Error);
    EXPECT_NO_THROW(OutcomePattern::make(4, {0, 3}, {1, 2}));
}

TEST(ComplexMatrix, RejectsNonFiniteAndWrongSize) {
    EXPECT_THROW(ComplexMatrix(2, 2, {1.0, 2.0, 3.0}), Error);
    EXPECT_THROW(ComplexMatrix(1, 1, {Complex(NAN, 0.0)}), Error);
}

TEST(InterferenceMatrix, IdentityPermutationGivesAbsSquared) {
    std::mt19937_64 rng(3);
    const ComplexMatrix m = test_util::random_matrix(4, 4, rng);
    const ComplexMatrix a = interference_matrix(m, Permutation::identity(4));
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            EXPECT_EQ(a(r, c).imag(), 0.0);
            EXPECT_NEAR(a(r, c).real(), std::norm(m(r, c)), 1e-15);
            EXPECT_GE(a(r, c).real(), 0.0);
        }
    EXPECT_EQ(interference_matrix(ComplexMatrix::identity(2), Permutation::identity(2)), ComplexMatrix::identity(2));
}

TEST(InterferenceMatrix, BeamsplitterSwap) {
    // M[r][c] conj(M[r][1-c]) with M = [[1,1],[1,-1]]/sqrt2: row 0 -> 1/2, 1/2; row 1 -> -1/2, -1/2.
    const ComplexMatrix a = interference_matrix(test_util::beamsplitter(), Permutation({1, 0}));
    EXPECT_NEAR(a(0, 0).real(), 0.5, 1e-15);
    EXPECT_NEAR(a(0, 1).real(), 0.5, 1e-15);
    EXPECT_NEAR(a(1, 0).real(), -0.5, 1e-15);
    EXPECT_NEAR(a(1, 1).real(), -0.5, 1e-15);
}

TEST(InterferenceMatrix, DimensionMismatch) {
    try {
        interference_matrix(ComplexMatrix::identity(3), Permutation::identity(2));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidDimension);
    }
}

TEST(Permutation, RejectsNonBijection) {
    EXPECT_THROW(Permutation({0, 0}), Error);
    EXPECT_THROW(Permutation({0, 2}), Error);
    const Permutation p({2, 0, 1});
    EXPECT_EQ(p.inverse(), Permutation({1, 2, 0}));
    EXPECT_EQ(p.displaced_count(), 3u);
}
