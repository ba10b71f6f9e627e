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

#include <numeric>

#include "distsampler/errors.hpp"
#include "distsampler/oracle.hpp"
#include "distsampler/probability.hpp"
#include "test_util.hpp"

using namespace distsampler;

TEST(PrepareInput, InternalOverlapsEqualX) {
    for (double x : {0.0, 0.3, 1.0}) {
        const auto st = oracle::prepare_input(2, x, 2);
        EXPECT_NEAR(st.norm_squared(), 1.0, 1e-12);
        EXPECT_EQ(st.photon_number(), 2u);
        EXPECT_EQ(st.internal_dim, 3u);
    }
    // x = 1: only the common label is populated.
    const auto one = oracle::prepare_input(3, 1.0, 3);
    ASSERT_EQ(one.amplitudes.size(), 1u);
    const auto &occ = one.amplitudes.begin()->first;
    for (std::size_t m = 0; m < 3; ++m) EXPECT_EQ(occ[m * 4 + 0], 1);
    // x = 0: photon i carries only its private label.
    const auto zero = oracle::prepare_input(3, 0.0, 3);
    ASSERT_EQ(zero.amplitudes.size(), 1u);
    const auto &occ0 = zero.amplitudes.begin()->first;
    for (std::size_t m = 0; m < 3; ++m) EXPECT_EQ(occ0[m * 4 + m + 1], 1);
}

TEST(InternalVectors, RealizeGramMatrix) {
    std::mt19937_64 rng(2);
    const ComplexMatrix s = test_util::random_gram(4, 3, rng);
    const auto v = oracle::internal_vectors(s);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            Complex ip(0.0, 0.0);
            for (std::size_t l = 0; l < v[i].size(); ++l) ip += std::conj(v[i][l]) * v[j][l];
            EXPECT_LT(std::abs(ip - s(i, j)), 1e-12);
        }
}

TEST(EvolveAndProject, HongOuMandel) {
    for (double x : {0.0, 0.4, 0.8, 1.0}) {
        const auto st = oracle::prepare_input(2, x, 2);
        EXPECT_NEAR(oracle::evolve_and_project(st, test_util::beamsplitter(), {0, 1}), (1 - x * x) / 2, 1e-12);
    }
    const auto st = oracle::prepare_input(2, 1.0, 2);
    EXPECT_NEAR(oracle::evolve_and_project(st, test_util::beamsplitter(), {1, 1}), 0.5, 1e-12);
    EXPECT_NEAR(oracle::evolve_and_project(st, test_util::beamsplitter(), {0, 0}), 0.5, 1e-12);
}

TEST(EvolveAndProject, TotalProbabilityIsOne) {
    for (double x : {0.0, 0.5, 1.0}) {
        const ComplexMatrix u = haar_unitary(5, 3);
        const auto out = oracle::evolve(oracle::prepare_input(3, x, 5), u);
        EXPECT_EQ(out.photon_number(), 3u);
        double total = 0.0;
        for (const auto &[pattern, p] : oracle::spatial_distribution(out)) total += p;
        EXPECT_NEAR(total, 1.0, 1e-9);
    }
}

TEST(EvolveAndProject, MatchesExactProbability) {
    for (std::size_t n = 1; n <= 3; ++n) {
        for (std::size_t n_modes = n; n_modes <= 5; ++n_modes) {
            const ComplexMatrix u = haar_unitary(n_modes, 10 * n + n_modes);
            std::vector<std::size_t> inputs(n);
            std::iota(inputs.begin(), inputs.end(), 0);
            std::vector<std::size_t> outputs(n);
            std::iota(outputs.begin(), outputs.end(), n_modes - n);
            const ComplexMatrix m = extract_submatrix(u, OutcomePattern::make(n_modes, inputs, outputs));
            for (double x : {0.0, 0.5, 1.0}) {
                const double want = exact_probability(m, DistinguishabilityModel::uniform(x));
                EXPECT_NEAR(oracle::evolve_and_project(oracle::prepare_input(n, x, n_modes), u, outputs), want, 1e-9);
            }
        }
    }
}

TEST(EvolveAndProject, GeneralComplexOverlaps) {
    std::mt19937_64 rng(8);
    const ComplexMatrix s = test_util::random_gram(3, 2, rng);
    const auto model = DistinguishabilityModel::general(s);
    ASSERT_TRUE(validate_model(model).ok());
    const ComplexMatrix u = haar_unitary(5, 44);
    const std::vector<std::size_t> inputs{0, 2, 4};
    const std::vector<std::size_t> outputs{1, 2, 3};
    const auto st = oracle::prepare_input(model, inputs, 5);
    const double want = exact_probability(extract_submatrix(u, OutcomePattern::make(5, inputs, outputs)), model);
    EXPECT_NEAR(oracle::evolve_and_project(st, u, outputs), want, 1e-12);
}

TEST(EvolveAndProject, Guards) {
    const auto st = oracle::prepare_input(5, 0.5, 12);
    try {
        oracle::evolve(st, haar_unitary(12, 1));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::CostGuard);
    }
    EXPECT_THROW(oracle::evolve(oracle::prepare_input(2, 0.5, 3), haar_unitary(4, 1)), Error);
    EXPECT_THROW(oracle::prepare_input(2, 1.5, 3), Error);
}
