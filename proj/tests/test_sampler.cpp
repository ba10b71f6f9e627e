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

#include "distsampler/combinatorics.hpp"
#include "distsampler/errors.hpp"
#include "distsampler/permanent.hpp"
#include "distsampler/sampler.hpp"
#include "test_util.hpp"

using namespace distsampler;

namespace {

std::vector<double> aligned(const std::map<std::vector<std::size_t>, double> &emp,
                            const std::vector<PatternProbability> &exact) {
    std::vector<double> out;
    for (const auto &pp : exact) {
        auto it = emp.find(pp.outputs);
        out.push_back(it == emp.end() ? 0.0 : it->second);
    }
    return out;
}

std::vector<double> probabilities(const std::vector<PatternProbability> &exact) {
    std::vector<double> out;
    for (const auto &pp : exact) out.push_back(pp.probability);
    return out;
}

// (BS_01 + BS_23)(BS_02 + BS_13): the {0,1} -> {0,1} block is a scaled 50/50
// beamsplitter, so that coincidence is fully suppressed for identical photons.
ComplexMatrix four_mode_network() {
    const double h = 1.0 / std::sqrt(2.0);
    ComplexMatrix first(4, 4), second(4, 4);
    for (auto [a, b] : {std::pair{0, 2}, std::pair{1, 3}}) {
        first(a, a) = h, first(a, b) = h, first(b, a) = h, first(b, b) = -h;
    }
    for (auto [a, b] : {std::pair{0, 1}, std::pair{2, 3}}) {
        second(a, a) = h, second(a, b) = h, second(b, a) = h, second(b, b) = -h;
    }
    return second * first;
}

}  // namespace

TEST(Tvd, Examples) {
    const std::vector<double> a{0.5, 0.5}, b{1.0, 0.0}, c{0.0, 1.0};
    EXPECT_EQ(tvd(a, a), 0.0);
    EXPECT_EQ(tvd(b, c), 1.0);
    EXPECT_EQ(tvd(a, b), 0.5);
    EXPECT_THROW(tvd(a, std::vector<double>{1.0}), Error);
    const std::map<std::vector<std::size_t>, double> p{{{0}, 1.0}}, q{{{1}, 1.0}};
    EXPECT_EQ(tvd(p, q), 1.0);
}

TEST(MetropolisChain, RecoversThreeStateTarget) {
    const std::vector<double> weights{2.0, 3.0, 5.0};
    auto target = [&](int s) { return weights[s]; };
    auto propose = [](int s, std::mt19937_64 &rng) {
        std::uniform_int_distribution<int> d(1, 2);
        return (s + d(rng)) % 3;
    };
    MetropolisChain chain(0, target, propose, 123);
    std::vector<double> freq(3, 0.0);
    const int steps = 1'000'000;
    for (int i = 0; i < steps; ++i) {
        chain.step();
        freq[chain.current()] += 1.0 / steps;
    }
    EXPECT_LT(tvd(freq, std::vector<double>{0.2, 0.3, 0.5}), 0.01);
}

TEST(MhSample, SinglePhotonFollowsColumnWeights) {
    const ComplexMatrix u = haar_unitary(5, 31);
    ChainConfig cfg;
    cfg.seed = 5;
    const auto run = mh_sample(u, {2}, 0.7, 0, 100'000, cfg);
    ASSERT_EQ(run.samples.size(), 100'000u);
    const auto emp = empirical_distribution(run.samples);
    std::vector<double> want, got;
    for (std::size_t m = 0; m < 5; ++m) {
        want.push_back(std::norm(u(m, 2)));
        auto it = emp.find({m});
        got.push_back(it == emp.end() ? 0.0 : it->second);
    }
    EXPECT_LT(tvd(got, want), 0.02);
    EXPECT_GT(run.diagnostics.acceptance_rate(), 0.0);
}

TEST(MhSample, ThreePhotonsMatchExactEnumeration) {
    const ComplexMatrix u = haar_unitary(6, 2024);
    const std::vector<std::size_t> inputs{0, 1, 2};
    ChainConfig cfg;
    cfg.seed = 77;
    const auto run = mh_sample(u, inputs, 0.5, 3, 100'000, cfg);
    const auto exact = output_distribution(u, inputs, DistinguishabilityModel::uniform(0.5));
    EXPECT_LT(tvd(aligned(empirical_distribution(run.samples), exact), probabilities(exact)), 0.05);
}

TEST(MhSample, DistinguishableChainMatchesPermanentOfAbsSquared) {
    const ComplexMatrix u = haar_unitary(6, 99);
    const std::vector<std::size_t> inputs{0, 2, 4};
    ChainConfig cfg;
    cfg.seed = 3;
    cfg.proposal = Proposal::UniformPattern;
    const auto run = mh_sample(u, inputs, 0.0, 0, 100'000, cfg);
    // Brute force: Perm(|M|^2) by the naive sum for every output triple.
    std::map<std::vector<std::size_t>, double> want;
    double total = 0.0;
    for (const auto &outs : enumerate_subsets(6, 3)) {
        const double p =
            permanent_naive(extract_submatrix(u, OutcomePattern::make(6, inputs, outs)).abs_squared()).real();
        want[outs] = p;
        total += p;
    }
    for (auto &[k, v] : want) v /= total;
    EXPECT_LT(tvd(empirical_distribution(run.samples), want), 0.05);
}

TEST(MhSample, SeededChainsAreReproducible) {
    const ComplexMatrix u = haar_unitary(7, 1);
    ChainConfig cfg;
    cfg.seed = 9;
    cfg.thinning = 3;
    const auto a = mh_sample(u, {0, 1, 2}, 0.8, 2, 500, cfg);
    const auto b = mh_sample(u, {0, 1, 2}, 0.8, 2, 500, cfg);
    EXPECT_EQ(a.samples, b.samples);
    EXPECT_EQ(a.diagnostics.steps, cfg.burn_in + 500 * 3);
    cfg.seed = 10;
    EXPECT_NE(mh_sample(u, {0, 1, 2}, 0.8, 2, 500, cfg).samples, a.samples);
}

TEST(MhSample, NeverEmitsNonPositivePatterns) {
    // Truncated values at large x can go negative; those patterns must not appear.
    const ComplexMatrix u = haar_unitary(6, 5);
    const std::vector<std::size_t> inputs{0, 1, 2, 3};
    ChainConfig cfg;
    cfg.seed = 1;
    const auto run = mh_sample(u, inputs, 0.95, 2, 2000, cfg);
    for (const auto &s : run.samples) {
        EXPECT_GT(truncated_probability(extract_submatrix(u, s), 0.95, 2).p_k, 0.0);
    }
}

TEST(MhSample, StuckChainAndBadArguments) {
    ChainConfig cfg;
    cfg.retry_budget = 20;
    try {
        mh_sample(test_util::beamsplitter(), {0, 1}, 1.0, 2, 10, cfg);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::ChainStuck);
    }
    try {
        mh_sample(haar_unitary(4, 1), {0, 1}, 0.5, 3, 10, cfg);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidOrder);
    }
    cfg.thinning = 0;
    EXPECT_THROW(mh_sample(haar_unitary(4, 1), {0, 1}, 0.5, 2, 10, cfg), Error);
}

TEST(MhSampleChains, DeterministicAcrossRuns) {
    const ComplexMatrix u = haar_unitary(6, 8);
    ChainConfig cfg;
    cfg.seed = 4;
    cfg.burn_in = 100;
    const auto a = mh_sample_chains(u, {0, 1, 2}, 0.5, 3, 1001, 4, cfg);
    const auto b = mh_sample_chains(u, {0, 1, 2}, 0.5, 3, 1001, 4, cfg);
    ASSERT_EQ(a.samples.size(), 1001u);
    EXPECT_EQ(a.samples, b.samples);
}

TEST(ExactSampler, TrivialNetwork) {
    const auto samples = exact_sampler(ComplexMatrix::identity(3), {0, 1, 2}, DistinguishabilityModel::uniform(0.3), 50, 1);
    for (const auto &s : samples) EXPECT_EQ(s.output_modes, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(ExactSampler, HongOuMandelCoincidenceNeverSampled) {
    const ComplexMatrix u = four_mode_network();
    ASSERT_LT(u.unitarity_residual(), 1e-12);
    const auto samples = exact_sampler(u, {0, 1}, DistinguishabilityModel::uniform(1.0), 20'000, 2);
    const auto emp = empirical_distribution(samples);
    EXPECT_FALSE(emp.contains({0, 1}));
    const auto partial = empirical_distribution(exact_sampler(u, {0, 1}, DistinguishabilityModel::uniform(0.0), 20'000, 2));
    EXPECT_TRUE(partial.contains({0, 1}));
}

TEST(ExactSampler, ChiSquareAgainstEnumeration) {
    const ComplexMatrix u = haar_unitary(6, 61);
    const std::vector<std::size_t> inputs{0, 1, 2};
    const auto model = DistinguishabilityModel::uniform(0.5);
    const auto exact = output_distribution(u, inputs, model);
    const std::size_t count = 100'000;
    const auto emp = empirical_distribution(exact_sampler(u, inputs, model, count, 12));
    double chi2 = 0.0;
    std::size_t cells = 0;
    for (const auto &pp : exact) {
        if (pp.probability <= 0.0) continue;
        const double expected = pp.probability * count;
        auto it = emp.find(pp.outputs);
        const double observed = it == emp.end() ? 0.0 : it->second * count;
        chi2 += (observed - expected) * (observed - expected) / expected;
        ++cells;
    }
    // df = 19: mean 19, sd ~6.2.
    EXPECT_LT(chi2, (cells - 1) + 6.0 * std::sqrt(2.0 * (cells - 1)));
}
