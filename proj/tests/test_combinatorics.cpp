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

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>

#include "distsampler/combinatorics.hpp"
#include "distsampler/errors.hpp"

using namespace distsampler;

namespace {

// Brute force: permutations of n elements bucketed by displaced count.
std::vector<std::uint64_t> displaced_histogram(std::size_t n) {
    std::vector<std::uint64_t> hist(n + 1, 0);
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        std::size_t d = 0;
        for (std::size_t i = 0; i < n; ++i) d += p[i] != i;
        ++hist[d];
    } while (std::next_permutation(p.begin(), p.end()));
    return hist;
}

}  // namespace

TEST(Subfactorial, KnownValues) {
    EXPECT_EQ(subfactorial(0), 1u);
    EXPECT_EQ(subfactorial(1), 0u);
    EXPECT_EQ(subfactorial(2), 1u);
    EXPECT_EQ(subfactorial(4), 9u);
    EXPECT_EQ(subfactorial(5), 44u);
    EXPECT_EQ(subfactorial(20), 895014631192902121ull);
}

TEST(Subfactorial, OverflowIsAnError) {
    try {
        subfactorial(21);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::CostGuard);
    }
}

TEST(Subfactorial, MatchesExhaustiveCount) {
    for (std::size_t j = 0; j <= 9; ++j) EXPECT_EQ(subfactorial(j), displaced_histogram(j)[j]) << j;
}

TEST(Rencontres, KnownValuesAndErrors) {
    EXPECT_EQ(rencontres(4, 2), 6u);
    for (std::size_t n = 1; n <= 12; ++n) EXPECT_EQ(rencontres(n, 1), 0u);
    EXPECT_THROW(rencontres(3, 4), Error);
}

TEST(Rencontres, PartitionOfSymmetricGroup) {
    for (std::size_t n = 0; n <= 10; ++n) {
        std::uint64_t total = 0;
        for (std::size_t j = 0; j <= n; ++j) total += rencontres(n, j);
        EXPECT_EQ(total, factorial(n)) << n;
    }
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto hist = displaced_histogram(n);
        for (std::size_t j = 0; j <= n; ++j) EXPECT_EQ(rencontres(n, j), hist[j]);
    }
}

TEST(Binomial, CheckedAndExact) {
    EXPECT_EQ(binomial(10, 4), 210u);
    EXPECT_EQ(binomial(5, 7), 0u);
    EXPECT_EQ(binomial(62, 31), 465428353255261088ull);
    EXPECT_THROW(binomial(70, 35), Error);
}

TEST(DerangementStream, EmptyAndSmallCases) {
    auto zero = enumerate_derangements(0);
    ASSERT_EQ(zero.size(), 1u);
    EXPECT_EQ(zero[0].size(), 0u);
    EXPECT_TRUE(enumerate_derangements(1).empty());
    auto two = enumerate_derangements(2);
    ASSERT_EQ(two.size(), 1u);
    EXPECT_EQ(two[0], Permutation({1, 0}));
}

TEST(DerangementStream, CountsDistinctFixedPointFreeLexicographic) {
    for (std::size_t j = 0; j <= 8; ++j) {
        const auto all = enumerate_derangements(j);
        EXPECT_EQ(all.size(), subfactorial(j));
        std::set<std::vector<std::size_t>> seen;
        for (std::size_t i = 0; i < all.size(); ++i) {
            EXPECT_EQ(all[i].displaced_count(), j);
            EXPECT_TRUE(seen.insert(all[i].mapping()).second);
            if (i > 0) EXPECT_LT(all[i - 1].mapping(), all[i].mapping());
        }
    }
    EXPECT_EQ(enumerate_derangements(5).size(), 44u);
}

TEST(SubsetStream, SmallCasesAndCounts) {
    const auto empty = enumerate_subsets(3, 0);
    ASSERT_EQ(empty.size(), 1u);
    EXPECT_TRUE(empty[0].empty());
    const auto pairs = enumerate_subsets(3, 2);
    EXPECT_EQ(pairs, (std::vector<std::vector<std::size_t>>{{0, 1}, {0, 2}, {1, 2}}));
    EXPECT_EQ(enumerate_subsets(10, 4).size(), 210u);
    for (std::size_t n = 0; n <= 12; ++n)
        for (std::size_t j = 0; j <= n; ++j) {
            const auto all = enumerate_subsets(n, j);
            EXPECT_EQ(all.size(), binomial(n, j));
            EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
            EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
        }
}

TEST(TermCount, FormulaValues) {
    EXPECT_EQ(term_count(5, 0).permanents, 1u);
    EXPECT_EQ(term_count(5, 1).permanents, 1u);
    EXPECT_EQ(term_count(5, 2).permanents, 101u);
    EXPECT_EQ(term_count(5, 2).steps, 100u * 4 * 2);
    EXPECT_THROW(term_count(3, 4), Error);
}

TEST(TermCount, MatchesExhaustiveEnumerationAtEight) {
    // Each permutation sigma displacing j photons costs one j x j complex
    // permanent per row subset of size j.
    const std::size_t n = 8;
    std::vector<std::uint64_t> perms_by_j(n + 1, 0);
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        std::size_t d = 0;
        for (std::size_t i = 0; i < n; ++i) d += p[i] != i;
        std::uint64_t row_sets = 0;
        for (unsigned mask = 0; mask < (1u << n); ++mask) row_sets += std::popcount(mask) == static_cast<int>(d);
        perms_by_j[d] += row_sets;
    } while (std::next_permutation(p.begin(), p.end()));
    std::uint64_t cumulative = 0, steps = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        cumulative += perms_by_j[k];
        steps += perms_by_j[k] * (std::uint64_t{1} << k) * k;
        EXPECT_EQ(term_count(n, k).permanents, cumulative) << k;
        EXPECT_EQ(term_count(n, k).steps, steps) << k;
    }
    // sum_j C(n,j) !j = n!
    std::uint64_t s = 0;
    for (std::size_t j = 0; j <= n; ++j) s += binomial(n, j) * subfactorial(j);
    EXPECT_EQ(s, factorial(n));
}

TEST(TermCount, LogStepsAgreesWithExactCount) {
    for (std::size_t n : {5u, 8u, 12u})
        for (std::size_t k = 2; k <= n; ++k)
            EXPECT_NEAR(log10_term_steps(n, k), std::log10(static_cast<double>(term_count(n, k).steps)), 1e-9);
    EXPECT_TRUE(std::isfinite(log10_term_steps(50, 49)));
}

TEST(FixedPointClass, Bounds) {
    EXPECT_EQ(FixedPointClass::make(5, 1).size(), 0u);
    EXPECT_EQ(FixedPointClass::make(5, 3).size(), 20u);
    EXPECT_THROW(FixedPointClass::make(2, 3), Error);
}
