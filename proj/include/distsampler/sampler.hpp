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

#ifndef DISTSAMPLER_SAMPLER_HPP
#define DISTSAMPLER_SAMPLER_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <vector>

#include "distsampler/distinguishability.hpp"
#include "distsampler/matrix.hpp"
#include "distsampler/probability.hpp"

namespace distsampler {

enum class Proposal {
    /// Move one photon from an occupied output mode to an empty one.
    SingleModeSwap,
    /// Draw a fresh collision-free pattern uniformly at random.
    UniformPattern,
};

struct ChainConfig {
    std::size_t burn_in = 1000;
    std::size_t thinning = 1;
    Proposal proposal = Proposal::SingleModeSwap;
    std::uint64_t seed = 0;
    /// Random starting patterns tried before giving up with ChainStuck.
    std::size_t retry_budget = 1000;
};

/// Metropolis chain for a symmetric proposal: a proposed state y is accepted
/// with probability min(1, target(y) / target(current)); states with
/// target <= 0 are never entered. The start state must have target > 0.
template <typename State, typename Target, typename Propose>
class MetropolisChain {
   public:
    MetropolisChain(State start, Target target, Propose propose, std::uint64_t seed)
        : target_(std::move(target)), propose_(std::move(propose)), rng_(seed), current_(std::move(start)) {
        current_p_ = target_(current_);
    }

    /// One proposal; returns true if it was accepted.
    bool step() {
        State proposal = propose_(current_, rng_);
        const double u = uniform_(rng_);
        ++steps_;
        const double p = target_(proposal);
        if (p > 0.0 && u * current_p_ < p) {
            current_ = std::move(proposal);
            current_p_ = p;
            ++accepted_;
            return true;
        }
        return false;
    }

    const State &current() const noexcept { return current_; }
    double current_target() const noexcept { return current_p_; }
    std::size_t steps() const noexcept { return steps_; }
    std::size_t accepted() const noexcept { return accepted_; }
    std::mt19937_64 &rng() noexcept { return rng_; }

   private:
    Target target_;
    Propose propose_;
    std::mt19937_64 rng_;
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
    State current_;
    double current_p_ = 0.0;
    std::size_t steps_ = 0;
    std::size_t accepted_ = 0;
};

struct ChainDiagnostics {
    std::size_t steps = 0;
    std::size_t accepted = 0;
    std::size_t states_evaluated = 0;
    std::size_t start_attempts = 0;
    double acceptance_rate() const { return steps ? static_cast<double>(accepted) / steps : 0.0; }
};

struct SampleRun {
    std::vector<OutcomePattern> samples;
    ChainDiagnostics diagnostics;
};

/// Metropolis-Hastings over collision-free output patterns with target
/// max(0, P_k). Both proposals are symmetric, so a move y is accepted with
/// probability min(1, P_k(y) / P_k(current)). P_k is memoized per pattern.
/// Throws InvalidInput for a bad config, InvalidOrder for k > n, ChainStuck
/// when no start with P_k > 0 is found within cfg.retry_budget draws.
SampleRun mh_sample(const ComplexMatrix &unitary, const std::vector<std::size_t> &inputs, double x,
                    std::size_t k, std::size_t count, const ChainConfig &cfg,
                    const CostLimits &limits = CostLimits::from_env());

/// `chains` independent chains with seeds derive_seed(cfg.seed, c), run in
/// parallel; samples are concatenated in chain order and the diagnostics summed.
SampleRun mh_sample_chains(const ComplexMatrix &unitary, const std::vector<std::size_t> &inputs, double x,
                           std::size_t k, std::size_t count, std::size_t chains, const ChainConfig &cfg,
                           const CostLimits &limits = CostLimits::from_env());

struct PatternProbability {
    std::vector<std::size_t> outputs;
    double probability = 0.0;
};

/// exact_probability for every size-n output subset (lexicographic), normalized
/// over that set. Throws CostGuard if C(N, n) > 1e5.
std::vector<PatternProbability> output_distribution(const ComplexMatrix &unitary,
                                                    const std::vector<std::size_t> &inputs,
                                                    const DistinguishabilityModel &model,
                                                    const CostLimits &limits = CostLimits::from_env());

/// Inverse-CDF sampling from output_distribution.
std::vector<OutcomePattern> exact_sampler(const ComplexMatrix &unitary, const std::vector<std::size_t> &inputs,
                                          const DistinguishabilityModel &model, std::size_t count,
                                          std::uint64_t seed, const CostLimits &limits = CostLimits::from_env());

/// Frequencies of each output pattern among the samples.
std::map<std::vector<std::size_t>, double> empirical_distribution(std::span<const OutcomePattern> samples);

/// (1/2) sum |a_i - b_i|. Throws InvalidInput if the lengths differ.
double tvd(std::span<const double> a, std::span<const double> b);
/// Same over keyed distributions; a key missing on one side counts as 0.
double tvd(const std::map<std::vector<std::size_t>, double> &a, const std::map<std::vector<std::size_t>, double> &b);

}  // namespace distsampler

#endif
