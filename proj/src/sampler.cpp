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

#include "distsampler/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "distsampler/combinatorics.hpp"
#include "distsampler/errors.hpp"

namespace distsampler {

namespace {

using Modes = std::vector<std::size_t>;

Modes random_pattern(std::size_t n_modes, std::size_t n, std::mt19937_64 &rng) {
    Modes all(n_modes);
    std::iota(all.begin(), all.end(), 0);
    // Partial Fisher-Yates: the first n slots become a uniform n-subset.
    for (std::size_t i = 0; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, n_modes - 1);
        std::swap(all[i], all[pick(rng)]);
    }
    all.resize(n);
    std::sort(all.begin(), all.end());
    return all;
}

Modes swap_move(const Modes &current, std::size_t n_modes, std::mt19937_64 &rng) {
    const std::size_t n = current.size();
    if (n == 0 || n == n_modes) return current;
    std::uniform_int_distribution<std::size_t> pick_occupied(0, n - 1);
    std::uniform_int_distribution<std::size_t> pick_empty(0, n_modes - n - 1);
    const std::size_t slot = pick_occupied(rng);
    std::size_t target = pick_empty(rng);
    // target-th unoccupied mode
    std::size_t mode = 0;
    for (std::size_t p = 0;; ++mode) {
        if (p < n && current[p] == mode) {
            ++p;
            continue;
        }
        if (target == 0) break;
        --target;
    }
    Modes next = current;
    next[slot] = mode;
    std::sort(next.begin(), next.end());
    return next;
}

class TargetCache {
   public:
    TargetCache(const ComplexMatrix &unitary, const Modes &inputs, double x, std::size_t k,
                const CostLimits &limits)
        : unitary_(unitary), inputs_(inputs), x_(x), k_(k), limits_(limits) {}

    double operator()(const Modes &outputs) {
        if (auto it = cache_.find(outputs); it != cache_.end()) return it->second;
        const OutcomePattern pattern = OutcomePattern::make(unitary_.rows(), inputs_, outputs);
        const double p =
            truncated_probability(extract_submatrix(unitary_, pattern), x_, k_, limits_, Execution::Serial).p_k;
        const double target = p > 0.0 ? p : 0.0;
        cache_.emplace(outputs, target);
        return target;
    }

    std::size_t size() const { return cache_.size(); }

   private:
    const ComplexMatrix &unitary_;
    const Modes &inputs_;
    double x_;
    std::size_t k_;
    CostLimits limits_;
    std::map<Modes, double> cache_;
};

void check_chain_inputs(const ComplexMatrix &unitary, const Modes &inputs, double x, std::size_t k,
                        const ChainConfig &cfg) {
    if (!unitary.is_square()) throw Error(ErrorKind::InvalidDimension, "invalid dimension: unitary must be square");
    // Validates the input list.
    OutcomePattern::make(unitary.rows(), inputs, inputs);
    if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorKind::InvalidInput, "invalid input: x must lie in [0, 1]");
    if (k > inputs.size()) throw Error(ErrorKind::InvalidOrder, "invalid order: k exceeds photon count");
    if (cfg.thinning < 1) throw Error(ErrorKind::InvalidInput, "invalid input: thinning must be >= 1");
}

}  // namespace

SampleRun mh_sample(const ComplexMatrix &unitary, const std::vector<std::size_t> &inputs, double x,
                    std::size_t k, std::size_t count, const ChainConfig &cfg, const CostLimits &limits) {
    check_chain_inputs(unitary, inputs, x, k, cfg);
    const std::size_t n_modes = unitary.rows();
    const std::size_t n = inputs.size();
    TargetCache cache(unitary, inputs, x, k, limits);
    SampleRun run;

    std::mt19937_64 start_rng(derive_seed(cfg.seed, 0));
    Modes start;
    double start_p = 0.0;
    for (std::size_t attempt = 0; attempt < cfg.retry_budget && start_p <= 0.0; ++attempt) {
        start = random_pattern(n_modes, n, start_rng);
        start_p = cache(start);
        run.diagnostics.start_attempts = attempt + 1;
    }
    if (start_p <= 0.0) {
        throw Error(ErrorKind::ChainStuck, "chain stuck: no output pattern with positive probability found");
    }

    auto target = [&cache](const Modes &m) { return cache(m); };
    auto propose = [&](const Modes &current, std::mt19937_64 &rng) {
        return cfg.proposal == Proposal::SingleModeSwap ? swap_move(current, n_modes, rng)
                                                        : random_pattern(n_modes, n, rng);
    };
    MetropolisChain chain(std::move(start), target, propose, cfg.seed);

    for (std::size_t s = 0; s < cfg.burn_in; ++s) chain.step();
    run.samples.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t t = 0; t < cfg.thinning; ++t) chain.step();
        run.samples.push_back(OutcomePattern{n_modes, inputs, chain.current()});
    }
    run.diagnostics.steps = chain.steps();
    run.diagnostics.accepted = chain.accepted();
    run.diagnostics.states_evaluated = cache.size();
    return run;
}

SampleRun mh_sample_chains(const ComplexMatrix &unitary, const std::vector<std::size_t> &inputs, double x,
                           std::size_t k, std::size_t count, std::size_t chains, const ChainConfig &cfg,
                           const CostLimits &limits) {
    if (chains == 0) throw Error(ErrorKind::InvalidInput, "invalid input: chains must be >= 1");
    check_chain_inputs(unitary, inputs, x, k, cfg);
    std::vector<SampleRun> runs(chains);
    std::vector<int> failed(chains, 0);
    std::vector<Error> errors(chains, Error(ErrorKind::ChainStuck, ""));
    const auto c_count = static_cast<std::ptrdiff_t>(chains);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t c = 0; c < c_count; ++c) {
        ChainConfig local = cfg;
        local.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(c));
        const std::size_t share = count / chains + (static_cast<std::size_t>(c) < count % chains ? 1 : 0);
        try {
            runs[c] = mh_sample(unitary, inputs, x, k, share, local, limits);
        } catch (const Error &e) {
            failed[c] = 1;
            errors[c] = e;
        }
    }
    SampleRun out;
    for (std::size_t c = 0; c < chains; ++c) {
        if (failed[c]) throw errors[c];
        out.samples.insert(out.samples.end(), runs[c].samples.begin(), runs[c].samples.end());
        out.diagnostics.steps += runs[c].diagnostics.steps;
        out.diagnostics.accepted += runs[c].diagnostics.accepted;
        out.diagnostics.states_evaluated += runs[c].diagnostics.states_evaluated;
        out.diagnostics.start_attempts += runs[c].diagnostics.start_attempts;
    }
    return out;
}

std::vector<PatternProbability> output_distribution(const ComplexMatrix &unitary,
                                                    const std::vector<std::size_t> &inputs,
                                                    const DistinguishabilityModel &model,
                                                    const CostLimits &limits) {
    if (!unitary.is_square()) throw Error(ErrorKind::InvalidDimension, "invalid dimension: unitary must be square");
    const std::size_t n_modes = unitary.rows();
    OutcomePattern::make(n_modes, inputs, inputs);
    if (binomial(n_modes, inputs.size()) > 100'000) {
        throw Error(ErrorKind::CostGuard, "cost guard: too many output patterns to enumerate");
    }
    std::vector<PatternProbability> out;
    double total = 0.0;
    for (SubsetStream s(n_modes, inputs.size()); s.next();) {
        const OutcomePattern pattern = OutcomePattern::make(n_modes, inputs, s.current());
        const double p = exact_probability(extract_submatrix(unitary, pattern), model, limits);
        out.push_back({s.current(), p});
        total += p;
    }
    if (!(total > 0.0)) throw Error(ErrorKind::NumericalInconsistency, "numerical inconsistency: zero total probability");
    for (auto &pp : out) pp.probability /= total;
    return out;
}

std::vector<OutcomePattern> exact_sampler(const ComplexMatrix &unitary, const std::vector<std::size_t> &inputs,
                                          const DistinguishabilityModel &model, std::size_t count,
                                          std::uint64_t seed, const CostLimits &limits) {
    const auto dist = output_distribution(unitary, inputs, model, limits);
    std::vector<double> cdf(dist.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        acc += dist[i].probability;
        cdf[i] = acc;
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::vector<OutcomePattern> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double u = uniform(rng) * acc;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        std::size_t idx = static_cast<std::size_t>(it - cdf.begin());
        if (idx >= dist.size()) idx = dist.size() - 1;
        // Skip zero-probability patterns that share a CDF value with a neighbour.
        while (dist[idx].probability <= 0.0 && idx + 1 < dist.size()) ++idx;
        out.push_back(OutcomePattern{unitary.rows(), inputs, dist[idx].outputs});
    }
    return out;
}

std::map<std::vector<std::size_t>, double> empirical_distribution(std::span<const OutcomePattern> samples) {
    std::map<std::vector<std::size_t>, double> freq;
    for (const auto &s : samples) freq[s.output_modes] += 1.0;
    for (auto &[k, v] : freq) v /= static_cast<double>(samples.size());
    return freq;
}

double tvd(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw Error(ErrorKind::InvalidInput, "invalid input: distributions have different supports");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
    return 0.5 * s;
}

double tvd(const std::map<std::vector<std::size_t>, double> &a, const std::map<std::vector<std::size_t>, double> &b) {
    double s = 0.0;
    for (const auto &[k, v] : a) {
        auto it = b.find(k);
        s += std::abs(v - (it == b.end() ? 0.0 : it->second));
    }
    for (const auto &[k, v] : b)
        if (!a.contains(k)) s += std::abs(v);
    return 0.5 * s;
}

}  // namespace distsampler
