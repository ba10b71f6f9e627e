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

#include "distsampler/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "distsampler/combinatorics.hpp"
#include "distsampler/errors.hpp"

namespace distsampler::oracle {

namespace {

constexpr std::uint64_t kMaxExpansion = 10'000'000;
constexpr std::uint64_t kMaxBasis = 100'000;

double occupation_factorials(const Occupation &occ) {
    double f = 1.0;
    for (std::uint8_t k : occ) f *= static_cast<double>(factorial(k));
    return f;
}

LabeledFockState product_state(const std::vector<std::vector<Complex>> &vectors,
                               const std::vector<std::size_t> &inputs, std::size_t n_modes) {
    const std::size_t n = inputs.size();
    const std::size_t dim = vectors.empty() ? 1 : vectors.front().size();
    for (std::size_t m : inputs)
        if (m >= n_modes) throw Error(ErrorKind::InvalidPattern, "invalid pattern: input mode out of range");
    LabeledFockState state{n_modes, dim, {}};
    std::vector<std::size_t> labels(n, 0);
    for (;;) {
        Complex amp(1.0, 0.0);
        Occupation occ(n_modes * dim, 0);
        for (std::size_t i = 0; i < n; ++i) {
            amp *= vectors[i][labels[i]];
            ++occ[inputs[i] * dim + labels[i]];
        }
        if (amp != Complex(0.0, 0.0)) {
            // Distinct spatial modes commute and are orthogonal, but repeated
            // inputs need the bosonic normalization of the occupied slots.
            state.amplitudes[occ] += amp * std::sqrt(occupation_factorials(occ));
        }
        std::size_t i = 0;
        while (i < n && ++labels[i] == dim) labels[i++] = 0;
        if (i == n) break;
    }
    return state;
}

}  // namespace

double LabeledFockState::norm_squared() const {
    double s = 0.0;
    for (const auto &[occ, amp] : amplitudes) s += std::norm(amp);
    return s;
}

std::size_t LabeledFockState::photon_number() const {
    std::size_t count = 0;
    bool first = true;
    for (const auto &[occ, amp] : amplitudes) {
        std::size_t c = 0;
        for (std::uint8_t k : occ) c += k;
        if (first) {
            count = c;
            first = false;
        } else if (c != count) {
            throw Error(ErrorKind::NumericalInconsistency, "photon number not conserved");
        }
    }
    return count;
}

std::vector<std::vector<Complex>> internal_vectors(const ComplexMatrix &s) {
    const auto n = static_cast<Eigen::Index>(s.rows());
    Eigen::MatrixXcd e(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c) e(r, c) = s(r, c);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(e);
    // S = V D V^dagger = W^dagger W with W = sqrt(D) V^dagger.
    const Eigen::MatrixXcd w =
        solver.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal() * solver.eigenvectors().adjoint();
    std::vector<std::vector<Complex>> out(static_cast<std::size_t>(n), std::vector<Complex>(n));
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index l = 0; l < n; ++l) out[j][l] = w(l, j);
    return out;
}

LabeledFockState prepare_input(std::size_t n, double x, std::size_t n_modes) {
    if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorKind::InvalidInput, "invalid input: x must lie in [0, 1]");
    if (n > n_modes) throw Error(ErrorKind::InvalidPattern, "invalid pattern: more photons than modes");
    // Label 0 is the common internal state, label i + 1 is private to photon i.
    std::vector<std::vector<Complex>> vectors(n, std::vector<Complex>(n + 1, 0.0));
    std::vector<std::size_t> inputs(n);
    for (std::size_t i = 0; i < n; ++i) {
        vectors[i][0] = std::sqrt(x);
        vectors[i][i + 1] = std::sqrt(1.0 - x);
        inputs[i] = i;
    }
    return product_state(vectors, inputs, n_modes);
}

LabeledFockState prepare_input(const DistinguishabilityModel &model, const std::vector<std::size_t> &inputs,
                               std::size_t n_modes) {
    require_valid(model);
    const ComplexMatrix s = model.overlap_matrix(inputs.size());
    return product_state(internal_vectors(s), inputs, n_modes);
}

LabeledFockState evolve(const LabeledFockState &state, const ComplexMatrix &unitary) {
    const std::size_t n_modes = state.n_modes;
    const std::size_t dim = state.internal_dim;
    if (!unitary.is_square() || unitary.rows() != n_modes) {
        throw Error(ErrorKind::InvalidDimension, "invalid dimension: unitary does not match mode count");
    }
    const std::size_t n = state.photon_number();
    double expansion = static_cast<double>(state.amplitudes.size()) * std::pow(static_cast<double>(n_modes), n);
    if (expansion > static_cast<double>(kMaxExpansion)) {
        throw Error(ErrorKind::CostGuard, "cost guard: Fock-space expansion too large");
    }
    const std::uint64_t slots = n_modes * dim;
    if (binomial(slots + n - 1, n) > kMaxBasis) {
        throw Error(ErrorKind::CostGuard, "cost guard: Fock basis too large");
    }

    LabeledFockState out{n_modes, dim, {}};
    std::vector<std::pair<std::size_t, std::size_t>> ops;  // (spatial mode, label) per photon
    std::vector<std::size_t> targets;
    for (const auto &[occ, amp] : state.amplitudes) {
        ops.clear();
        for (std::size_t slot = 0; slot < occ.size(); ++slot)
            for (std::uint8_t c = 0; c < occ[slot]; ++c) ops.emplace_back(slot / dim, slot % dim);
        // |occ> = prod a^dagger / sqrt(prod occ!) |0>
        const Complex scale = amp / std::sqrt(occupation_factorials(occ));
        targets.assign(n, 0);
        for (;;) {
            Complex coef = scale;
            Occupation result(slots, 0);
            for (std::size_t p = 0; p < n; ++p) {
                coef *= unitary(targets[p], ops[p].first);
                ++result[targets[p] * dim + ops[p].second];
            }
            out.amplitudes[result] += coef;
            std::size_t p = 0;
            while (p < n && ++targets[p] == n_modes) targets[p++] = 0;
            if (p == n) break;
        }
    }
    for (auto &[occ, amp] : out.amplitudes) amp *= std::sqrt(occupation_factorials(occ));
    return out;
}

std::map<std::vector<std::size_t>, double> spatial_distribution(const LabeledFockState &state) {
    std::map<std::vector<std::size_t>, double> dist;
    for (const auto &[occ, amp] : state.amplitudes) {
        std::vector<std::size_t> spatial(state.n_modes, 0);
        for (std::size_t slot = 0; slot < occ.size(); ++slot) spatial[slot / state.internal_dim] += occ[slot];
        dist[spatial] += std::norm(amp);
    }
    return dist;
}

double evolve_and_project(const LabeledFockState &state, const ComplexMatrix &unitary,
                          const std::vector<std::size_t> &outputs) {
    std::vector<std::size_t> pattern(state.n_modes, 0);
    for (std::size_t m : outputs) {
        if (m >= state.n_modes) throw Error(ErrorKind::InvalidPattern, "invalid pattern: output mode out of range");
        ++pattern[m];
    }
    const auto dist = spatial_distribution(evolve(state, unitary));
    const auto it = dist.find(pattern);
    return it == dist.end() ? 0.0 : it->second;
}

}  // namespace distsampler::oracle
