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

#ifndef DISTSAMPLER_ORACLE_HPP
#define DISTSAMPLER_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "distsampler/distinguishability.hpp"
#include "distsampler/matrix.hpp"

namespace distsampler::oracle {

// Brute-force Fock-space evolution in which every photon carries an explicit
// internal state. Detectors are blind to the internal label, so outcome
// probabilities are marginals over labels. Meant for n <= 4 and tiny N.

/// Occupation numbers indexed by spatial_mode * internal_dim + label.
using Occupation = std::vector<std::uint8_t>;

struct LabeledFockState {
    std::size_t n_modes = 0;
    std::size_t internal_dim = 0;
    std::map<Occupation, Complex> amplitudes;

    double norm_squared() const;
    /// Throws NumericalInconsistency if configurations differ in photon number.
    std::size_t photon_number() const;
};

/// Photon i enters spatial mode i in internal state
/// sqrt(x)|common> + sqrt(1 - x)|label_i>, so every pairwise overlap is x.
LabeledFockState prepare_input(std::size_t n, double x, std::size_t n_modes);

/// Photon i enters spatial mode inputs[i] with internal vector taken from a
/// factorization S = W^dagger W, giving <psi_i|psi_j> = S_ij.
LabeledFockState prepare_input(const DistinguishabilityModel &model, const std::vector<std::size_t> &inputs,
                               std::size_t n_modes);

/// Internal vectors (columns) realizing the Gram matrix S.
std::vector<std::vector<Complex>> internal_vectors(const ComplexMatrix &s);

/// Applies U to spatial modes, leaving labels untouched. Throws CostGuard if
/// the expansion would exceed ~1e7 terms or 1e5 basis states.
LabeledFockState evolve(const LabeledFockState &state, const ComplexMatrix &unitary);

/// Probability of each spatial occupation pattern, summed over labels.
std::map<std::vector<std::size_t>, double> spatial_distribution(const LabeledFockState &state);

/// Probability of finding the photons at `outputs` (one entry per photon,
/// repeats mean bunching).
double evolve_and_project(const LabeledFockState &state, const ComplexMatrix &unitary,
                          const std::vector<std::size_t> &outputs);

}  // namespace distsampler::oracle

#endif
