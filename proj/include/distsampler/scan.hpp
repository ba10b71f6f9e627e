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

#ifndef DISTSAMPLER_SCAN_HPP
#define DISTSAMPLER_SCAN_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "distsampler/probability.hpp"

namespace distsampler {

struct ErrorScanRow {
    double x = 0.0;
    std::size_t k = 0;
    /// RMS over trials of |P_k - P| / P_0.
    double rms_rel_error = 0.0;
    /// Mean over trials of |P_k - P| / P_0.
    double mean_abs_rel_error = 0.0;
    std::size_t trials = 0;
};

struct ErrorScanConfig {
    std::size_t n = 5;
    std::size_t n_modes = 100;
    std::vector<double> x_grid;
    std::vector<std::size_t> k_list;
    std::size_t trials = 500;
    std::uint64_t seed = 0;
};

/// Trial t draws haar_unitary(N, derive_seed(seed, t)) and uses the first n
/// modes as inputs and outputs. P comes from exact_probability, P_k from the
/// fixed-point coefficients, P_0 = n!/N^n. Rows are ordered x-major, then k
/// in k_list order. Trials run in parallel under Execution::Parallel; the
/// result does not depend on the execution mode.
std::vector<ErrorScanRow> ensemble_error_scan(const ErrorScanConfig &cfg, Execution exec = Execution::Parallel,
                                              const CostLimits &limits = CostLimits::from_env());

struct CoefficientScanRow {
    std::size_t j = 0;
    /// RMS over trials of |c_j| N^n / n!.
    double rms_normalized = 0.0;
    double mean_abs_normalized = 0.0;
    /// Large-n reference level, 1/2.
    double reference = 0.5;
    std::size_t trials = 0;
};

/// Same trial construction as ensemble_error_scan; rows for j in {0, 2..n}.
std::vector<CoefficientScanRow> coefficient_scan(std::size_t n, std::size_t n_modes, std::size_t trials,
                                                 std::uint64_t seed, Execution exec = Execution::Parallel,
                                                 const CostLimits &limits = CostLimits::from_env());

}  // namespace distsampler

#endif
