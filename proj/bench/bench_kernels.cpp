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

#include <benchmark/benchmark.h>

#include "distsampler/matrix.hpp"
#include "distsampler/permanent.hpp"
#include "distsampler/probability.hpp"
#include "distsampler/scan.hpp"

namespace {

using namespace distsampler;

ComplexMatrix bench_submatrix(std::size_t n) {
    return extract_submatrix(haar_unitary(4 * n, 17), OutcomePattern::first_modes(4 * n, n));
}

void BM_Ryser(benchmark::State &state) {
    const ComplexMatrix m = bench_submatrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(permanent_ryser(m));
}
BENCHMARK(BM_Ryser)->DenseRange(4, 16, 4);

void coefficients_bench(benchmark::State &state, Execution exec) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const ComplexMatrix m = bench_submatrix(n);
    const CostLimits limits{n, 1000000000000ULL};
    for (auto _ : state) benchmark::DoNotOptimize(coefficients(m, 4, limits, exec));
}

void BM_CoefficientsSerial(benchmark::State &state) { coefficients_bench(state, Execution::Serial); }
void BM_CoefficientsParallel(benchmark::State &state) { coefficients_bench(state, Execution::Parallel); }
BENCHMARK(BM_CoefficientsSerial)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoefficientsParallel)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void scan_bench(benchmark::State &state, Execution exec) {
    ErrorScanConfig cfg;
    cfg.n = 5;
    cfg.n_modes = 100;
    cfg.x_grid = {0.3, 0.6, 0.9};
    cfg.k_list = {0, 2, 3, 4};
    cfg.trials = static_cast<std::size_t>(state.range(0));
    cfg.seed = 1;
    for (auto _ : state) benchmark::DoNotOptimize(ensemble_error_scan(cfg, exec));
}

void BM_ScanSerial(benchmark::State &state) { scan_bench(state, Execution::Serial); }
void BM_ScanParallel(benchmark::State &state) { scan_bench(state, Execution::Parallel); }
BENCHMARK(BM_ScanSerial)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
