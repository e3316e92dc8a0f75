// Copyright 2026 The ulab Authors
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

#include "ulab/measures.hpp"
#include "ulab/optimize.hpp"

namespace {

ulab::Execution mode(const benchmark::State &state) {
    return state.range(0) ? ulab::Execution::Parallel : ulab::Execution::Serial;
}

void BM_BatchLqu(benchmark::State &state) {
    std::vector<ulab::DensityMatrix> states;
    ulab::Rng rng(1);
    for (int i = 0; i < 2048; ++i) states.push_back(ulab::random_state(rng));
    for (auto _ : state) benchmark::DoNotOptimize(ulab::batch_lqu(states, mode(state)));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(states.size()));
}

void BM_ChiSweep(benchmark::State &state) {
    for (auto _ : state) benchmark::DoNotOptimize(ulab::chi_sweep(101, mode(state)));
}

void BM_SeparableX(benchmark::State &state) {
    ulab::SeparableXOptions options;
    options.exec = mode(state);
    for (auto _ : state) benchmark::DoNotOptimize(ulab::maximize_lqu_separable_x(16, 7, options));
}

void BM_BellDiagonal(benchmark::State &state) {
    for (auto _ : state) benchmark::DoNotOptimize(ulab::maximize_lqu_bell_diagonal_separable(41, 7, mode(state)));
}

}  // namespace

BENCHMARK(BM_BatchLqu)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChiSweep)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SeparableX)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BellDiagonal)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
