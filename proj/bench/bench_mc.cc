// Copyright 2026 The purecliff Authors
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

// Serial reference loop against the OpenMP trial loop.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "purecliff/montecarlo.h"

using namespace purecliff;

namespace {

constexpr uint64_t kTrials = 20000;

const ProtocolSpec &protocol(int64_t which) {
    static const ProtocolSpec ghz3 = builtin("ghz3-het");
    static const ProtocolSpec ghz4 = builtin("ghz4-p1p2");
    return which == 0 ? ghz3 : ghz4;
}

void BM_mc_serial(benchmark::State &state) {
    const ProtocolSpec &p = protocol(state.range(0));
    NoiseModel m{0.02, 1e-3, 1e-3, false};
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_mc_serial(p.name, p.circuit, m, kTrials, 7));
    }
    state.SetItemsProcessed(state.iterations() * kTrials);
    state.SetLabel(p.name);
}

void BM_mc_openmp(benchmark::State &state) {
    const ProtocolSpec &p = protocol(state.range(0));
    NoiseModel m{0.02, 1e-3, 1e-3, false};
    int threads = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_mc(p, m, kTrials, 7, threads));
    }
    state.SetItemsProcessed(state.iterations() * kTrials);
    state.SetLabel(p.name + " threads=" + std::to_string(threads));
}

void thread_args(benchmark::internal::Benchmark *b) {
    for (int64_t which : {0, 1}) {
        for (int64_t t = 1; t <= omp_get_num_procs(); t *= 2) {
            b->Args({which, t});
        }
    }
}

}  // namespace

BENCHMARK(BM_mc_serial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mc_openmp)->Apply(thread_args)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
