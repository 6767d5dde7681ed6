// Copyright 2026 The qrw Authors
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

#include "qrw/circuit_sim.h"
#include "qrw/matrix_model.h"
#include "qrw/rng.h"

namespace {

void BM_StepSample(benchmark::State &state, const qrw::NoiseParams &noise, qrw::RegisterLayout layout) {
    const int n = static_cast<int>(state.range(0));
    const qrw::StepCircuit circuit(qrw::random_coin_angles(n, 1), noise, layout);
    qrw::Rng rng(2);
    int node = 0;
    for (auto _ : state) {
        node = circuit.sample(node, rng);
        benchmark::DoNotOptimize(node);
    }
    state.SetItemsProcessed(state.iterations());
}

BENCHMARK_CAPTURE(BM_StepSample, noiseless, qrw::presets::noiseless(), qrw::RegisterLayout::kPerCoinPair)
    ->DenseRange(1, 8, 1);
BENCHMARK_CAPTURE(BM_StepSample, casablanca, qrw::presets::fake_casablanca(), qrw::RegisterLayout::kPerCoinPair)
    ->DenseRange(1, 8, 1);
BENCHMARK_CAPTURE(BM_StepSample, casablanca_full_register, qrw::presets::fake_casablanca(),
                  qrw::RegisterLayout::kFullRegister)
    ->DenseRange(1, 6, 1);

void BM_TransitionMatrix(benchmark::State &state) {
    const auto angles = qrw::random_coin_angles(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(qrw::build_transition_matrix(angles));
}
BENCHMARK(BM_TransitionMatrix)->DenseRange(2, 8, 2);

}  // namespace
