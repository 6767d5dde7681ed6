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

#include "qrw/matrix_model.h"
#include "qrw/oracle.h"
#include "qrw/solver.h"

namespace {

void BM_EstimateComponent(benchmark::State &state, bool mitigation) {
    const auto inst = qrw::generate_problem(4, static_cast<int>(state.range(0)), 0.5, 7);
    qrw::SolverConfig cfg;
    cfg.shots = 1008;
    cfg.noise = qrw::presets::fake_casablanca();
    cfg.mitigation = mitigation;
    for (auto _ : state) benchmark::DoNotOptimize(qrw::estimate_component(0, inst, cfg));
    state.SetItemsProcessed(state.iterations() * cfg.shots);
}
BENCHMARK_CAPTURE(BM_EstimateComponent, unmitigated, false)->DenseRange(0, 4, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_EstimateComponent, mitigated, true)->DenseRange(0, 4, 2)->Unit(benchmark::kMillisecond);

void BM_ExactSolve(benchmark::State &state) {
    const auto inst = qrw::generate_problem(static_cast<int>(state.range(0)), 0, 0.9, 11);
    for (auto _ : state) benchmark::DoNotOptimize(qrw::oracle::exact_solve(inst));
}
BENCHMARK(BM_ExactSolve)->DenseRange(2, 8, 2);

}  // namespace
