// Copyright 2026 The magsteer Authors
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

#include "magsteer/measures.hpp"
#include "magsteer/sweep.hpp"

namespace {

using namespace magsteer;

void BM_AnalyzePoint(benchmark::State& state) {
  const SystemParams p = baseline_params();
  for (auto _ : state) benchmark::DoNotOptimize(analyze(p));
}
BENCHMARK(BM_AnalyzePoint);

void BM_SweepSerial(benchmark::State& state) {
  const auto preset = make_preset("fig2a", static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep_serial(preset.base, preset.axes));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_SweepSerial)->Arg(21)->Arg(41)->Unit(benchmark::kMillisecond);

void BM_SweepParallel(benchmark::State& state) {
  const auto preset = make_preset("fig2a", static_cast<std::size_t>(state.range(0)));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(preset.base, preset.axes, threads));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_SweepParallel)->Args({41, 1})->Args({41, 2})->Args({41, 4})->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
