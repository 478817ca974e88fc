// Copyright 2026 The rbwalk Authors
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

// Parallel kernel against the serial reference on the same experiment grid.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "rbwalk/simulator.hpp"

namespace {

rbwalk::ExperimentConfig config(int J, rbwalk::NoiseModel model) {
  return rbwalk::ExperimentConfig::dephasing(J, 200, 50, std::move(model), 1);
}

void BM_ParallelMarkovian(benchmark::State& state) {
  const auto cfg = config(static_cast<int>(state.range(0)), rbwalk::noise::Markovian{0.015});
  for (auto _ : state) benchmark::DoNotOptimize(rbwalk::run_experiment(cfg).values.data());
  state.SetItemsProcessed(state.iterations() * cfg.k * cfg.n * cfg.J);
  state.counters["threads"] = omp_get_max_threads();
}

void BM_SerialReferenceMarkovian(benchmark::State& state) {
  const auto cfg = config(static_cast<int>(state.range(0)), rbwalk::noise::Markovian{0.015});
  for (auto _ : state) benchmark::DoNotOptimize(rbwalk::reference::run_experiment_serial(cfg).values.data());
  state.SetItemsProcessed(state.iterations() * cfg.k * cfg.n * cfg.J);
}

void BM_ParallelFourier(benchmark::State& state) {
  const auto psd = rbwalk::noise::FourierPsd::power_law(-1.0, 20, 0.006, 0.01, 1.0);
  const auto cfg = config(static_cast<int>(state.range(0)), psd);
  for (auto _ : state) benchmark::DoNotOptimize(rbwalk::run_experiment(cfg).values.data());
  state.SetItemsProcessed(state.iterations() * cfg.k * cfg.n * cfg.J);
}

void BM_SerialReferenceFourier(benchmark::State& state) {
  const auto psd = rbwalk::noise::FourierPsd::power_law(-1.0, 20, 0.006, 0.01, 1.0);
  const auto cfg = config(static_cast<int>(state.range(0)), psd);
  for (auto _ : state) benchmark::DoNotOptimize(rbwalk::reference::run_experiment_serial(cfg).values.data());
  state.SetItemsProcessed(state.iterations() * cfg.k * cfg.n * cfg.J);
}

}  // namespace

BENCHMARK(BM_ParallelMarkovian)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SerialReferenceMarkovian)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ParallelFourier)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SerialReferenceFourier)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
