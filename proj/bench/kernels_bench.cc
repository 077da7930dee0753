/*
 * Copyright 2026 The Frontier Detection Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Serial reference kernels against their OpenMP versions, and the
// optimization handler against full map assembly.

#include <cstdint>
#include <random>
#include <vector>

#include "benchmark/benchmark.h"

#include "frontier/detector.h"
#include "frontier/grid.h"
#include "frontier/kernels.h"
#include "frontier/oracle.h"
#include "frontier/scenario.h"

namespace frontier {
namespace {

// Random blobs of free and occupied space on an unobserved background.
std::vector<std::uint16_t> NoiseValues(int side) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> pick(0, 2);
  std::vector<std::uint16_t> values(static_cast<std::size_t>(side) * side);
  for (std::uint16_t& v : values) {
    switch (pick(rng)) {
      case 0:
        v = kUnobservedValue;
        break;
      case 1:
        v = ProbabilityToValue(0.2);
        break;
      default:
        v = ProbabilityToValue(0.8);
    }
  }
  return values;
}

ClassGrid NoiseGrid(int side) {
  const std::vector<std::uint16_t> values = NoiseValues(side);
  ClassGrid grid{side, side, std::vector<CellClass>(values.size())};
  kernels::ClassifySerial(values, 0., grid.classes);
  return grid;
}

template <void (*Kernel)(std::span<const std::uint16_t>, double,
                         std::span<CellClass>)>
void BM_Classify(benchmark::State& state) {
  const std::vector<std::uint16_t> values =
      NoiseValues(static_cast<int>(state.range(0)));
  std::vector<CellClass> out(values.size());
  for (auto _ : state) {
    Kernel(values, 0.04, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * values.size());
}
BENCHMARK(BM_Classify<kernels::ClassifySerial>)->Arg(256)->Arg(1024)->Arg(2048);
BENCHMARK(BM_Classify<kernels::ClassifyParallel>)
    ->Arg(256)->Arg(1024)->Arg(2048);

template <void (*Kernel)(const ClassGrid&, bool, std::span<std::uint8_t>)>
void BM_FrontierMask(benchmark::State& state) {
  const ClassGrid grid = NoiseGrid(static_cast<int>(state.range(0)));
  std::vector<std::uint8_t> out(grid.classes.size());
  for (auto _ : state) {
    Kernel(grid, state.range(1) != 0, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * grid.classes.size());
}
BENCHMARK(BM_FrontierMask<kernels::FrontierMaskSerial>)
    ->Args({256, 0})->Args({1024, 0})->Args({2048, 0})->Args({1024, 1});
BENCHMARK(BM_FrontierMask<kernels::FrontierMaskParallel>)
    ->Args({256, 0})->Args({1024, 0})->Args({2048, 0})->Args({1024, 1});

template <Execution kExecution>
void BM_AssembleGlobalMap(benchmark::State& state) {
  const ScalingScenario scenario =
      MakeScalingScenario(static_cast<int>(state.range(0)), 6, 8, 0.05);
  std::vector<PlacedSubmap> placed;
  for (const SubmapSnapshot& s : scenario.submaps) {
    placed.push_back({s.submap.get(), s.global_pose});
  }
  for (auto _ : state) {
    const GlobalGrid grid = AssembleGlobalMap(placed, 0.05, kExecution);
    benchmark::DoNotOptimize(grid.classes.data());
  }
}
BENCHMARK(BM_AssembleGlobalMap<Execution::kSerial>)
    ->Arg(40)->Arg(80)->Arg(160)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AssembleGlobalMap<Execution::kParallel>)
    ->Arg(40)->Arg(80)->Arg(160)->Unit(benchmark::kMillisecond);

void BM_HandleOptimization(benchmark::State& state) {
  const ScalingScenario scenario =
      MakeScalingScenario(static_cast<int>(state.range(0)), 6, 8, 0.05);
  FrontierDetector detector;
  for (const SubmapSnapshot& s : scenario.submaps) {
    detector.HandleSubmapUpdates({s});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(detector.HandleOptimization(scenario.solution));
  }
}
BENCHMARK(BM_HandleOptimization)
    ->Arg(40)->Arg(80)->Arg(160)->Unit(benchmark::kMicrosecond);

void BM_NaiveOracle(benchmark::State& state) {
  const ScalingScenario scenario =
      MakeScalingScenario(static_cast<int>(state.range(0)), 6, 8, 0.05);
  std::vector<PlacedSubmap> placed;
  for (const SubmapSnapshot& s : scenario.submaps) {
    placed.push_back({s.submap.get(), s.global_pose});
  }
  for (auto _ : state) {
    const GlobalGrid grid = AssembleGlobalMap(placed, 0.05, Execution::kSerial);
    benchmark::DoNotOptimize(NaiveGlobalFrontier(grid));
  }
}
BENCHMARK(BM_NaiveOracle)
    ->Arg(40)->Arg(80)->Arg(160)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace frontier

BENCHMARK_MAIN();
