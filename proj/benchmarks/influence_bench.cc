// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <memory>

#include <benchmark/benchmark.h>

#include "regmax/algorithms.h"
#include "regmax/graph.h"
#include "regmax/influence.h"

namespace regmax {
namespace {

void BM_SampleRRSets(benchmark::State& state) {
  const auto g = GenerateRandomDigraph(5000, 20000, 3);
  const auto theta = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(SampleRRSets(g, theta, ++seed));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleRRSets)->Arg(1000)->Arg(10000);

void BM_UpOnRRCoverage(benchmark::State& state) {
  const auto g = GenerateRandomDigraph(2000, 8000, 4);
  auto rr = std::make_shared<const RRSetCollection>(SampleRRSets(g, 20000, 5));
  RRCoverageOracle oracle(rr);
  const auto cost = DegreeCost(g, 0.5, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(UpMaximize(oracle, cost, UpConfig(SubmodularityRatio(1.0), 0.1)));
  }
}
BENCHMARK(BM_UpOnRRCoverage);

void BM_PmMaximize(benchmark::State& state) {
  const auto g = GenerateRandomDigraph(static_cast<std::size_t>(state.range(0)),
                                       4 * static_cast<std::size_t>(state.range(0)), 6);
  const auto cost = DegreeCost(g, 0.5, 1.0);
  PmConfig cfg;
  for (auto _ : state) {
    ++cfg.seed;
    benchmark::DoNotOptimize(PmMaximize(g, cost, cfg));
  }
}
BENCHMARK(BM_PmMaximize)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace regmax
