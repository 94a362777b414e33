// Copyright 2026 The rqbench Authors.
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

#include <benchmark/benchmark.h>

#include "rqbench/agent_registry.hpp"
#include "rqbench/environments.hpp"
#include "rqbench/episode.hpp"
#include "rqbench/random.hpp"
#include "rqbench/solver.hpp"
#include "rqbench/weights.hpp"

namespace {

void BM_BetaSample(benchmark::State& state) {
  rqbench::RandomStream stream(1);
  const rqbench::BetaParams params{51.0, static_cast<double>(state.range(0)) + 0.01};
  for (auto _ : state) benchmark::DoNotOptimize(rqbench::beta_sample(params, stream));
}
BENCHMARK(BM_BetaSample)->Arg(0)->Arg(10)->Arg(1000);

void BM_SmallShapeBeta(benchmark::State& state) {
  rqbench::RandomStream stream(2);
  const rqbench::BetaParams params{0.05, 0.01};
  for (auto _ : state) benchmark::DoNotOptimize(rqbench::beta_sample(params, stream));
}
BENCHMARK(BM_SmallShapeBeta);

void BM_Episode(benchmark::State& state, const char* agent) {
  const rqbench::TabularMdp mdp = rqbench::make_preset("grid10");
  const rqbench::RandomStream root(3);
  auto learner = rqbench::make_agent({agent, {}, std::nullopt}, mdp, 1000, root.split(1));
  rqbench::RandomStream env = root.split(0);
  for (auto _ : state) benchmark::DoNotOptimize(rqbench::run_episode(mdp, *learner, env));
  state.SetItemsProcessed(state.iterations() * mdp.horizon());
}
BENCHMARK_CAPTURE(BM_Episode, randomizedq, "randomizedq");
BENCHMARK_CAPTURE(BM_Episode, randql, "randql");
BENCHMARK_CAPTURE(BM_Episode, staged_randql, "staged-randql");
BENCHMARK_CAPTURE(BM_Episode, ucbq, "ucbq");

void BM_OptimalValuesGrid20(benchmark::State& state) {
  const rqbench::TabularMdp mdp = rqbench::make_preset("grid20");
  for (auto _ : state) benchmark::DoNotOptimize(rqbench::optimal_values(mdp));
}
BENCHMARK(BM_OptimalValuesGrid20)->Unit(benchmark::kMillisecond);

void BM_AggregatedWeights(benchmark::State& state) {
  rqbench::RandomStream stream(4);
  const rqbench::WeightParams params{3.0, 1.0, 1.0, false};
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rqbench::sample_aggregated(m, params, stream));
}
BENCHMARK(BM_AggregatedWeights)->Arg(20)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
