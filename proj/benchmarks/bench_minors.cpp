// Copyright 2026 The minorkit Authors
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

#include "minorkit/constructions.hpp"
#include "minorkit/enumerate.hpp"
#include "minorkit/generators.hpp"
#include "minorkit/minors.hpp"

namespace minorkit {
namespace {

void BM_CliqueMinorPetersen(benchmark::State& state) {
  const Graph g = petersen_graph();
  const int t = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(find_clique_minor(g, t));
}
BENCHMARK(BM_CliqueMinorPetersen)->Arg(4)->Arg(5)->Arg(6);

void BM_CliqueMinorGnp(benchmark::State& state) {
  Rng rng(7);
  const Graph g = gnp(static_cast<int>(state.range(0)), 0.3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(find_clique_minor(g, 5));
}
BENCHMARK(BM_CliqueMinorGnp)->Arg(12)->Arg(20)->Arg(30);

void BM_BicliqueMinorGrid(benchmark::State& state) {
  const Graph g = grid_graph(4, 4);
  for (auto _ : state) benchmark::DoNotOptimize(find_biclique_minor(g, 2, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BicliqueMinorGrid)->Arg(2)->Arg(3)->Arg(4);

void BM_NonisomorphicGraphs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nonisomorphic_graphs(n));
}
BENCHMARK(BM_NonisomorphicGraphs)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_MaderExtract(benchmark::State& state) {
  Rng rng(11);
  const Graph g = gnp(static_cast<int>(state.range(0)), 0.25, rng);
  const int k = static_cast<int>((density(g) / Rational(2)).ceil());
  for (auto _ : state) benchmark::DoNotOptimize(mader_extract(g, std::max(k, 1)));
}
BENCHMARK(BM_MaderExtract)->Arg(20)->Arg(40)->Arg(80);

void BM_BruteConnectivity(benchmark::State& state) {
  Rng rng(13);
  const Graph g = gnp(static_cast<int>(state.range(0)), 0.5, rng);
  for (auto _ : state) benchmark::DoNotOptimize(brute_max_connectivity_subgraph(g));
}
BENCHMARK(BM_BruteConnectivity)->DenseRange(7, 10);

}  // namespace
}  // namespace minorkit
