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

#include "minorkit/coloring.hpp"
#include "minorkit/generators.hpp"

namespace minorkit {
namespace {

void BM_GreedyDegenerate(benchmark::State& state) {
  Rng rng(3);
  const Graph g = gnp(static_cast<int>(state.range(0)), 0.1, rng);
  const ListAssignment lists = ListAssignment::full_palette(g.order(), degeneracy(g).d + 1);
  for (auto _ : state) benchmark::DoNotOptimize(greedy_degenerate_color(g, lists));
}
BENCHMARK(BM_GreedyDegenerate)->Arg(100)->Arg(1000)->Arg(5000);

void BM_ListColorable(benchmark::State& state) {
  const Graph g = petersen_graph();
  const ListAssignment lists = ListAssignment::full_palette(g.order(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_list_colorable(g, lists));
}
BENCHMARK(BM_ListColorable)->Arg(2)->Arg(3);

void BM_ListChromaticK2b(benchmark::State& state) {
  const Graph g = complete_bipartite(2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(list_chromatic_number(g));
}
BENCHMARK(BM_ListChromaticK2b)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_Separability(benchmark::State& state) {
  const Graph g = cycle_graph(static_cast<int>(state.range(0)));
  const ListAssignment lists = ListAssignment::full_palette(g.order(), 2);
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_separability(g, lists, 1));
}
BENCHMARK(BM_Separability)->Arg(5)->Arg(7)->Arg(9);

}  // namespace
}  // namespace minorkit
