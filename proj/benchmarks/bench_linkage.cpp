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

#include <vector>

#include "minorkit/generators.hpp"
#include "minorkit/linkage.hpp"
#include "minorkit/woven.hpp"

namespace minorkit {
namespace {

void BM_GeodesicGrid(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const Graph g = grid_graph(side, side);
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  for (int r = 0; r < side; ++r) {
    a.push_back(r * side);
    b.push_back(r * side + side - 1);
  }
  for (auto _ : state) benchmark::DoNotOptimize(find_geodesic_ab_paths(g, a, b, side));
}
BENCHMARK(BM_GeodesicGrid)->Arg(4)->Arg(8)->Arg(16);

void BM_FindLinkageGrid(benchmark::State& state) {
  const Graph g = grid_graph(5, 5);
  LinkageSpec spec;
  spec.pairs = {{0, 24}, {4, 20}};
  if (state.range(0) != 0) spec.parity = std::vector<int>{0};
  for (auto _ : state) benchmark::DoNotOptimize(find_linkage(g, spec));
}
BENCHMARK(BM_FindLinkageGrid)->Arg(0)->Arg(1);

void BM_IsWovenComplete(benchmark::State& state) {
  const Graph g = complete_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_woven(g, 2, 1));
}
BENCHMARK(BM_IsWovenComplete)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_MengerVariant(benchmark::State& state) {
  Rng rng(5);
  const Graph g = gnp(static_cast<int>(state.range(0)), 0.3, rng);
  const std::vector<Vertex> a1{0, 1};
  const std::vector<Vertex> a2{2};
  const std::vector<Vertex> b{3, 4, 5, 6, 7};
  for (auto _ : state) benchmark::DoNotOptimize(menger_variant_paths(g, a1, a2, b));
}
BENCHMARK(BM_MengerVariant)->Arg(20)->Arg(60)->Arg(200);

}  // namespace
}  // namespace minorkit
