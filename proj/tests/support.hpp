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

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "minorkit/formats.hpp"
#include "minorkit/generators.hpp"
#include "minorkit/graph.hpp"
#include "minorkit/minors.hpp"
#include "minorkit/rng.hpp"

namespace minorkit::test {

inline Graph edges(int n, std::initializer_list<std::pair<int, int>> list) {
  std::vector<Edge> es;
  for (auto [u, v] : list) es.emplace_back(u, v);
  return Graph(n, es);
}

/// Reproducible random graphs for property tests.
inline std::vector<Graph> random_graphs(int count, int min_n, int max_n, double p, std::uint64_t seed) {
  const Rng root(seed);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    Rng rng = root.split(static_cast<std::uint64_t>(i));
    const int n = min_n + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n - min_n + 1)));
    out.push_back(gnp(n, p, rng));
  }
  return out;
}

/// Random tree on the given vertex labels (each new vertex hangs off an
/// earlier one).
inline Tree random_labelled_tree(const std::vector<Vertex>& labels, Rng& rng) {
  Tree t{labels, {}};
  for (std::size_t i = 1; i < labels.size(); ++i) {
    t.edges.emplace_back(labels[static_cast<std::size_t>(rng.below(i))], labels[i]);
  }
  return t;
}

/// An expansion of K_{a,b} built from scratch: A-trees of 1..max_a vertices
/// (the first one always has at least two), B-trees of 1..max_b vertices, one
/// branch edge per pair between random tree vertices, plus `noise` random
/// extra edges. Pattern vertices 0..a-1 form side A.
inline std::pair<Graph, Expansion> random_kab_expansion(int a, int b, int max_a, int max_b, int noise, Rng& rng) {
  Expansion e;
  e.pattern = complete_bipartite(a, b);
  e.pattern_name = "K_{" + std::to_string(a) + "," + std::to_string(b) + "}";
  Vertex next = 0;
  for (int i = 0; i < a + b; ++i) {
    const int cap = i < a ? max_a : max_b;
    int size = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(cap)));
    if (i == 0) size = std::max(size, 2);
    std::vector<Vertex> labels;
    for (int k = 0; k < size; ++k) labels.push_back(next++);
    e.trees.push_back(random_labelled_tree(labels, rng));
  }
  std::vector<Edge> edges;
  for (const Tree& t : e.trees) edges.insert(edges.end(), t.edges.begin(), t.edges.end());
  auto pick = [&](const Tree& t) { return t.vertices[static_cast<std::size_t>(rng.below(t.vertices.size()))]; };
  for (const Edge& pe : e.pattern.edges()) {
    const Edge be(pick(e.trees[static_cast<std::size_t>(pe.u)]), pick(e.trees[static_cast<std::size_t>(pe.v)]));
    e.branch_edges.push_back(be);
    edges.push_back(be);
  }
  for (int k = 0; k < noise; ++k) {
    const auto u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(next)));
    const auto v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(next)));
    if (u != v) edges.emplace_back(u, v);
  }
  return {Graph(next, edges), e};
}

}  // namespace minorkit::test
