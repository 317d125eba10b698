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

#include <string_view>

#include "minorkit/graph.hpp"
#include "minorkit/rng.hpp"

namespace minorkit {

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
/// Centre 0, leaves 1..leaves.
Graph star_graph(int leaves);
/// Side A = 0..a-1, side B = a..a+b-1.
Graph complete_bipartite(int a, int b);
/// Vertex (i, j) is i*cols + j.
Graph grid_graph(int rows, int cols);
/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
Graph petersen_graph();
/// K_{m*r}: r independent parts of size m, all cross pairs adjacent.
Graph complete_multipartite(int m, int r);
Graph gnp(int n, double p, Rng& rng);
/// Uniform random recursive tree: vertex v attaches to a uniform earlier vertex.
Graph random_tree(int n, Rng& rng);
/// Replaces each vertex by k copies (a clique if `clique`, else independent);
/// copies of adjacent vertices are completely joined.
Graph blowup(const Graph& g, int k, bool clique = false);
/// Vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Named graphs used on the command line: "petersen", "complete:6", "path:4",
/// "cycle:5", "star:4", "grid:2x3", "bipartite:2x3", "multipartite:3x2".
Graph named_graph(std::string_view spec);

}  // namespace minorkit
