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

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "minorkit/error.hpp"
#include "minorkit/graph.hpp"

namespace minorkit {

/// Branch-set certificate of an H minor: pattern vertex h is realised by
/// branch_sets[assignment[h]].
struct Model {
  Graph pattern;
  std::string pattern_name;
  std::vector<std::vector<Vertex>> branch_sets;
  std::vector<int> assignment;
};

/// Model of K_t whose i-th pattern vertex uses the i-th set.
Model make_clique_model(std::vector<std::vector<Vertex>> sets);

/// Clauses: "pattern size mismatch", "assignment not a bijection",
/// "empty branch set", "branch sets not disjoint", "branch set not connected",
/// "branch sets not adjacent". Throws Error on out-of-range vertices.
Verdict verify_model(const Graph& g, const Model& m);

struct Tree {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};

/// Tree certificate of an H minor. trees[h] realises pattern vertex h and
/// branch_edges[i] realises pattern.edges()[i].
struct Expansion {
  Graph pattern;
  std::string pattern_name;
  std::vector<Tree> trees;
  std::vector<Edge> branch_edges;
  /// Rooted flag: every tree meets the root set exactly once.
  std::optional<std::vector<Vertex>> roots;
  /// Bipartite flag: a proper 2-colouring of the union of trees and branch edges.
  std::optional<std::map<Vertex, int>> bipartite_coloring;
  /// Odd flag: tree edges bichromatic, branch edges monochromatic.
  std::optional<std::map<Vertex, int>> odd_coloring;
};

/// Vertices of the union of all trees, ascending.
std::vector<Vertex> expansion_vertices(const Expansion& e);

/// Clauses: "pattern size mismatch", "node not a tree", "tree edge not in graph",
/// "trees not disjoint", "branch edge not in graph", "branch edge misplaced",
/// "root count", "root multiplicity", "bipartite coloring incomplete",
/// "bipartite coloring not proper", "odd coloring incomplete",
/// "odd coloring: tree edge monochromatic", "odd coloring: branch edge bichromatic".
/// Throws Error on malformed trees (out-of-range or repeated vertices, edges
/// leaving the tree's vertex list, empty trees).
Verdict verify_expansion(const Graph& g, const Expansion& e);

/// BFS spanning trees of the branch sets plus the first available branch edges.
Expansion model_to_expansion(const Graph& g, const Model& m);

/// K_{s,t} model: a_sets[i] adjacent to b_sets[j] for all i, j.
struct KstModel {
  std::vector<std::vector<Vertex>> a_sets;
  std::vector<std::vector<Vertex>> b_sets;
};

/// Clauses: "empty branch set", "branch sets not disjoint",
/// "branch set not connected", "branch sets not adjacent".
Verdict verify_kst_model(const Graph& g, const KstModel& m);

/// Whether h misses every A-set and meets every B-set exactly once.
bool check_b_tangent(const Graph& g, const KstModel& m, std::span<const Vertex> h);

/// Exact branch-and-bound search for a K_t minor (graphs with at most 64
/// vertices). Vertices are decided in label order; each is tried as the start
/// of a new set, then in the open sets in ascending order, then discarded.
/// The first certificate in that order is returned, after verification.
SearchResult<Model> find_clique_minor(const Graph& g, int t, std::int64_t budget = kDefaultBudget);

/// Same contract for K_{s,t}.
SearchResult<KstModel> find_biclique_minor(const Graph& g, int s, int t, std::int64_t budget = kDefaultBudget);

/// K_a model whose i-th branch set contains roots[i], using only vertices in
/// `allowed` (the roots must be allowed).
SearchResult<Model> find_rooted_clique_model(const Graph& g, std::span<const Vertex> roots, VertexMask allowed,
                                             std::int64_t budget = kDefaultBudget);

/// Contracts an edge with the fewest common neighbours until at most
/// `target_order` vertices remain, searches the quotient exactly and lifts the
/// model back. Absence is a heuristic failure, not a proof.
std::optional<Model> density_extract_minor(const Graph& g, int t, int target_order = 16,
                                           std::int64_t budget = kDefaultBudget);

}  // namespace minorkit
