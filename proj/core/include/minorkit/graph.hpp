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

#include <compare>
#include <initializer_list>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "minorkit/rational.hpp"

namespace minorkit {

using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Bit set over vertices 0..63, used by the desk-scale exact searches.
using VertexMask = std::uint64_t;

inline int popcount(VertexMask m) noexcept { return __builtin_popcountll(m); }
inline int lowest(VertexMask m) noexcept { return __builtin_ctzll(m); }
inline VertexMask bit(Vertex v) noexcept { return VertexMask{1} << v; }

/// Finite simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws Error on loops or out-of-range labels; repeated pairs are merged.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool has_edge(Vertex u, Vertex v) const noexcept;
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  int min_degree() const;
  int max_degree() const;

  /// Neighborhood as a bit mask; requires order() <= 64.
  VertexMask neighbor_mask(Vertex v) const;
  VertexMask all_mask() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> matrix_;
};

/// A derived graph together with the label of each of its vertices in the parent.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
Subgraph induced_subgraph(const Graph& g, VertexMask vertices);
std::vector<Vertex> mask_to_vertices(VertexMask m);
VertexMask vertices_to_mask(std::span<const Vertex> vs);

/// e(G)/v(G) exactly. Throws Error("density undefined") on the null graph.
Rational density(const Graph& g);

struct DegeneracyOrder {
  /// Elimination order: every vertex has at most `d` neighbours later in it.
  std::vector<Vertex> order;
  int d = 0;
};

/// Iterated minimum-degree removal (ties to the smallest label).
DegeneracyOrder degeneracy(const Graph& g);

/// Vertices of the k-core (largest subgraph of minimum degree >= k), ascending.
std::vector<Vertex> k_core(const Graph& g, int k);

std::vector<std::vector<Vertex>> components(const Graph& g);
bool is_connected(const Graph& g);
/// Whether G[vertices] is connected (the empty set is not).
bool is_connected_subset(const Graph& g, std::span<const Vertex> vertices);
bool is_complete(const Graph& g);

/// Minimum number of internally disjoint s-t paths for non-adjacent s, t.
int local_vertex_connectivity(const Graph& g, Vertex s, Vertex t);

/// kappa(G); K_n gives n-1, disconnected graphs and K_1 give 0.
int vertex_connectivity(const Graph& g);

/// A separator of size kappa(G); empty for complete and disconnected graphs.
std::vector<Vertex> minimum_vertex_cut(const Graph& g);

struct Contraction {
  Graph graph;
  /// mapping[v] = vertex of the quotient that v was merged into.
  std::vector<Vertex> mapping;
};

/// G/F. Throws Error if some pair in `f` is not an edge of g.
Contraction contract_edges(const Graph& g, std::span<const Edge> f);

struct Bipartition {
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  /// side[v] = 0 for a, 1 for b.
  std::vector<int> side;
};

/// Proper 2-colouring; in each component the smallest vertex goes to side a.
std::optional<Bipartition> bipartition(const Graph& g);

/// Greedy colouring along the reverse of a degeneracy order; colours 0..d.
std::vector<int> greedy_color_by_degeneracy(const Graph& g, const DegeneracyOrder& order);

}  // namespace minorkit
