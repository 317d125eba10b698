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

#include "minorkit/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "minorkit/error.hpp"
#include "minorkit/flow.hpp"

namespace minorkit {

Graph::Graph(int n) : Graph(n, std::span<const Edge>{}) {}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw Error("negative vertex count");
  const auto un = static_cast<std::size_t>(n);
  words_ = (un + 63) / 64;
  adj_.assign(un, {});
  matrix_.assign(un * words_, 0);
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (!contains(e.u) || !contains(e.v)) {
      throw Error("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range");
    }
    if (e.u == e.v) throw Error("self-loop at vertex " + std::to_string(e.u));
    edges_.push_back(Edge(e.u, e.v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const Edge& e : edges_) {
    adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    matrix_[static_cast<std::size_t>(e.u) * words_ + static_cast<std::size_t>(e.v) / 64] |=
        std::uint64_t{1} << (e.v % 64);
    matrix_[static_cast<std::size_t>(e.v) * words_ + static_cast<std::size_t>(e.u) / 64] |=
        std::uint64_t{1} << (e.u % 64);
  }
  for (auto& row : adj_) std::sort(row.begin(), row.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
  if (!contains(u) || !contains(v)) return false;
  return (matrix_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U;
}

int Graph::min_degree() const {
  int best = n_ == 0 ? 0 : degree(0);
  for (Vertex v = 1; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

VertexMask Graph::neighbor_mask(Vertex v) const {
  if (n_ > 64) throw Error("bit-mask view requires at most 64 vertices");
  return matrix_[static_cast<std::size_t>(v) * words_];
}

VertexMask Graph::all_mask() const {
  if (n_ > 64) throw Error("bit-mask view requires at most 64 vertices");
  return n_ == 64 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
}

std::vector<Vertex> mask_to_vertices(VertexMask m) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  while (m) {
    out.push_back(lowest(m));
    m &= m - 1;
  }
  return out;
}

VertexMask vertices_to_mask(std::span<const Vertex> vs) {
  VertexMask m = 0;
  for (Vertex v : vs) {
    if (v < 0 || v >= 64) throw Error("vertex outside bit-mask range");
    m |= bit(v);
  }
  return m;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<Vertex> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (!g.contains(keep[i])) throw Error("vertex " + std::to_string(keep[i]) + " not in graph");
    local[static_cast<std::size_t>(keep[i])] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const Vertex a = local[static_cast<std::size_t>(e.u)];
    const Vertex b = local[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.emplace_back(a, b);
  }
  return {Graph(static_cast<int>(keep.size()), edges), std::move(keep)};
}

Subgraph induced_subgraph(const Graph& g, VertexMask vertices) {
  const auto vs = mask_to_vertices(vertices);
  return induced_subgraph(g, vs);
}

Rational density(const Graph& g) {
  if (g.order() == 0) throw Error("density undefined");
  return Rational(static_cast<std::int64_t>(g.size()), g.order());
}

DegeneracyOrder degeneracy(const Graph& g) {
  const int n = g.order();
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  std::vector<bool> removed(static_cast<std::size_t>(n), false);
  DegeneracyOrder out;
  out.order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!removed[static_cast<std::size_t>(v)] &&
          (best < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(best)])) {
        best = v;
      }
    }
    out.d = std::max(out.d, deg[static_cast<std::size_t>(best)]);
    removed[static_cast<std::size_t>(best)] = true;
    out.order.push_back(best);
    for (Vertex w : g.neighbors(best)) {
      if (!removed[static_cast<std::size_t>(w)]) --deg[static_cast<std::size_t>(w)];
    }
  }
  return out;
}

std::vector<Vertex> k_core(const Graph& g, int k) {
  const int n = g.order();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<bool> removed(static_cast<std::size_t>(n), false);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    if (deg[static_cast<std::size_t>(v)] < k) {
      removed[static_cast<std::size_t>(v)] = true;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const Vertex v = queue.back();
    queue.pop_back();
    for (Vertex w : g.neighbors(v)) {
      const auto uw = static_cast<std::size_t>(w);
      if (!removed[uw] && --deg[uw] < k) {
        removed[uw] = true;
        queue.push_back(w);
      }
    }
  }
  std::vector<Vertex> core;
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[static_cast<std::size_t>(v)]) core.push_back(v);
  }
  return core;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  const int n = g.order();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<Vertex> stack{s};
    comp[static_cast<std::size_t>(s)] = id;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool is_connected(const Graph& g) { return g.order() > 0 && components(g).size() == 1; }

bool is_connected_subset(const Graph& g, std::span<const Vertex> vertices) {
  if (vertices.empty()) return false;
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : vertices) in[static_cast<std::size_t>(v)] = 1;
  std::vector<Vertex> stack{vertices.front()};
  in[static_cast<std::size_t>(vertices.front())] = 2;
  std::size_t seen = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (in[static_cast<std::size_t>(w)] == 1) {
        in[static_cast<std::size_t>(w)] = 2;
        ++seen;
        stack.push_back(w);
      }
    }
  }
  std::size_t distinct = 0;
  for (char c : in) distinct += c != 0;
  return seen == distinct;
}

bool is_complete(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  return g.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

namespace {

// Unit vertex capacities except for s and t; returns flow value and, on
// request, the separating vertex set.
int local_connectivity_impl(const Graph& g, Vertex s, Vertex t, int limit, std::vector<Vertex>* cut) {
  const int n = g.order();
  FlowNetwork net(2 * n);
  std::vector<int> vertex_arc(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    const int cap = (v == s || v == t) ? n : 1;
    vertex_arc[static_cast<std::size_t>(v)] = net.add_arc(2 * v, 2 * v + 1, cap);
  }
  for (const Edge& e : g.edges()) {
    net.add_arc(2 * e.u + 1, 2 * e.v, n);
    net.add_arc(2 * e.v + 1, 2 * e.u, n);
  }
  const int flow = net.max_flow(2 * s + 1, 2 * t, limit);
  if (cut != nullptr) {
    cut->clear();
    const auto reach = net.residual_reachable(2 * s + 1);
    for (Vertex v = 0; v < n; ++v) {
      if (v != s && v != t && reach[static_cast<std::size_t>(2 * v)] && !reach[static_cast<std::size_t>(2 * v + 1)]) {
        cut->push_back(v);
      }
    }
  }
  return flow;
}

}  // namespace

int local_vertex_connectivity(const Graph& g, Vertex s, Vertex t) {
  if (s == t || g.has_edge(s, t)) throw Error("local connectivity needs distinct non-adjacent vertices");
  return local_connectivity_impl(g, s, t, g.order(), nullptr);
}

namespace {

// Esfahanian-Hakimi style: some vertex among the first kappa+1 avoids a
// minimum separator, and is non-adjacent to a vertex on the far side.
int connectivity_with_cut(const Graph& g, std::vector<Vertex>* best_cut) {
  const int n = g.order();
  if (n <= 1) return 0;
  if (is_complete(g)) return n - 1;
  if (!is_connected(g)) return 0;
  int best = n - 1;
  std::vector<Vertex> cut;
  for (Vertex i = 0; i < n && i <= best; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      if (j == i || g.has_edge(i, j)) continue;
      if (j < i && j <= best) continue;  // pair already examined from j's side
      const int k = local_connectivity_impl(g, i, j, best, best_cut != nullptr ? &cut : nullptr);
      if (k < best) {
        best = k;
        if (best_cut != nullptr) *best_cut = cut;
      }
    }
  }
  return best;
}

}  // namespace

int vertex_connectivity(const Graph& g) { return connectivity_with_cut(g, nullptr); }

std::vector<Vertex> minimum_vertex_cut(const Graph& g) {
  std::vector<Vertex> cut;
  const int n = g.order();
  if (n <= 1 || is_complete(g) || !is_connected(g)) return cut;
  connectivity_with_cut(g, &cut);
  std::sort(cut.begin(), cut.end());
  return cut;
}

Contraction contract_edges(const Graph& g, std::span<const Edge> f) {
  const int n = g.order();
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (const Edge& e : f) {
    if (!g.has_edge(e.u, e.v)) {
      throw Error("cannot contract non-edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
    const Vertex a = find(e.u);
    const Vertex b = find(e.v);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  // Quotient vertices are numbered by the smallest original member.
  std::vector<Vertex> label(static_cast<std::size_t>(n), -1);
  Contraction out;
  out.mapping.resize(static_cast<std::size_t>(n));
  int next = 0;
  for (Vertex v = 0; v < n; ++v) {
    const Vertex r = find(v);
    if (label[static_cast<std::size_t>(r)] < 0) label[static_cast<std::size_t>(r)] = next++;
    out.mapping[static_cast<std::size_t>(v)] = label[static_cast<std::size_t>(r)];
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const Vertex a = out.mapping[static_cast<std::size_t>(e.u)];
    const Vertex b = out.mapping[static_cast<std::size_t>(e.v)];
    if (a != b) edges.emplace_back(a, b);
  }
  out.graph = Graph(next, edges);
  return out;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const int n = g.order();
  Bipartition out;
  out.side.assign(static_cast<std::size_t>(n), -1);
  for (Vertex s = 0; s < n; ++s) {
    if (out.side[static_cast<std::size_t>(s)] >= 0) continue;
    out.side[static_cast<std::size_t>(s)] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      for (Vertex w : g.neighbors(v)) {
        auto& sw = out.side[static_cast<std::size_t>(w)];
        if (sw < 0) {
          sw = 1 - out.side[static_cast<std::size_t>(v)];
          q.push(w);
        } else if (sw == out.side[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) (out.side[static_cast<std::size_t>(v)] == 0 ? out.a : out.b).push_back(v);
  return out;
}

std::vector<int> greedy_color_by_degeneracy(const Graph& g, const DegeneracyOrder& order) {
  std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
  for (auto it = order.order.rbegin(); it != order.order.rend(); ++it) {
    std::vector<bool> used(static_cast<std::size_t>(order.d) + 2, false);
    for (Vertex w : g.neighbors(*it)) {
      const int c = color[static_cast<std::size_t>(w)];
      if (c >= 0 && c < static_cast<int>(used.size())) used[static_cast<std::size_t>(c)] = true;
    }
    int c = 0;
    while (used[static_cast<std::size_t>(c)]) ++c;
    color[static_cast<std::size_t>(*it)] = c;
  }
  return color;
}

}  // namespace minorkit
