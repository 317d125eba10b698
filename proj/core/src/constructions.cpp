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

#include "minorkit/constructions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <set>

namespace minorkit {

// ------------------------------------------------------------ control functions

FunctionTable::FunctionTable(ConstantsConfig cfg) : cfg_(cfg) { cfg_.validate(); }

double FunctionTable::g(double s) const {
  if (!(s >= 1)) throw Error("g(s) needs s >= 1");
  return cfg_.c_newforced * std::pow(1 + std::log(s), 6);
}

double FunctionTable::f(double t) const {
  if (!(t >= 3)) throw Error("f(t) needs t >= 3");
  return 49 * g(7 * std::sqrt(std::log(t)));
}

double FunctionTable::f_upper_bound(double t) const {
  if (!(t >= 3)) throw Error("f(t) needs t >= 3");
  return 49 * cfg_.c_newforced * std::pow(1 + std::log(7.0), 6) * std::pow(1 + std::log(std::log(t)), 6);
}

double FunctionTable::smallconn_bound(double t) const {
  if (!(t >= 3)) throw Error("f(t) needs t >= 3");
  return cfg_.c_smallconn * std::log(std::log(t));
}

double eval_g(double s, const ConstantsConfig& cfg) { return FunctionTable(cfg).g(s); }
double eval_f(double t, const ConstantsConfig& cfg) { return FunctionTable(cfg).f(t); }

double density_threshold(int t, const ConstantsConfig& cfg) {
  if (t < 2) throw Error("t must be at least 2");
  return cfg.c_density * t * std::sqrt(std::log(static_cast<double>(t)));
}

double bipartite_density_threshold(int t, const ConstantsConfig& cfg) {
  if (t < 2) throw Error("t must be at least 2");
  return cfg.c_bipartitedensity * t * std::sqrt(std::log(static_cast<double>(t)));
}

// ------------------------------------------------------------ majority recolouring

namespace {

// 2-colouring of a tree, root colour 0.
std::map<Vertex, int> color_tree(const Tree& t) {
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const Edge& e : t.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::map<Vertex, int> c;
  if (t.vertices.empty()) return c;
  std::queue<Vertex> q;
  c[t.vertices.front()] = 0;
  q.push(t.vertices.front());
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop();
    for (Vertex w : adj[v]) {
      if (!c.count(w)) {
        c[w] = 1 - c[v];
        q.push(w);
      }
    }
  }
  return c;
}

}  // namespace

MajorityResult majority_bipartite_minor(const Graph& g, const Expansion& e, int a) {
  if (auto v = verify_expansion(g, e); !v) throw Error("input expansion fails verification: " + v.clause);
  const int total = e.pattern.order();
  const int b = total - a;
  if (a < 0 || b < 0 || e.pattern.size() != static_cast<std::size_t>(a) * static_cast<std::size_t>(b)) {
    throw Error("pattern is not K_{a,b}");
  }
  for (const Edge& pe : e.pattern.edges()) {
    if (!(pe.u < a && pe.v >= a)) throw Error("pattern is not K_{a,b}");
  }
  std::vector<std::map<Vertex, int>> tree_color;
  std::map<Vertex, int> owner;
  for (int h = 0; h < total; ++h) {
    tree_color.push_back(color_tree(e.trees[static_cast<std::size_t>(h)]));
    for (Vertex v : e.trees[static_cast<std::size_t>(h)].vertices) owner[v] = h;
  }
  // value[j][i] for the branch edge between A-node i and B-node a + j.
  std::vector<std::vector<int>> value(static_cast<std::size_t>(b), std::vector<int>(static_cast<std::size_t>(a), -1));
  std::map<std::pair<int, int>, Edge> edge_of;
  const auto& pattern_edges = e.pattern.edges();
  for (std::size_t k = 0; k < pattern_edges.size(); ++k) {
    const int i = pattern_edges[k].u;
    const int j = pattern_edges[k].v - a;
    const Edge be = e.branch_edges[k];
    const Vertex w = owner.at(be.u) == i ? be.u : be.v;
    const Vertex y = w == be.u ? be.v : be.u;
    value[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
        tree_color[static_cast<std::size_t>(i)].at(w) ^ tree_color[static_cast<std::size_t>(a + j)].at(y);
    edge_of[{i, a + j}] = be;
  }
  MajorityResult out;
  std::vector<Edge> kept_pattern;
  for (int j = 0; j < b; ++j) {
    const auto& vals = value[static_cast<std::size_t>(j)];
    const auto ones = std::count(vals.begin(), vals.end(), 1);
    const int c = ones > a - ones ? 1 : 0;
    out.majority.push_back(c);
    int legs = 0;
    for (int i = 0; i < a; ++i) {
      if (vals[static_cast<std::size_t>(i)] == c) {
        kept_pattern.emplace_back(i, a + j);
        ++legs;
      } else {
        ++out.removed;
      }
    }
    out.legs.push_back(legs);
  }
  Expansion& x = out.expansion;
  x.pattern = Graph(total, kept_pattern);
  x.pattern_name = "subgraph of K_{" + std::to_string(a) + "," + std::to_string(b) + "}";
  x.trees = e.trees;
  x.roots = e.roots;
  for (const Edge& pe : x.pattern.edges()) x.branch_edges.push_back(edge_of.at({pe.u, pe.v}));
  std::map<Vertex, int> coloring;
  for (int h = 0; h < total; ++h) {
    const int flip = h < a ? 0 : (out.majority[static_cast<std::size_t>(h - a)] ^ 1);
    for (const auto& [v, c] : tree_color[static_cast<std::size_t>(h)]) coloring[v] = c ^ flip;
  }
  x.bipartite_coloring = std::move(coloring);
  if (auto v = verify_expansion(g, x); !v) throw Error("internal: majority output fails verification: " + v.clause);
  return out;
}

// ------------------------------------------------------------ unbalanced bound

namespace {

void check_bipartition(const Graph& g, std::span<const Vertex> a_side, std::span<const Vertex> b_side) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  for (Vertex v : a_side) {
    if (!g.contains(v) || side[static_cast<std::size_t>(v)] != -1) throw Error("not a bipartition");
    side[static_cast<std::size_t>(v)] = 0;
  }
  for (Vertex v : b_side) {
    if (!g.contains(v) || side[static_cast<std::size_t>(v)] != -1) throw Error("not a bipartition");
    side[static_cast<std::size_t>(v)] = 1;
  }
  for (int s : side) {
    if (s == -1) throw Error("not a bipartition");
  }
  for (const Edge& e : g.edges()) {
    if (side[static_cast<std::size_t>(e.u)] == side[static_cast<std::size_t>(e.v)]) throw Error("not a bipartition");
  }
}

}  // namespace

UnbalancedBound check_unbalanced_bound(const Graph& g, std::span<const Vertex> a_side,
                                       std::span<const Vertex> b_side, int t, double c) {
  if (t < 3) throw Error("t must be at least 3");
  check_bipartition(g, a_side, b_side);
  UnbalancedBound out;
  out.lhs = static_cast<double>(g.size());
  const double root = std::sqrt(static_cast<double>(a_side.size()) * static_cast<double>(b_side.size()));
  const double raw = c * t * std::sqrt(std::log(static_cast<double>(t))) * root + (t - 2.0) * g.order();
  out.rhs = std::nextafter(raw, std::numeric_limits<double>::infinity());
  out.holds = out.lhs <= out.rhs;
  return out;
}

double minimal_unbalanced_constant(const Graph& g, std::span<const Vertex> a_side, std::span<const Vertex> b_side,
                                   int t) {
  if (t < 3) throw Error("t must be at least 3");
  check_bipartition(g, a_side, b_side);
  const double excess = static_cast<double>(g.size()) - (t - 2.0) * g.order();
  if (excess <= 0) return 0;
  const double root = std::sqrt(static_cast<double>(a_side.size()) * static_cast<double>(b_side.size()));
  return excess / (t * std::sqrt(std::log(static_cast<double>(t))) * root);
}

SearchResult<Model> logbip2_extract(const Graph& g, std::span<const Vertex> a_side, std::span<const Vertex> b_side,
                                    int t, const ConstantsConfig& cfg, std::int64_t budget) {
  if (t < 2) throw Error("t must be at least 2");
  check_bipartition(g, a_side, b_side);
  const double need = cfg.c_logbip2 * std::log(static_cast<double>(t)) * static_cast<double>(a_side.size());
  if (static_cast<double>(b_side.size()) < need) throw Error("hypothesis not met");
  for (Vertex v : b_side) {
    if (g.degree(v) < 2 * t) throw Error("hypothesis not met");
  }
  return find_clique_minor(g, t, budget);
}

// ------------------------------------------------------------ connectivity

namespace {

bool is_k_connected(const Graph& h, int k) { return h.order() > k && vertex_connectivity(h) >= k; }

std::vector<Vertex> peel(const Graph& g, std::vector<Vertex> w, int k) {
  while (true) {
    const Subgraph sub = induced_subgraph(g, w);
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < sub.graph.order(); ++v) {
      if (sub.graph.degree(v) >= k) keep.push_back(sub.to_parent[static_cast<std::size_t>(v)]);
    }
    if (keep.size() == w.size()) return w;
    w = std::move(keep);
  }
}

std::optional<std::vector<Vertex>> mader_search(const Graph& g, std::vector<Vertex> w, int k,
                                                std::set<std::vector<Vertex>>& seen) {
  w = peel(g, std::move(w), k);
  if (static_cast<int>(w.size()) <= k || !seen.insert(w).second) return std::nullopt;
  const Subgraph sub = induced_subgraph(g, w);
  if (vertex_connectivity(sub.graph) >= k) return w;
  const auto cut = minimum_vertex_cut(sub.graph);
  std::vector<char> in_cut(static_cast<std::size_t>(sub.graph.order()), 0);
  for (Vertex v : cut) in_cut[static_cast<std::size_t>(v)] = 1;
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < sub.graph.order(); ++v) {
    if (!in_cut[static_cast<std::size_t>(v)]) rest.push_back(v);
  }
  const Subgraph rest_graph = induced_subgraph(sub.graph, rest);
  std::vector<std::vector<Vertex>> sides;
  for (const auto& comp : components(rest_graph.graph)) {
    std::vector<Vertex> side;
    for (Vertex v : comp) side.push_back(sub.to_parent[static_cast<std::size_t>(rest_graph.to_parent[static_cast<std::size_t>(v)])]);
    for (Vertex v : cut) side.push_back(sub.to_parent[static_cast<std::size_t>(v)]);
    std::sort(side.begin(), side.end());
    sides.push_back(std::move(side));
  }
  std::vector<Rational> dens;
  for (const auto& side : sides) dens.push_back(density(induced_subgraph(g, side).graph));
  std::vector<std::size_t> order(sides.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return dens[y] < dens[x]; });
  for (std::size_t i : order) {
    if (auto found = mader_search(g, sides[i], k, seen)) return found;
  }
  return std::nullopt;
}

}  // namespace

std::optional<ConnectedPiece> mader_extract(const Graph& g, int k) {
  if (k < 1) throw Error("k must be at least 1");
  std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) all[static_cast<std::size_t>(v)] = v;
  std::set<std::vector<Vertex>> seen;
  const auto w = mader_search(g, all, k, seen);
  if (!w) return std::nullopt;
  ConnectedPiece out{induced_subgraph(g, *w), 0};
  out.kappa = vertex_connectivity(out.subgraph.graph);
  if (!is_k_connected(out.subgraph.graph, k)) throw Error("internal: extracted piece is not k-connected");
  return out;
}

namespace {

bool mask_connected(const std::vector<VertexMask>& adj, VertexMask s) {
  if (s == 0) return false;
  VertexMask seen = s & (~s + 1);
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f != 0; f &= f - 1) next |= adj[static_cast<std::size_t>(lowest(f))];
    next &= s & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == s;
}

// min(kappa(G[s]), cap) by scanning candidate separators of G[s].
int mask_connectivity(const std::vector<VertexMask>& adj, VertexMask s, int cap) {
  const std::vector<Vertex> members = mask_to_vertices(s);
  const int size = static_cast<int>(members.size());
  int best = std::min(cap, size - 1);
  for (VertexMask pick = 0; pick < (VertexMask{1} << size); ++pick) {
    if (popcount(pick) >= best) continue;
    VertexMask cut = 0;
    for (VertexMask p = pick; p != 0; p &= p - 1) cut |= bit(members[static_cast<std::size_t>(lowest(p))]);
    if (!mask_connected(adj, s & ~cut)) best = popcount(pick);
  }
  return std::max(best, 0);
}

}  // namespace

ConnectedPiece brute_max_connectivity_subgraph(const Graph& g) {
  const int n = g.order();
  if (n > 10) throw Error("exceeds exact bound");
  if (n == 0) throw Error("null graph");
  std::vector<VertexMask> adj(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.neighbor_mask(v);
  // kappa(G[m]) <= min degree of G[m], which prunes almost every mask.
  VertexMask best_mask = 1;
  int best_kappa = 0;
  int best_size = 1;
  for (VertexMask m = 1; m < (VertexMask{1} << n); ++m) {
    const int size = popcount(m);
    int bound = size - 1;
    for (VertexMask r = m; r != 0 && bound >= best_kappa; r &= r - 1) {
      bound = std::min(bound, popcount(adj[static_cast<std::size_t>(lowest(r))] & m));
    }
    if (bound < best_kappa || (bound == best_kappa && size <= best_size)) continue;
    const int kappa = mask_connectivity(adj, m, bound);
    if (kappa > best_kappa || (kappa == best_kappa && size > best_size)) {
      best_mask = m;
      best_kappa = kappa;
      best_size = size;
    }
  }
  return ConnectedPiece{induced_subgraph(g, best_mask), best_kappa};
}

// ------------------------------------------------------------ railroads

Verdict verify_railroad(const Graph& g, const Railroad& r) {
  const int n = g.order();
  for (Vertex v : r.stations) {
    if (!g.contains(v)) throw Error("station out of range");
  }
  const std::vector<const std::vector<Path>*> families{&r.inbound, &r.outbound};
  for (const auto* family : families) {
    for (const Path& p : *family) {
      if (p.empty()) return Verdict::fail("track not a path");
      for (std::size_t k = 0; k < p.size(); ++k) {
        if (!g.contains(p[k])) return Verdict::fail("track not a path");
        if (k + 1 < p.size() && (!g.contains(p[k + 1]) || !g.has_edge(p[k], p[k + 1]))) {
          return Verdict::fail("track not a path");
        }
      }
      if (std::set<Vertex>(p.begin(), p.end()).size() != p.size()) return Verdict::fail("track not a path");
    }
  }
  for (const auto* family : families) {
    std::set<Vertex> used;
    for (const Path& p : *family) {
      for (Vertex v : p) {
        if (!used.insert(v).second) return Verdict::fail("tracks not disjoint");
      }
    }
  }
  const long long cap = 18LL * r.width * r.length;
  if (static_cast<long long>(r.inbound.size()) > cap || static_cast<long long>(r.outbound.size()) > cap) {
    return Verdict::fail("track count");
  }
  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> track_vertices;
  for (Vertex v : r.stations) covered[static_cast<std::size_t>(v)] = 1;
  for (const auto* family : families) {
    for (const Path& p : *family) {
      for (Vertex v : p) {
        covered[static_cast<std::size_t>(v)] = 1;
        track_vertices.push_back(v);
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (covered[static_cast<std::size_t>(v)]) continue;
    for (const auto* family : families) {
      for (const Path& p : *family) {
        int hits = 0;
        for (Vertex w : p) hits += g.has_edge(v, w) ? 1 : 0;
        if (hits > 3) return Verdict::fail("track neighbors");
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (covered[static_cast<std::size_t>(v)]) continue;
    for (const auto* family : families) {
      long long touched = 0;
      for (const Path& p : *family) {
        if (std::any_of(p.begin(), p.end(), [&](Vertex w) { return g.has_edge(v, w); })) ++touched;
      }
      if (touched > 4LL * r.width) return Verdict::fail("track incidence");
    }
  }
  std::sort(track_vertices.begin(), track_vertices.end());
  track_vertices.erase(std::unique(track_vertices.begin(), track_vertices.end()), track_vertices.end());
  if (degeneracy(induced_subgraph(g, track_vertices).graph).d > 96LL * r.width) return Verdict::fail("degeneracy");
  return Verdict::pass();
}

// ------------------------------------------------------------ near-bipartite

bool check_near_bipartite_witness(const Graph& g, std::span<const Vertex> x, int t) {
  std::set<Vertex> removed;
  for (Vertex v : x) {
    if (!g.contains(v)) throw Error("vertex out of range");
    removed.insert(v);
  }
  if (static_cast<long long>(removed.size()) > 8LL * t - 2) return false;
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!removed.count(v)) rest.push_back(v);
  }
  const Subgraph sub = induced_subgraph(g, rest);
  for (const auto& comp : components(sub.graph)) {
    if (static_cast<long long>(comp.size()) < 8LL * t + 2) continue;
    if (bipartition(induced_subgraph(sub.graph, comp).graph)) return true;
  }
  return false;
}

// ------------------------------------------------------------ list colouring cores

std::optional<ColoringCore> find_noncolorable_connected_core(const Graph& g, const ListAssignment& lists, int k) {
  if (k < 1) throw Error("k must be at least 1");
  if (g.order() > 8) throw Error("exceeds exact bound");
  if (lists.order() != g.order()) throw Error("list assignment does not match the graph");
  if (lists.min_size() < 4 * k + 1) throw Error("lists smaller than 4k + 1");
  const int keep = std::max(1, lists.min_size() - 4 * k);
  constexpr double kMaxReductions = 2e5;
  const int n = g.order();
  std::vector<VertexMask> masks;
  for (VertexMask m = 1; m < (VertexMask{1} << n); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(),
                   [](VertexMask x, VertexMask y) { return std::popcount(x) > std::popcount(y); });
  for (VertexMask m : masks) {
    Subgraph sub = induced_subgraph(g, m);
    if (!is_k_connected(sub.graph, k)) continue;
    const ListAssignment base = lists.restricted(sub.to_parent);
    if (!is_list_colorable(sub.graph, base)) return ColoringCore{std::move(sub), base};
    // Every reduction to exactly `keep` colours per vertex.
    std::vector<std::vector<std::vector<Color>>> choices;
    double count = 1;
    for (Vertex v = 0; v < sub.graph.order(); ++v) {
      const auto& full = base.list(v);
      std::vector<std::vector<Color>> opts;
      std::vector<char> pick(full.size(), 0);
      std::fill(pick.end() - keep, pick.end(), 1);
      do {
        std::vector<Color> l;
        for (std::size_t q = 0; q < full.size(); ++q) {
          if (pick[q]) l.push_back(full[q]);
        }
        opts.push_back(std::move(l));
      } while (std::next_permutation(pick.begin(), pick.end()));
      count *= static_cast<double>(opts.size());
      choices.push_back(std::move(opts));
    }
    if (count > kMaxReductions) throw Error("exceeds exact bound");
    std::vector<std::size_t> idx(choices.size(), 0);
    while (true) {
      std::vector<std::vector<Color>> reduced;
      for (std::size_t v = 0; v < idx.size(); ++v) reduced.push_back(choices[v][idx[v]]);
      ListAssignment la(std::move(reduced), base.palette_bound());
      if (!is_list_colorable(sub.graph, la)) return ColoringCore{std::move(sub), std::move(la)};
      std::size_t v = 0;
      while (v < idx.size() && ++idx[v] == choices[v].size()) idx[v++] = 0;
      if (v == idx.size()) break;
    }
  }
  return std::nullopt;
}

// ------------------------------------------------------------ small connected covers

SmallConnCover small_conn_cover(const Graph& g, const ListAssignment& lists, int k, int t, int r,
                                const ConstantsConfig& cfg) {
  if (k < 1 || r < 0) throw Error("k must be positive and r nonnegative");
  if (lists.order() != g.order()) throw Error("list assignment does not match the graph");
  if (t < 3) throw Error("threshold");
  const FunctionTable table(cfg);
  SmallConnCover out;
  out.size_cap = t * table.f(t) * std::log(static_cast<double>(t));
  if (out.size_cap < k + 1) throw Error("threshold");
  const int n = g.order();
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  for (int stage = 1; stage <= r; ++stage) {
    auto fail = [&](std::string why) {
      out.failed_stage = stage;
      out.reason = std::move(why);
      return out;
    };
    std::vector<Vertex> x;
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v) (removed[static_cast<std::size_t>(v)] ? x : rest).push_back(v);
    if (rest.empty()) return fail("residue is empty");
    std::vector<std::vector<Color>> residual;
    std::optional<Coloring> x_coloring;
    if (!x.empty()) x_coloring = is_list_colorable(induced_subgraph(g, x).graph, lists.restricted(x));
    for (Vertex v : rest) {
      std::vector<Color> l = lists.list(v);
      if (x_coloring) {
        for (std::size_t q = 0; q < x.size(); ++q) {
          if (g.has_edge(v, x[q])) l.erase(std::remove(l.begin(), l.end(), (*x_coloring)[q]), l.end());
        }
      }
      residual.push_back(std::move(l));
    }
    const ListAssignment residual_lists(residual, lists.palette_bound());
    if (is_list_colorable(induced_subgraph(g, rest).graph, residual_lists)) return fail("residue is colourable");
    // Shrink to a vertex-critical non-colourable subgraph.
    std::vector<std::size_t> critical(rest.size());
    for (std::size_t q = 0; q < rest.size(); ++q) critical[q] = q;
    for (std::size_t q = 0; q < rest.size(); ++q) {
      std::vector<std::size_t> trial;
      for (std::size_t c : critical) {
        if (c != q) trial.push_back(c);
      }
      std::vector<Vertex> vs;
      for (std::size_t c : trial) vs.push_back(rest[c]);
      std::vector<Vertex> local(trial.begin(), trial.end());
      if (!vs.empty() && !is_list_colorable(induced_subgraph(g, vs).graph, residual_lists.restricted(local))) {
        critical = std::move(trial);
      }
    }
    std::vector<Vertex> core;
    for (std::size_t c : critical) core.push_back(rest[c]);
    const Subgraph core_graph = induced_subgraph(g, core);
    const auto piece = mader_extract(core_graph.graph, k);
    if (!piece) return fail("no k-connected piece in the critical subgraph");
    if (piece->subgraph.graph.order() > out.size_cap) return fail("piece exceeds the size cap");
    std::vector<Vertex> part;
    for (Vertex v : piece->subgraph.to_parent) part.push_back(core_graph.to_parent[static_cast<std::size_t>(v)]);
    for (Vertex v : part) removed[static_cast<std::size_t>(v)] = 1;
    out.parts.push_back(induced_subgraph(g, part));
  }
  return out;
}

}  // namespace minorkit
