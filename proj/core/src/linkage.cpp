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

#include "minorkit/linkage.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "minorkit/flow.hpp"

namespace minorkit {

int total_length(std::span<const Path> paths) {
  int total = 0;
  for (const Path& p : paths) total += path_length(p);
  return total;
}

void validate_spec(const Graph& g, const LinkageSpec& spec) {
  for (const auto& [s, t] : spec.pairs) {
    if (!g.contains(s) || !g.contains(t)) throw Error("terminal out of range");
  }
  if (spec.parity) {
    std::set<int> seen;
    for (int i : *spec.parity) {
      if (i < 0 || static_cast<std::size_t>(i) >= spec.pairs.size()) throw Error("parity index out of range");
      if (!seen.insert(i).second) throw Error("repeated parity index");
      if (spec.pairs[static_cast<std::size_t>(i)].first == spec.pairs[static_cast<std::size_t>(i)].second) {
        throw Error("parity set names a pair with s = t");
      }
    }
  }
}

namespace {

bool wants_odd(const LinkageSpec& spec, std::size_t i) {
  return spec.parity && std::find(spec.parity->begin(), spec.parity->end(), static_cast<int>(i)) != spec.parity->end();
}

}  // namespace

Verdict verify_linkage(const Graph& g, const LinkageSpec& spec, const Linkage& l) {
  validate_spec(g, spec);
  if (l.paths.size() != spec.pairs.size()) return Verdict::fail("path count");
  for (std::size_t i = 0; i < l.paths.size(); ++i) {
    const Path& p = l.paths[i];
    for (Vertex v : p) {
      if (!g.contains(v)) throw Error("path vertex out of range");
    }
    const auto [s, t] = spec.pairs[i];
    if (p.empty() || !((p.front() == s && p.back() == t) || (p.front() == t && p.back() == s))) {
      return Verdict::fail("path endpoints");
    }
    for (std::size_t j = 0; j + 1 < p.size(); ++j) {
      if (!g.has_edge(p[j], p[j + 1])) return Verdict::fail("path not in graph");
    }
    if (std::set<Vertex>(p.begin(), p.end()).size() != p.size()) return Verdict::fail("path not simple");
  }
  for (std::size_t i = 0; i < l.paths.size(); ++i) {
    const Path& p = l.paths[i];
    for (std::size_t k = 1; k + 1 < p.size(); ++k) {
      for (std::size_t j = 0; j < l.paths.size(); ++j) {
        if (j == i) continue;
        const Path& q = l.paths[j];
        if (std::find(q.begin(), q.end(), p[k]) != q.end()) return Verdict::fail("paths intersect");
      }
    }
  }
  if (spec.parity) {
    for (std::size_t i = 0; i < l.paths.size(); ++i) {
      if ((path_length(l.paths[i]) % 2 == 1) != wants_odd(spec, i)) return Verdict::fail("parity");
    }
  }
  return Verdict::pass();
}

// ------------------------------------------------------------ find_linkage

namespace {

class LinkageSearch {
 public:
  LinkageSearch(const Graph& g, const LinkageSpec& spec, const std::function<bool(const Linkage&)>& accept,
                std::int64_t budget, VertexMask forbidden)
      : g_(g), spec_(spec), accept_(accept), budget_(budget), forbidden_(forbidden) {
    for (Vertex v = 0; v < g.order(); ++v) nbr_.push_back(g.neighbor_mask(v));
    for (const auto& [s, t] : spec.pairs) terminals_ |= bit(s) | bit(t);
    paths_.resize(spec.pairs.size());
  }

  SearchStatus run() {
    const bool ok = pair(0);
    if (aborted_) return SearchStatus::exhausted;
    return ok ? SearchStatus::found : SearchStatus::proven_absent;
  }

  std::uint64_t nodes() const { return static_cast<std::uint64_t>(nodes_); }
  const std::vector<Path>& paths() const { return paths_; }

 private:
  VertexMask free_mask() const { return g_.all_mask() & ~(terminals_ | used_ | forbidden_); }

  bool reachable(Vertex from, Vertex to, VertexMask through) const {
    if (nbr_[static_cast<std::size_t>(from)] & bit(to)) return true;
    VertexMask reach = nbr_[static_cast<std::size_t>(from)] & through;
    while (reach) {
      VertexMask around = 0;
      for (VertexMask r = reach; r; r &= r - 1) around |= nbr_[static_cast<std::size_t>(lowest(r))];
      if (around & bit(to)) return true;
      const VertexMask next = reach | (around & through);
      if (next == reach) return false;
      reach = next;
    }
    return false;
  }

  bool rest_feasible(std::size_t from) const {
    const VertexMask free = free_mask();
    for (std::size_t j = from; j < spec_.pairs.size(); ++j) {
      const auto [s, t] = spec_.pairs[j];
      if (s != t && !reachable(s, t, free)) return false;
    }
    return true;
  }

  bool pair(std::size_t i) {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return false;
    }
    if (i == spec_.pairs.size()) return accept_(Linkage{paths_});
    const auto [s, t] = spec_.pairs[i];
    if (s == t) {
      paths_[i] = {s};
      return pair(i + 1);
    }
    Path current{s};
    return extend(i, current, bit(s));
  }

  bool extend(std::size_t i, Path& current, VertexMask on_path) {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return false;
    }
    const Vertex t = spec_.pairs[i].second;
    const Vertex v = current.back();
    const VertexMask free = free_mask() & ~on_path;
    for (Vertex w : g_.neighbors(v)) {
      if (w == t) {
        const bool odd = current.size() % 2 == 1;  // current.size() edges once t is appended
        if (spec_.parity && odd != wants_odd(spec_, i)) continue;
        current.push_back(t);
        paths_[i] = current;
        const VertexMask saved = used_;
        used_ |= on_path;
        const bool ok = rest_feasible(i + 1) && pair(i + 1);
        used_ = saved;
        current.pop_back();
        if (ok) return true;
        if (aborted_) return false;
        continue;
      }
      if (!(free & bit(w)) || !reachable(w, t, free & ~bit(w))) continue;
      current.push_back(w);
      const bool ok = extend(i, current, on_path | bit(w));
      current.pop_back();
      if (ok) return true;
      if (aborted_) return false;
    }
    return false;
  }

  const Graph& g_;
  const LinkageSpec& spec_;
  const std::function<bool(const Linkage&)>& accept_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  bool aborted_ = false;
  VertexMask forbidden_;
  VertexMask terminals_ = 0;
  VertexMask used_ = 0;
  std::vector<VertexMask> nbr_;
  std::vector<Path> paths_;
};

}  // namespace

SearchResult<Linkage> for_each_linkage(const Graph& g, const LinkageSpec& spec,
                                       const std::function<bool(const Linkage&)>& accept, std::int64_t budget,
                                       VertexMask forbidden) {
  if (budget <= 0) throw Error("budget must be positive");
  validate_spec(g, spec);
  if (g.order() > 64) throw Error("exact linkage search supports at most 64 vertices");
  SearchResult<Linkage> out;
  LinkageSearch search(g, spec, accept, budget, forbidden);
  out.status = search.run();
  out.nodes = search.nodes();
  if (out.found()) {
    Linkage l{search.paths()};
    if (auto v = verify_linkage(g, spec, l); !v) throw Error("internal: linkage failed verification: " + v.clause);
    out.certificate = std::move(l);
  }
  return out;
}

SearchResult<Linkage> find_linkage(const Graph& g, const LinkageSpec& spec, std::int64_t budget,
                                   VertexMask forbidden) {
  return for_each_linkage(g, spec, [](const Linkage&) { return true; }, budget, forbidden);
}

std::optional<std::vector<Path>> find_geodesic_ab_paths(const Graph& g, std::span<const Vertex> a,
                                                        std::span<const Vertex> b, int count) {
  std::set<Vertex> as(a.begin(), a.end());
  for (Vertex v : b) {
    if (as.count(v)) throw Error("A and B must be disjoint");
  }
  if (count <= 0) return std::vector<Path>{};
  auto result = min_total_ab_paths(g, a, b, count);
  if (static_cast<int>(result.paths.size()) < count) return std::nullopt;
  return std::move(result.paths);
}

// ----------------------------------------------------------------- express

Verdict is_express(const Graph& g, std::span<const Path> paths, ExpressMode mode) {
  std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (Vertex v : paths[i]) {
      if (!g.contains(v)) throw Error("path vertex out of range");
      owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
  }
  if (find_shortcut_witness(g, paths)) return Verdict::fail("condition (i)");
  std::vector<Vertex> inside;
  std::set<Vertex> ends;
  if (mode == ExpressMode::linkage) {
    for (const Path& p : paths) {
      if (!p.empty()) {
        ends.insert(p.front());
        ends.insert(p.back());
      }
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (owner[static_cast<std::size_t>(v)] >= 0 && !ends.count(v)) inside.push_back(v);
  }
  const int ell = static_cast<int>(paths.size());
  if (ell > 0 && degeneracy(induced_subgraph(g, inside).graph).d > 2 * ell - 1) {
    return Verdict::fail("condition (ii)");
  }
  return Verdict::pass();
}

std::optional<ShortcutWitness> find_shortcut_witness(const Graph& g, std::span<const Path> paths) {
  std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (Vertex v : paths[i]) owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<int> count(paths.size());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (owner[static_cast<std::size_t>(v)] >= 0) continue;
    std::fill(count.begin(), count.end(), 0);
    for (Vertex w : g.neighbors(v)) {
      const int o = owner[static_cast<std::size_t>(w)];
      if (o >= 0) ++count[static_cast<std::size_t>(o)];
    }
    for (std::size_t i = 0; i < paths.size(); ++i) {
      if (count[i] >= 4) return ShortcutWitness{v, static_cast<int>(i)};
    }
  }
  return std::nullopt;
}

std::vector<Vertex> rewire_witness(const Graph& g, std::span<const Path> paths) {
  std::vector<Vertex> all;
  for (const Path& p : paths) all.insert(all.end(), p.begin(), p.end());
  const Subgraph sub = induced_subgraph(g, all);
  std::vector<Vertex> core;
  for (Vertex v : k_core(sub.graph, 2 * static_cast<int>(paths.size()))) {
    core.push_back(sub.to_parent[static_cast<std::size_t>(v)]);
  }
  return core;
}

std::vector<Path> improve_shortcut(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b,
                                   std::span<const Path> paths, Vertex witness) {
  if (!g.contains(witness)) throw Error("invalid witness");
  for (const Path& p : paths) {
    if (std::find(p.begin(), p.end(), witness) != p.end()) throw Error("invalid witness");
  }
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const Path& p = paths[i];
    std::vector<std::size_t> pos;
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (g.has_edge(witness, p[k])) pos.push_back(k);
    }
    if (pos.size() < 4) continue;
    const std::size_t p1 = pos.front();
    const std::size_t p2 = pos.back();
    Path next;
    const bool in_a = std::find(a.begin(), a.end(), witness) != a.end();
    const bool in_b = std::find(b.begin(), b.end(), witness) != b.end();
    if (in_a) {
      next.push_back(witness);
      next.insert(next.end(), p.begin() + static_cast<std::ptrdiff_t>(p2), p.end());
    } else if (in_b) {
      next.assign(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(p1) + 1);
      next.push_back(witness);
    } else {
      next.assign(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(p1) + 1);
      next.push_back(witness);
      next.insert(next.end(), p.begin() + static_cast<std::ptrdiff_t>(p2), p.end());
    }
    std::vector<Path> out(paths.begin(), paths.end());
    out[i] = std::move(next);
    return out;
  }
  throw Error("invalid witness");
}

std::vector<Path> improve_cycle_rewire(const Graph& g, std::span<const Path> paths) {
  const auto core = rewire_witness(g, paths);
  if (core.empty()) throw Error("no rewiring witness: the (2l)-core is empty");
  std::vector<char> in_h(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : core) in_h[static_cast<std::size_t>(v)] = 1;
  const std::size_t ell = paths.size();
  // Positions of the first two core vertices on each path.
  std::vector<int> pos_u(ell, -1);
  std::vector<int> pos_v(ell, -1);
  std::vector<std::size_t> nodes;
  for (std::size_t i = 0; i < ell; ++i) {
    for (std::size_t k = 0; k < paths[i].size(); ++k) {
      if (!in_h[static_cast<std::size_t>(paths[i][k])]) continue;
      if (pos_u[i] < 0) {
        pos_u[i] = static_cast<int>(k);
      } else {
        pos_v[i] = static_cast<int>(k);
        break;
      }
    }
    if (pos_v[i] >= 0) nodes.push_back(i);
  }
  if (nodes.empty()) throw Error("auxiliary digraph has no vertex");
  // Last core neighbour of u_i on path j beyond v_j, or -1.
  auto target = [&](std::size_t i, std::size_t j) {
    const Vertex u = paths[i][static_cast<std::size_t>(pos_u[i])];
    for (int k = static_cast<int>(paths[j].size()) - 1; k > pos_v[j]; --k) {
      const Vertex w = paths[j][static_cast<std::size_t>(k)];
      if (in_h[static_cast<std::size_t>(w)] && g.has_edge(u, w)) return k;
    }
    return -1;
  };
  std::vector<Path> out(paths.begin(), paths.end());
  for (std::size_t i : nodes) {
    const int k = target(i, i);
    if (k >= 0) {
      Path next(paths[i].begin(), paths[i].begin() + pos_u[i] + 1);
      next.insert(next.end(), paths[i].begin() + k, paths[i].end());
      out[i] = std::move(next);
      return out;
    }
  }
  std::map<std::size_t, std::size_t> step;
  std::vector<std::size_t> walk{nodes.front()};
  std::map<std::size_t, std::size_t> seen_at{{nodes.front(), 0}};
  while (true) {
    const std::size_t i = walk.back();
    std::optional<std::size_t> next;
    for (std::size_t j : nodes) {
      if (j != i && target(i, j) >= 0) {
        next = j;
        break;
      }
    }
    if (!next) throw Error("internal: auxiliary digraph has a sink");
    step[i] = *next;
    if (seen_at.count(*next)) {
      walk.erase(walk.begin(), walk.begin() + static_cast<std::ptrdiff_t>(seen_at[*next]));
      break;
    }
    seen_at[*next] = walk.size();
    walk.push_back(*next);
  }
  for (std::size_t i : walk) {
    const std::size_t j = step[i];
    const int k = target(i, j);
    Path next(paths[i].begin(), paths[i].begin() + pos_u[i] + 1);
    next.insert(next.end(), paths[j].begin() + k, paths[j].end());
    out[i] = std::move(next);
  }
  return out;
}

// ----------------------------------------------------------------- descent

namespace {

void validate_ab_system(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b,
                        std::span<const Path> paths) {
  std::set<Vertex> as(a.begin(), a.end());
  std::set<Vertex> bs(b.begin(), b.end());
  for (Vertex v : as) {
    if (bs.count(v)) throw Error("A and B must be disjoint");
  }
  std::set<Vertex> used;
  for (const Path& p : paths) {
    if (p.empty()) throw Error("empty path");
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (!g.contains(p[k])) throw Error("path vertex out of range");
      if (!used.insert(p[k]).second) throw Error("paths are not vertex-disjoint");
      if (k + 1 < p.size() && !g.has_edge(p[k], p[k + 1])) throw Error("path uses a non-edge");
      const bool first = k == 0;
      const bool last = k + 1 == p.size();
      if (as.count(p[k]) != (first ? 1U : 0U)) throw Error("path must meet A exactly at its start");
      if (bs.count(p[k]) != (last ? 1U : 0U)) throw Error("path must meet B exactly at its end");
    }
  }
}

int find_arc(const FlowNetwork& net, int from, int to) {
  for (int a : net.out_arcs(from)) {
    if (a % 2 == 0 && net.arc(a).to == to) return a;
  }
  throw Error("internal: missing arc");
}

std::optional<std::vector<Path>> cancel_once(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b,
                                             std::span<const Path> paths) {
  SplitNetwork sn = build_split_network(g, a, b, 1);
  for (const Path& p : paths) {
    sn.net.set_flow(find_arc(sn.net, sn.source, 2 * p.front()), 1);
    for (std::size_t k = 0; k < p.size(); ++k) {
      sn.net.set_flow(sn.vertex_arc[static_cast<std::size_t>(p[k])], 1);
      if (k + 1 < p.size()) sn.net.set_flow(find_arc(sn.net, 2 * p[k] + 1, 2 * p[k + 1]), 1);
    }
    sn.net.set_flow(find_arc(sn.net, 2 * p.back() + 1, sn.sink), 1);
  }
  if (!sn.net.cancel_negative_cycle()) return std::nullopt;
  return decompose_paths(g, sn);
}

}  // namespace

DescentResult geodesic_descent(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b,
                               std::span<const Path> start, bool global) {
  validate_ab_system(g, a, b, start);
  DescentResult r;
  r.paths.assign(start.begin(), start.end());
  r.totals.push_back(total_length(r.paths));
  while (true) {
    if (auto w = find_shortcut_witness(g, r.paths)) {
      r.paths = improve_shortcut(g, a, b, r.paths, w->vertex);
      ++r.shortcut_moves;
    } else if (!rewire_witness(g, r.paths).empty()) {
      r.paths = improve_cycle_rewire(g, r.paths);
      ++r.rewire_moves;
    } else if (auto better = global ? cancel_once(g, a, b, r.paths) : std::nullopt) {
      r.paths = std::move(*better);
      ++r.global_moves;
    } else {
      break;
    }
    validate_ab_system(g, a, b, r.paths);
    const int total = total_length(r.paths);
    if (total >= r.totals.back() || r.paths.size() != start.size()) {
      throw Error("internal: improvement move did not shorten the system");
    }
    r.totals.push_back(total);
  }
  if (auto v = is_express(g, r.paths, ExpressMode::ab_paths); !v) {
    throw Error("internal: descent fixed point is not express: " + v.clause);
  }
  return r;
}

TwinExpansion twin_expansion(const Graph& g, std::span<const std::pair<Vertex, Vertex>> pairs) {
  const int n = g.order();
  TwinExpansion te;
  te.to_original.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) te.to_original[static_cast<std::size_t>(v)] = v;
  std::vector<int> uses(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<Vertex>> copies(static_cast<std::size_t>(n));
  auto occurrence = [&](Vertex v) {
    if (!g.contains(v)) throw Error("terminal out of range");
    if (uses[static_cast<std::size_t>(v)]++ == 0) return v;
    const auto twin = static_cast<Vertex>(te.to_original.size());
    te.to_original.push_back(v);
    copies[static_cast<std::size_t>(v)].push_back(twin);
    return twin;
  };
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].first != pairs[i].second) te.pair_index.push_back(static_cast<int>(i));
  }
  for (int i : te.pair_index) te.a.push_back(occurrence(pairs[static_cast<std::size_t>(i)].first));
  for (int i : te.pair_index) te.b.push_back(occurrence(pairs[static_cast<std::size_t>(i)].second));
  std::vector<char> isolated(static_cast<std::size_t>(n), 0);
  for (const auto& [s, t] : pairs) {
    if (s == t && uses[static_cast<std::size_t>(s)] == 0) isolated[static_cast<std::size_t>(s)] = 1;
  }
  for (Vertex v = 0; v < n; ++v) copies[static_cast<std::size_t>(v)].insert(copies[static_cast<std::size_t>(v)].begin(), v);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (isolated[static_cast<std::size_t>(e.u)] || isolated[static_cast<std::size_t>(e.v)]) continue;
    for (Vertex x : copies[static_cast<std::size_t>(e.u)]) {
      for (Vertex y : copies[static_cast<std::size_t>(e.v)]) edges.emplace_back(x, y);
    }
  }
  te.graph = Graph(static_cast<int>(te.to_original.size()), edges);
  return te;
}

LinkageDescentResult geodesic_linkage_descent(const Graph& g, std::span<const std::pair<Vertex, Vertex>> pairs,
                                              const Linkage& start, bool global) {
  LinkageSpec spec{{pairs.begin(), pairs.end()}, std::nullopt};
  if (auto v = verify_linkage(g, spec, start); !v) throw Error("start is not a linkage: " + v.clause);
  const TwinExpansion te = twin_expansion(g, pairs);
  std::vector<Path> lifted;
  for (std::size_t k = 0; k < te.pair_index.size(); ++k) {
    const auto i = static_cast<std::size_t>(te.pair_index[k]);
    Path p = start.paths[i];
    if (p.front() != pairs[i].first) std::reverse(p.begin(), p.end());
    p.front() = te.a[k];
    p.back() = te.b[k];
    lifted.push_back(std::move(p));
  }
  LinkageDescentResult out;
  out.inner = geodesic_descent(te.graph, te.a, te.b, lifted, global);
  out.linkage.paths.resize(pairs.size());
  out.pairs.assign(pairs.begin(), pairs.end());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].first == pairs[i].second) out.linkage.paths[i] = {pairs[i].first};
  }
  for (const Path& p : out.inner.paths) {
    const auto k = static_cast<std::size_t>(std::find(te.a.begin(), te.a.end(), p.front()) - te.a.begin());
    const auto i = static_cast<std::size_t>(te.pair_index[k]);
    Path projected;
    for (Vertex v : p) projected.push_back(te.to_original[static_cast<std::size_t>(v)]);
    out.pairs[i] = {projected.front(), projected.back()};
    out.linkage.paths[i] = std::move(projected);
  }
  LinkageSpec realised{out.pairs, std::nullopt};
  if (auto v = verify_linkage(g, realised, out.linkage); !v) {
    throw Error("internal: projected linkage failed verification: " + v.clause);
  }
  return out;
}

// ------------------------------------------------------------------ Menger

MengerResult menger_variant_paths(const Graph& g, std::span<const Vertex> a1, std::span<const Vertex> a2,
                                  std::span<const Vertex> b) {
  std::vector<Vertex> a(a1.begin(), a1.end());
  a.insert(a.end(), a2.begin(), a2.end());
  std::set<Vertex> seen;
  for (Vertex v : a) {
    if (!seen.insert(v).second) throw Error("A_1 and A_2 must be disjoint sets");
  }
  for (Vertex v : b) {
    if (!seen.insert(v).second) throw Error("B must be disjoint from A_1 and A_2");
  }
  auto flow = max_disjoint_ab_paths(g, a, b, static_cast<int>(a.size()));
  MengerResult out;
  if (flow.paths.size() == a.size()) {
    out.paths = std::move(flow.paths);
  } else {
    out.cut = std::move(flow.cut);
  }
  return out;
}

bool menger_fan_holds(const Graph& g, std::span<const Vertex> ai, std::span<const Vertex> other,
                      std::span<const Vertex> b) {
  const int n = g.order();
  std::vector<int> role(static_cast<std::size_t>(n), 0);  // 1 = A_i, 2 = removed, 3 = B
  for (Vertex v : other) role[static_cast<std::size_t>(v)] = 2;
  for (Vertex v : b) role[static_cast<std::size_t>(v)] = 3;
  for (Vertex v : ai) role[static_cast<std::size_t>(v)] = 1;
  FlowNetwork net(2 * n + 2);
  const int source = 2 * n;
  const int sink = 2 * n + 1;
  const int big = 2 * n + 2;
  for (Vertex v = 0; v < n; ++v) {
    const int r = role[static_cast<std::size_t>(v)];
    if (r == 2) continue;
    net.add_arc(2 * v, 2 * v + 1, r == 1 ? 2 : 1);
    if (r == 1) net.add_arc(source, 2 * v, 2);
    if (r == 3) net.add_arc(2 * v + 1, sink, big);
  }
  for (const Edge& e : g.edges()) {
    const int ru = role[static_cast<std::size_t>(e.u)];
    const int rv = role[static_cast<std::size_t>(e.v)];
    if (ru == 2 || rv == 2) continue;
    if (rv != 1) net.add_arc(2 * e.u + 1, 2 * e.v, big);
    if (ru != 1) net.add_arc(2 * e.v + 1, 2 * e.u, big);
  }
  const int want = 2 * static_cast<int>(ai.size());
  return net.max_flow(source, sink, want) == want;
}

// ------------------------------------------------------------- k-linkedness

namespace {

template <class F>
bool for_each_pair_multiset(int n, int k, F&& f) {
  std::vector<std::pair<Vertex, Vertex>> all;
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = s; t < n; ++t) all.emplace_back(s, t);
  }
  std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
  while (true) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t i : idx) pairs.push_back(all[i]);
    if (!f(pairs)) return false;
    int j = k - 1;
    while (j >= 0 && idx[static_cast<std::size_t>(j)] == all.size() - 1) --j;
    if (j < 0) return true;
    ++idx[static_cast<std::size_t>(j)];
    for (int q = j + 1; q < k; ++q) idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(j)];
  }
}

bool linked_impl(const Graph& g, int k, std::int64_t budget, bool parity) {
  if (k < 1) throw Error("k must be at least 1");
  if (g.order() > 8) throw Error("exceeds exact bound");
  if (k > g.order()) return false;
  return for_each_pair_multiset(g.order(), k, [&](const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    std::vector<int> open;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (pairs[i].first != pairs[i].second) open.push_back(static_cast<int>(i));
    }
    const std::uint32_t subsets = parity ? (1U << open.size()) : 1U;
    for (std::uint32_t m = 0; m < subsets; ++m) {
      LinkageSpec spec{pairs, std::nullopt};
      if (parity) {
        spec.parity = std::vector<int>{};
        for (std::size_t q = 0; q < open.size(); ++q) {
          if (m >> q & 1U) spec.parity->push_back(open[q]);
        }
      }
      const auto r = find_linkage(g, spec, budget);
      if (r.status == SearchStatus::exhausted) throw Error("budget exhausted");
      if (!r.found()) return false;
    }
    return true;
  });
}

}  // namespace

bool is_k_linked(const Graph& g, int k, std::int64_t budget) { return linked_impl(g, k, budget, false); }
bool is_k_parity_linked(const Graph& g, int k, std::int64_t budget) { return linked_impl(g, k, budget, true); }

}  // namespace minorkit
