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

#include "minorkit/woven.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace minorkit {

std::vector<std::pair<Vertex, Vertex>> WovenQuery::pairs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t k = 0; k < s_terms.size() && k < t_terms.size(); ++k) out.emplace_back(s_terms[k], t_terms[k]);
  return out;
}

namespace {

LinkageSpec spec_of(const WovenQuery& q) {
  LinkageSpec spec{q.pairs(), std::nullopt};
  if (q.parity()) spec.parity = q.i.value_or(std::vector<int>{});
  return spec;
}

bool in_j(const WovenQuery& q, std::size_t k) {
  return q.j && std::find(q.j->begin(), q.j->end(), static_cast<int>(k)) != q.j->end();
}

std::size_t clique_size(std::size_t a) { return a == 0 ? 0 : a * (a - 1) / 2; }

Model empty_clique_model() { return make_clique_model({}); }

}  // namespace

void validate_query(const Graph& g, const WovenQuery& q) {
  std::set<Vertex> roots;
  for (Vertex v : q.r) {
    if (!g.contains(v)) throw Error("root out of range");
    if (!roots.insert(v).second) throw Error("repeated root");
  }
  if (q.s_terms.size() != q.t_terms.size()) throw Error("terminal multisets differ in size");
  if (q.j) {
    std::set<int> seen;
    for (int k : *q.j) {
      if (k < 0 || static_cast<std::size_t>(k) >= q.r.size()) throw Error("root class index out of range");
      if (!seen.insert(k).second) throw Error("repeated root class index");
    }
  }
  validate_spec(g, spec_of(q));
}

Verdict verify_woven_witness(const Graph& g, const WovenQuery& q, const WovenWitness& w) {
  validate_query(g, q);
  std::vector<Vertex> model_vertices;
  if (q.parity()) {
    if (!w.expansion) return Verdict::fail("expansion");
    const Expansion& e = *w.expansion;
    if (e.pattern.order() != static_cast<int>(q.r.size()) ||
        e.pattern.size() != clique_size(q.r.size())) {
      return Verdict::fail("expansion");
    }
    if (!e.bipartite_coloring || !e.roots) return Verdict::fail("expansion");
    if (!verify_expansion(g, e)) return Verdict::fail("expansion");
    if (std::set<Vertex>(e.roots->begin(), e.roots->end()) != std::set<Vertex>(q.r.begin(), q.r.end())) {
      return Verdict::fail("model roots");
    }
    for (std::size_t k = 0; k < q.r.size(); ++k) {
      const auto it = e.bipartite_coloring->find(q.r[k]);
      if (it == e.bipartite_coloring->end() || (it->second == 0) != in_j(q, k)) return Verdict::fail("root classes");
    }
    model_vertices = expansion_vertices(e);
  } else {
    if (!w.model) return Verdict::fail("model");
    const Model& m = *w.model;
    if (m.pattern.order() != static_cast<int>(q.r.size()) ||
        m.pattern.size() != clique_size(q.r.size())) {
      return Verdict::fail("model");
    }
    if (!verify_model(g, m)) return Verdict::fail("model");
    const std::set<Vertex> roots(q.r.begin(), q.r.end());
    for (const auto& set : m.branch_sets) {
      int hits = 0;
      for (Vertex v : set) hits += static_cast<int>(roots.count(v));
      if (hits != 1) return Verdict::fail("model roots");
      model_vertices.insert(model_vertices.end(), set.begin(), set.end());
    }
  }
  if (!verify_linkage(g, spec_of(q), w.linkage)) return Verdict::fail("linkage");
  std::set<Vertex> path_vertices;
  for (const Path& p : w.linkage.paths) path_vertices.insert(p.begin(), p.end());
  std::set<Vertex> shared;
  for (Vertex v : model_vertices) {
    if (path_vertices.count(v)) shared.insert(v);
  }
  std::set<Vertex> expected;
  for (Vertex v : q.r) {
    if (std::find(q.s_terms.begin(), q.s_terms.end(), v) != q.s_terms.end() ||
        std::find(q.t_terms.begin(), q.t_terms.end(), v) != q.t_terms.end()) {
      expected.insert(v);
    }
  }
  if (shared != expected) return Verdict::fail("intersection");
  return Verdict::pass();
}

// ------------------------------------------------------------------- search

namespace {

Expansion bipartite_from_model(const Graph& gc, const Model& m, std::span<const Vertex> roots,
                               const std::vector<int>& color) {
  Expansion e = model_to_expansion(gc, m);
  e.roots = std::vector<Vertex>(roots.begin(), roots.end());
  std::map<Vertex, int> c;
  for (Vertex v : expansion_vertices(e)) c[v] = color[static_cast<std::size_t>(v)];
  e.bipartite_coloring = std::move(c);
  return e;
}

}  // namespace

SearchResult<WovenWitness> answer_woven_query(const Graph& g, const WovenQuery& q, std::int64_t budget) {
  if (budget <= 0) throw Error("budget must be positive");
  validate_query(g, q);
  if (g.order() > 64) throw Error("exact woven search supports at most 64 vertices");
  const bool parity = q.parity();
  VertexMask root_mask = 0;
  for (Vertex v : q.r) root_mask |= bit(v);

  SearchResult<WovenWitness> out;
  std::int64_t used = 0;
  bool exhausted = false;
  std::set<VertexMask> tried;
  std::optional<WovenWitness> witness;

  auto model_search = [&](const Graph& host, VertexMask allowed) -> std::optional<Model> {
    const std::int64_t left = budget - used;
    if (left <= 0) {
      exhausted = true;
      return std::nullopt;
    }
    auto r = find_rooted_clique_model(host, q.r, allowed, left);
    used += static_cast<std::int64_t>(r.nodes);
    if (r.status == SearchStatus::exhausted) exhausted = true;
    return r.certificate;
  };

  auto accept = [&](const Linkage& l) {
    VertexMask on_paths = 0;
    for (const Path& p : l.paths) {
      for (Vertex v : p) on_paths |= bit(v);
    }
    const VertexMask allowed = g.all_mask() & ~(on_paths & ~root_mask);
    if (!tried.insert(allowed).second) return false;
    if (!parity) {
      if (auto m = model_search(g, allowed)) {
        witness = WovenWitness{std::move(*m), std::nullopt, l};
        return true;
      }
      return exhausted;
    }
    // Colour class of every allowed vertex; roots are fixed by J and at most
    // one root makes the colouring irrelevant.
    const VertexMask free = q.r.size() <= 1 ? 0 : allowed & ~root_mask;
    std::vector<int> color(static_cast<std::size_t>(g.order()), 0);
    for (std::size_t k = 0; k < q.r.size(); ++k) color[static_cast<std::size_t>(q.r[k])] = in_j(q, k) ? 0 : 1;
    VertexMask sub = 0;
    while (true) {
      for (VertexMask f = free; f; f &= f - 1) {
        const Vertex v = lowest(f);
        color[static_cast<std::size_t>(v)] = (sub & bit(v)) ? 1 : 0;
      }
      std::vector<Edge> kept;
      for (const Edge& e : g.edges()) {
        if (color[static_cast<std::size_t>(e.u)] != color[static_cast<std::size_t>(e.v)]) kept.push_back(e);
      }
      const Graph gc(g.order(), kept);
      if (auto m = model_search(gc, allowed)) {
        witness = WovenWitness{std::nullopt, bipartite_from_model(gc, *m, q.r, color), l};
        return true;
      }
      if (exhausted) return true;
      if (sub == free) break;
      sub = (sub - free) & free;
    }
    return false;
  };

  auto links = for_each_linkage(g, spec_of(q), accept, budget, root_mask);
  out.nodes = links.nodes + static_cast<std::uint64_t>(used);
  if (links.status == SearchStatus::exhausted || exhausted) {
    out.status = SearchStatus::exhausted;
    return out;
  }
  if (!witness) {
    out.status = SearchStatus::proven_absent;
    return out;
  }
  if (q.r.empty()) {
    if (parity) {
      Expansion e = model_to_expansion(g, empty_clique_model());
      e.roots = std::vector<Vertex>{};
      e.bipartite_coloring = std::map<Vertex, int>{};
      witness->expansion = std::move(e);
    } else {
      witness->model = empty_clique_model();
    }
  }
  if (auto v = verify_woven_witness(g, q, *witness); !v) {
    throw Error("internal: woven witness failed verification: " + v.clause);
  }
  out.status = SearchStatus::found;
  out.certificate = std::move(witness);
  return out;
}

namespace {

template <class F>
bool for_each_root_set(int n, int a, F&& f) {
  std::vector<Vertex> r(static_cast<std::size_t>(a));
  for (int k = 0; k < a; ++k) r[static_cast<std::size_t>(k)] = k;
  while (true) {
    if (!f(r)) return false;
    int k = a - 1;
    while (k >= 0 && r[static_cast<std::size_t>(k)] == n - a + k) --k;
    if (k < 0) return true;
    ++r[static_cast<std::size_t>(k)];
    for (int q = k + 1; q < a; ++q) r[static_cast<std::size_t>(q)] = r[static_cast<std::size_t>(q - 1)] + 1;
  }
}

template <class F>
bool for_each_terminal_multiset(int n, int b, F&& f) {
  std::vector<std::pair<Vertex, Vertex>> all;
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = s; t < n; ++t) all.emplace_back(s, t);
  }
  if (b == 0) return f(std::vector<std::pair<Vertex, Vertex>>{});
  std::vector<std::size_t> idx(static_cast<std::size_t>(b), 0);
  while (true) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t i : idx) pairs.push_back(all[i]);
    if (!f(pairs)) return false;
    int k = b - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == all.size() - 1) --k;
    if (k < 0) return true;
    ++idx[static_cast<std::size_t>(k)];
    for (int q = k + 1; q < b; ++q) idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(k)];
  }
}

std::vector<int> indices_of(std::uint32_t mask, std::span<const int> from) {
  std::vector<int> out;
  for (std::size_t k = 0; k < from.size(); ++k) {
    if (mask >> k & 1U) out.push_back(from[k]);
  }
  return out;
}

bool woven_impl(const Graph& g, int a, int b, std::int64_t budget, bool parity) {
  if (a < 0 || b < 0) throw Error("a and b must be nonnegative");
  if (g.order() > 8) throw Error("exceeds exact bound");
  if (a > g.order()) return true;
  return for_each_root_set(g.order(), a, [&](const std::vector<Vertex>& r) {
    return for_each_terminal_multiset(g.order(), b, [&](const std::vector<std::pair<Vertex, Vertex>>& pairs) {
      WovenQuery q;
      q.r = r;
      std::vector<int> open;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        q.s_terms.push_back(pairs[k].first);
        q.t_terms.push_back(pairs[k].second);
        if (pairs[k].first != pairs[k].second) open.push_back(static_cast<int>(k));
      }
      std::vector<int> roots_idx(static_cast<std::size_t>(a));
      for (int k = 0; k < a; ++k) roots_idx[static_cast<std::size_t>(k)] = k;
      const std::uint32_t j_count = parity ? (1U << a) : 1U;
      const std::uint32_t i_count = parity ? (1U << open.size()) : 1U;
      for (std::uint32_t jm = 0; jm < j_count; ++jm) {
        for (std::uint32_t im = 0; im < i_count; ++im) {
          if (parity) {
            q.j = indices_of(jm, roots_idx);
            q.i = indices_of(im, open);
          }
          const auto res = answer_woven_query(g, q, budget);
          if (res.status == SearchStatus::exhausted) throw Error("budget exhausted");
          if (!res.found()) return false;
        }
      }
      return true;
    });
  });
}

}  // namespace

bool is_woven(const Graph& g, int a, int b, std::int64_t budget) { return woven_impl(g, a, b, budget, false); }
bool is_parity_woven(const Graph& g, int a, int b, std::int64_t budget) { return woven_impl(g, a, b, budget, true); }

// ------------------------------------------------------------------ oracles

WovenOracle brute_force_oracle(Graph h, std::int64_t budget) {
  return [h = std::move(h), budget](const WovenQuery& q) -> std::optional<WovenWitness> {
    auto r = answer_woven_query(h, q, budget);
    if (r.status == SearchStatus::exhausted) throw Error("budget exhausted");
    return r.certificate;
  };
}

WovenOracle clique_oracle(int n) {
  if (n < 0) throw Error("negative order");
  return [n](const WovenQuery& q) -> std::optional<WovenWitness> {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    const Graph kn(n, edges);
    validate_query(kn, q);
    std::vector<char> taken(static_cast<std::size_t>(n), 0);
    for (Vertex v : q.r) taken[static_cast<std::size_t>(v)] = 1;
    for (Vertex v : q.s_terms) taken[static_cast<std::size_t>(v)] = 1;
    for (Vertex v : q.t_terms) taken[static_cast<std::size_t>(v)] = 1;
    auto spare = [&]() -> std::optional<Vertex> {
      for (Vertex v = 0; v < n; ++v) {
        if (!taken[static_cast<std::size_t>(v)]) {
          taken[static_cast<std::size_t>(v)] = 1;
          return v;
        }
      }
      return std::nullopt;
    };
    WovenWitness w;
    const LinkageSpec spec = spec_of(q);
    for (std::size_t k = 0; k < spec.pairs.size(); ++k) {
      const auto [s, t] = spec.pairs[k];
      const bool odd = spec.parity && std::find(spec.parity->begin(), spec.parity->end(), static_cast<int>(k)) !=
                                          spec.parity->end();
      if (s == t) {
        w.linkage.paths.push_back({s});
      } else if (!spec.parity || odd) {
        w.linkage.paths.push_back({s, t});
      } else {
        const auto x = spare();
        if (!x) return std::nullopt;
        w.linkage.paths.push_back({s, *x, t});
      }
    }
    const std::size_t a = q.r.size();
    std::vector<std::vector<Vertex>> sets;
    for (Vertex v : q.r) sets.push_back({v});
    if (!q.parity()) {
      w.model = make_clique_model(std::move(sets));
      return w;
    }
    std::map<Vertex, int> color;
    for (std::size_t k = 0; k < a; ++k) color[q.r[k]] = in_j(q, k) ? 0 : 1;
    // All but the first root of each colour class get a partner of the other colour.
    bool seen[2] = {false, false};
    for (std::size_t k = 0; k < a; ++k) {
      const int c = color[q.r[k]];
      if (!seen[c]) {
        seen[c] = true;
        continue;
      }
      const auto x = spare();
      if (!x) return std::nullopt;
      sets[k].push_back(*x);
      color[*x] = 1 - c;
    }
    const Model m = make_clique_model(sets);
    Expansion e;
    e.pattern = m.pattern;
    e.pattern_name = m.pattern_name;
    for (const auto& set : sets) {
      Tree t{set, {}};
      if (set.size() == 2) t.edges.emplace_back(set[0], set[1]);
      e.trees.push_back(std::move(t));
    }
    for (const Edge& pe : e.pattern.edges()) {
      std::optional<Edge> chosen;
      for (Vertex x : sets[static_cast<std::size_t>(pe.u)]) {
        for (Vertex y : sets[static_cast<std::size_t>(pe.v)]) {
          if (!chosen && color[x] != color[y]) chosen = Edge(x, y);
        }
      }
      e.branch_edges.push_back(*chosen);
    }
    e.roots = q.r;
    e.bipartite_coloring = std::move(color);
    w.expansion = std::move(e);
    return w;
  };
}

// -------------------------------------------------------------- composition

namespace {

Path oriented(const Path& p, Vertex from) {
  Path out = p;
  if (!out.empty() && out.front() != from) std::reverse(out.begin(), out.end());
  return out;
}

ComposeResult compose_impl(const Graph& g, const Subgraph& h, const WovenOracle& oracle,
                           std::span<const std::pair<Vertex, Vertex>> pairs,
                           const std::optional<std::vector<int>>& parity, const Linkage& p,
                           std::span<const Vertex> r, const std::optional<std::vector<int>>& j) {
  const LinkageSpec spec{{pairs.begin(), pairs.end()}, parity};
  if (auto v = verify_linkage(g, spec, p); !v) throw Error("input is not a linkage: " + v.clause);
  if (h.to_parent.size() != static_cast<std::size_t>(h.graph.order())) throw Error("subgraph labels mismatch");
  std::map<Vertex, Vertex> to_h;
  for (std::size_t k = 0; k < h.to_parent.size(); ++k) {
    const Vertex v = h.to_parent[k];
    if (!g.contains(v) || !to_h.emplace(v, static_cast<Vertex>(k)).second) throw Error("subgraph labels invalid");
  }
  for (const Edge& e : h.graph.edges()) {
    if (!g.has_edge(h.to_parent[static_cast<std::size_t>(e.u)], h.to_parent[static_cast<std::size_t>(e.v)])) {
      throw Error("h is not a subgraph of g");
    }
  }
  ComposeResult out;
  WovenQuery& q = out.inner_query;
  for (Vertex v : r) {
    const auto it = to_h.find(v);
    if (it == to_h.end()) throw Error("root outside the subgraph");
    q.r.push_back(it->second);
  }
  if (j) q.j = *j;
  if (parity) q.i = std::vector<int>{};

  // Entry and exit positions on each path that meets h.
  std::vector<Path> paths;
  std::vector<std::pair<std::size_t, std::size_t>> window;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    paths.push_back(oriented(p.paths[k], pairs[k].first));
    const Path& path = paths.back();
    std::optional<std::size_t> first;
    std::size_t last = 0;
    for (std::size_t x = 0; x < path.size(); ++x) {
      if (to_h.count(path[x])) {
        if (!first) first = x;
        last = x;
      }
    }
    if (!first) continue;
    if (parity && (last - *first) % 2 == 1) q.i->push_back(static_cast<int>(out.rerouted.size()));
    out.rerouted.push_back(static_cast<int>(k));
    window.emplace_back(*first, last);
    q.s_terms.push_back(to_h[path[*first]]);
    q.t_terms.push_back(to_h[path[last]]);
  }

  const auto w = oracle(q);
  if (!w) throw Error("oracle found no witness");
  if (auto v = verify_woven_witness(h.graph, q, *w); !v) throw Error("oracle witness invalid: " + v.clause);

  auto up = [&](Vertex v) { return h.to_parent[static_cast<std::size_t>(v)]; };
  out.linkage.paths = paths;
  for (std::size_t x = 0; x < out.rerouted.size(); ++x) {
    const auto k = static_cast<std::size_t>(out.rerouted[x]);
    const auto [first, last] = window[x];
    Path next(paths[k].begin(), paths[k].begin() + static_cast<std::ptrdiff_t>(first));
    for (Vertex v : oriented(w->linkage.paths[x], q.s_terms[x])) next.push_back(up(v));
    next.insert(next.end(), paths[k].begin() + static_cast<std::ptrdiff_t>(last) + 1, paths[k].end());
    out.linkage.paths[k] = std::move(next);
  }
  std::vector<Vertex> model_vertices;
  if (w->model) {
    Model m = *w->model;
    for (auto& set : m.branch_sets) {
      for (Vertex& v : set) {
        v = up(v);
        model_vertices.push_back(v);
      }
    }
    if (!verify_model(g, m)) throw Error("internal: composed model failed verification");
    out.model = std::move(m);
  }
  if (w->expansion) {
    Expansion e = *w->expansion;
    for (Tree& t : e.trees) {
      for (Vertex& v : t.vertices) v = up(v);
      for (Edge& te : t.edges) te = Edge(up(te.u), up(te.v));
    }
    for (Edge& be : e.branch_edges) be = Edge(up(be.u), up(be.v));
    if (e.roots) {
      for (Vertex& v : *e.roots) v = up(v);
    }
    if (e.bipartite_coloring) {
      std::map<Vertex, int> c;
      for (const auto& [v, col] : *e.bipartite_coloring) c[up(v)] = col;
      e.bipartite_coloring = std::move(c);
    }
    if (!verify_expansion(g, e)) throw Error("internal: composed expansion failed verification");
    model_vertices = expansion_vertices(e);
    out.expansion = std::move(e);
  }

  if (auto v = verify_linkage(g, spec, out.linkage); !v) {
    throw Error("internal: composed linkage failed verification: " + v.clause);
  }
  std::set<Vertex> old_vertices;
  for (const Path& path : p.paths) old_vertices.insert(path.begin(), path.end());
  const std::set<Vertex> roots(r.begin(), r.end());
  std::set<Vertex> new_vertices;
  for (const Path& path : out.linkage.paths) new_vertices.insert(path.begin(), path.end());
  for (Vertex v : new_vertices) {
    if (!to_h.count(v) && !old_vertices.count(v)) throw Error("internal: composed path leaves H and the old paths");
  }
  for (Vertex v : model_vertices) {
    if (new_vertices.count(v) && !(roots.count(v) && old_vertices.count(v))) {
      throw Error("internal: composed model meets the linkage outside the roots");
    }
  }
  return out;
}

}  // namespace

ComposeResult compose_through_woven(const Graph& g, const Subgraph& h, const WovenOracle& oracle,
                                    std::span<const std::pair<Vertex, Vertex>> pairs, const Linkage& p,
                                    std::span<const Vertex> r) {
  return compose_impl(g, h, oracle, pairs, std::nullopt, p, r, std::nullopt);
}

ComposeResult compose_through_parity_woven(const Graph& g, const Subgraph& h, const WovenOracle& oracle,
                                           std::span<const std::pair<Vertex, Vertex>> pairs,
                                           std::span<const int> parity, const Linkage& p,
                                           std::span<const Vertex> r, std::span<const int> j) {
  return compose_impl(g, h, oracle, pairs, std::vector<int>(parity.begin(), parity.end()), p, r,
                      std::vector<int>(j.begin(), j.end()));
}

}  // namespace minorkit
