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

#include "minorkit/minors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "minorkit/generators.hpp"

namespace minorkit {

Model make_clique_model(std::vector<std::vector<Vertex>> sets) {
  Model m;
  const int t = static_cast<int>(sets.size());
  m.pattern = complete_graph(t);
  m.pattern_name = "K" + std::to_string(t);
  for (auto& s : sets) std::sort(s.begin(), s.end());
  m.branch_sets = std::move(sets);
  m.assignment.resize(static_cast<std::size_t>(t));
  std::iota(m.assignment.begin(), m.assignment.end(), 0);
  return m;
}

namespace {

std::uint64_t low_bits(int k) { return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1; }

void check_vertices(const Graph& g, std::span<const Vertex> vs) {
  for (Vertex v : vs) {
    if (!g.contains(v)) throw Error("vertex " + std::to_string(v) + " out of range");
  }
}

bool sets_adjacent(const Graph& g, std::span<const Vertex> a, const std::vector<char>& in_b) {
  for (Vertex x : a) {
    for (Vertex y : g.neighbors(x)) {
      if (in_b[static_cast<std::size_t>(y)]) return true;
    }
  }
  return false;
}

// Shared by the model verifiers: disjoint, non-empty, connected sets.
Verdict check_branch_sets(const Graph& g, const std::vector<std::vector<Vertex>>& sets) {
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  for (const auto& s : sets) {
    check_vertices(g, s);
    if (s.empty()) return Verdict::fail("empty branch set");
    for (Vertex v : s) {
      if (used[static_cast<std::size_t>(v)]) return Verdict::fail("branch sets not disjoint");
      used[static_cast<std::size_t>(v)] = 1;
    }
  }
  for (const auto& s : sets) {
    if (!is_connected_subset(g, s)) return Verdict::fail("branch set not connected");
  }
  return Verdict::pass();
}

std::vector<char> membership(const Graph& g, std::span<const Vertex> s) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : s) in[static_cast<std::size_t>(v)] = 1;
  return in;
}

}  // namespace

Verdict verify_model(const Graph& g, const Model& m) {
  for (const auto& s : m.branch_sets) check_vertices(g, s);
  const auto h = static_cast<std::size_t>(m.pattern.order());
  if (m.branch_sets.size() != h || m.assignment.size() != h) return Verdict::fail("pattern size mismatch");
  std::vector<char> hit(h, 0);
  for (int a : m.assignment) {
    if (a < 0 || static_cast<std::size_t>(a) >= h || hit[static_cast<std::size_t>(a)]) {
      return Verdict::fail("assignment not a bijection");
    }
    hit[static_cast<std::size_t>(a)] = 1;
  }
  if (auto v = check_branch_sets(g, m.branch_sets); !v) return v;
  for (const Edge& e : m.pattern.edges()) {
    const auto& a = m.branch_sets[static_cast<std::size_t>(m.assignment[static_cast<std::size_t>(e.u)])];
    const auto& b = m.branch_sets[static_cast<std::size_t>(m.assignment[static_cast<std::size_t>(e.v)])];
    if (!sets_adjacent(g, a, membership(g, b))) return Verdict::fail("branch sets not adjacent");
  }
  return Verdict::pass();
}

std::vector<Vertex> expansion_vertices(const Expansion& e) {
  std::vector<Vertex> out;
  for (const auto& t : e.trees) out.insert(out.end(), t.vertices.begin(), t.vertices.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

Verdict check_coloring(const Expansion& e, const std::map<Vertex, int>& c, bool odd) {
  auto color = [&](Vertex v) -> std::optional<int> {
    auto it = c.find(v);
    if (it == c.end()) return std::nullopt;
    return it->second;
  };
  const std::string incomplete = odd ? "odd coloring incomplete" : "bipartite coloring incomplete";
  for (const auto& t : e.trees) {
    for (Vertex v : t.vertices) {
      if (!color(v)) return Verdict::fail(incomplete);
    }
  }
  for (const auto& t : e.trees) {
    for (const Edge& te : t.edges) {
      if (*color(te.u) == *color(te.v)) {
        return Verdict::fail(odd ? "odd coloring: tree edge monochromatic" : "bipartite coloring not proper");
      }
    }
  }
  for (const Edge& be : e.branch_edges) {
    const auto cu = color(be.u);
    const auto cv = color(be.v);
    if (!cu || !cv) return Verdict::fail(incomplete);
    if (odd && *cu != *cv) return Verdict::fail("odd coloring: branch edge bichromatic");
    if (!odd && *cu == *cv) return Verdict::fail("bipartite coloring not proper");
  }
  return Verdict::pass();
}

}  // namespace

Verdict verify_expansion(const Graph& g, const Expansion& e) {
  std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
  bool overlap = false;
  for (std::size_t i = 0; i < e.trees.size(); ++i) {
    const Tree& t = e.trees[i];
    if (t.vertices.empty()) throw Error("empty tree in expansion");
    check_vertices(g, t.vertices);
    std::set<Vertex> own(t.vertices.begin(), t.vertices.end());
    if (own.size() != t.vertices.size()) throw Error("repeated vertex in tree");
    for (const Edge& te : t.edges) {
      if (!own.count(te.u) || !own.count(te.v)) throw Error("tree edge leaves its vertex list");
    }
    for (Vertex v : t.vertices) {
      if (owner[static_cast<std::size_t>(v)] >= 0) overlap = true;
      owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
  }
  if (e.trees.size() != static_cast<std::size_t>(e.pattern.order()) || e.branch_edges.size() != e.pattern.size()) {
    return Verdict::fail("pattern size mismatch");
  }
  for (const Tree& t : e.trees) {
    std::set<Edge> distinct(t.edges.begin(), t.edges.end());
    if (distinct.size() + 1 != t.vertices.size() || !is_connected_subset(Graph(g.order(), t.edges), t.vertices)) {
      return Verdict::fail("node not a tree");
    }
    for (const Edge& te : t.edges) {
      if (!g.has_edge(te.u, te.v)) return Verdict::fail("tree edge not in graph");
    }
  }
  if (overlap) return Verdict::fail("trees not disjoint");
  for (std::size_t i = 0; i < e.branch_edges.size(); ++i) {
    const Edge& be = e.branch_edges[i];
    if (!g.contains(be.u) || !g.contains(be.v) || !g.has_edge(be.u, be.v)) {
      return Verdict::fail("branch edge not in graph");
    }
    const Edge& pe = e.pattern.edges()[i];
    const int ou = owner[static_cast<std::size_t>(be.u)];
    const int ov = owner[static_cast<std::size_t>(be.v)];
    if (!((ou == pe.u && ov == pe.v) || (ou == pe.v && ov == pe.u))) return Verdict::fail("branch edge misplaced");
  }
  if (e.roots) {
    check_vertices(g, *e.roots);
    std::set<Vertex> roots(e.roots->begin(), e.roots->end());
    if (roots.size() != e.roots->size() || roots.size() != e.trees.size()) return Verdict::fail("root count");
    for (const Tree& t : e.trees) {
      int hits = 0;
      for (Vertex v : t.vertices) hits += static_cast<int>(roots.count(v));
      if (hits != 1) return Verdict::fail("root multiplicity");
    }
  }
  if (e.bipartite_coloring) {
    if (auto v = check_coloring(e, *e.bipartite_coloring, false); !v) return v;
  }
  if (e.odd_coloring) {
    if (auto v = check_coloring(e, *e.odd_coloring, true); !v) return v;
  }
  return Verdict::pass();
}

Expansion model_to_expansion(const Graph& g, const Model& m) {
  if (auto v = verify_model(g, m); !v) throw Error("model does not verify: " + v.clause);
  Expansion e;
  e.pattern = m.pattern;
  e.pattern_name = m.pattern_name;
  for (Vertex h = 0; h < m.pattern.order(); ++h) {
    const auto& set = m.branch_sets[static_cast<std::size_t>(m.assignment[static_cast<std::size_t>(h)])];
    const auto in = membership(g, set);
    Tree t;
    const Vertex start = *std::min_element(set.begin(), set.end());
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::queue<Vertex> q;
    q.push(start);
    seen[static_cast<std::size_t>(start)] = 1;
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      t.vertices.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (in[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          t.edges.emplace_back(v, w);
          q.push(w);
        }
      }
    }
    std::sort(t.vertices.begin(), t.vertices.end());
    e.trees.push_back(std::move(t));
  }
  for (const Edge& pe : m.pattern.edges()) {
    const auto& a = e.trees[static_cast<std::size_t>(pe.u)].vertices;
    const auto in_b = membership(g, e.trees[static_cast<std::size_t>(pe.v)].vertices);
    std::optional<Edge> found;
    for (Vertex x : a) {
      for (Vertex y : g.neighbors(x)) {
        if (in_b[static_cast<std::size_t>(y)]) {
          found = Edge(x, y);
          break;
        }
      }
      if (found) break;
    }
    e.branch_edges.push_back(*found);
  }
  return e;
}

Verdict verify_kst_model(const Graph& g, const KstModel& m) {
  std::vector<std::vector<Vertex>> all = m.a_sets;
  all.insert(all.end(), m.b_sets.begin(), m.b_sets.end());
  if (auto v = check_branch_sets(g, all); !v) return v;
  for (const auto& a : m.a_sets) {
    for (const auto& b : m.b_sets) {
      if (!sets_adjacent(g, a, membership(g, b))) return Verdict::fail("branch sets not adjacent");
    }
  }
  return Verdict::pass();
}

bool check_b_tangent(const Graph& g, const KstModel& m, std::span<const Vertex> h) {
  check_vertices(g, h);
  const auto in = membership(g, h);
  for (const auto& a : m.a_sets) {
    for (Vertex v : a) {
      if (in[static_cast<std::size_t>(v)]) return false;
    }
  }
  for (const auto& b : m.b_sets) {
    int hits = 0;
    for (Vertex v : b) hits += in[static_cast<std::size_t>(v)];
    if (hits != 1) return false;
  }
  return true;
}

// ------------------------------------------------------------------ search

namespace {

/// Depth-first assignment of vertices to k branch sets. Slots are split into
/// groups of interchangeable sets; a group's sets are opened in index order so
/// each partition is generated once.
class BranchSearch {
 public:
  struct Config {
    int slots = 0;
    std::vector<int> group;           // group id per slot
    std::vector<std::uint64_t> need;  // need[i] bit j: X_i must touch X_j
    std::vector<VertexMask> seed;     // pre-assigned vertices per slot
    VertexMask allowed = 0;
  };

  BranchSearch(const Graph& g, Config cfg, std::int64_t budget) : cfg_(std::move(cfg)), budget_(budget) {
    if (g.order() > 64) throw Error("exact minor search supports at most 64 vertices");
    if (budget <= 0) throw Error("budget must be positive");
    for (Vertex v = 0; v < g.order(); ++v) nbr_.push_back(g.neighbor_mask(v));
    sets_ = cfg_.seed;
    VertexMask seeded = 0;
    for (VertexMask s : sets_) seeded |= s;
    for (Vertex v = 0; v < g.order(); ++v) {
      if ((cfg_.allowed >> v & 1U) && !(seeded >> v & 1U)) order_.push_back(v);
    }
  }

  SearchStatus run() {
    VertexMask rest = 0;
    for (Vertex v : order_) rest |= bit(v);
    const bool ok = dfs(0, rest);
    if (aborted_) return SearchStatus::exhausted;
    return ok ? SearchStatus::found : SearchStatus::proven_absent;
  }

  std::uint64_t nodes() const { return static_cast<std::uint64_t>(nodes_); }
  const std::vector<VertexMask>& sets() const { return sets_; }

 private:
  VertexMask neighborhood(VertexMask m) const {
    VertexMask out = 0;
    while (m) {
      out |= nbr_[static_cast<std::size_t>(lowest(m))];
      m &= m - 1;
    }
    return out;
  }

  // Component of `within` containing the lowest vertex of `from`.
  VertexMask component(VertexMask from, VertexMask within) const {
    VertexMask reach = from & (~from + 1);
    while (true) {
      const VertexMask next = reach | (neighborhood(reach) & within);
      if (next == reach) return reach;
      reach = next;
    }
  }

  bool complete() const {
    for (int i = 0; i < cfg_.slots; ++i) {
      const VertexMask x = sets_[static_cast<std::size_t>(i)];
      if (x == 0 || component(x, x) != x) return false;
    }
    for (int i = 0; i < cfg_.slots; ++i) {
      const VertexMask nx = neighborhood(sets_[static_cast<std::size_t>(i)]);
      for (int j = i + 1; j < cfg_.slots; ++j) {
        if ((cfg_.need[static_cast<std::size_t>(i)] >> j & 1U) && !(nx & sets_[static_cast<std::size_t>(j)])) {
          return false;
        }
      }
    }
    return true;
  }

  bool feasible(VertexMask rest) const {
    int closed = 0;
    for (VertexMask x : sets_) closed += x == 0;
    if (closed > popcount(rest)) return false;
    std::vector<VertexMask> reach(static_cast<std::size_t>(cfg_.slots), 0);
    for (int i = 0; i < cfg_.slots; ++i) {
      const VertexMask x = sets_[static_cast<std::size_t>(i)];
      if (x == 0) continue;
      const VertexMask c = component(x, x | rest);
      if ((c & x) != x) return false;
      reach[static_cast<std::size_t>(i)] = c;
    }
    for (int i = 0; i < cfg_.slots; ++i) {
      const VertexMask ri = reach[static_cast<std::size_t>(i)];
      if (ri == 0) continue;
      const VertexMask around = ri | neighborhood(ri);
      for (int j = 0; j < cfg_.slots; ++j) {
        if (j == i || !(cfg_.need[static_cast<std::size_t>(i)] >> j & 1U)) continue;
        const VertexMask rj = reach[static_cast<std::size_t>(j)];
        if (rj != 0 && j > i && !(around & rj)) return false;
        if (rj == 0 && !(around & rest)) return false;
      }
    }
    return true;
  }

  bool dfs(std::size_t idx, VertexMask rest) {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return false;
    }
    if (complete()) return true;
    if (idx == order_.size() || !feasible(rest)) return false;
    const Vertex v = order_[idx];
    const VertexMask next_rest = rest & ~bit(v);
    // Open the first closed slot of each group.
    std::vector<int> opened_groups;
    for (int i = 0; i < cfg_.slots; ++i) {
      auto& x = sets_[static_cast<std::size_t>(i)];
      const int grp = cfg_.group[static_cast<std::size_t>(i)];
      if (x != 0 || std::find(opened_groups.begin(), opened_groups.end(), grp) != opened_groups.end()) continue;
      opened_groups.push_back(grp);
      x = bit(v);
      if (dfs(idx + 1, next_rest)) return true;
      x = 0;
      if (aborted_) return false;
    }
    for (int i = 0; i < cfg_.slots; ++i) {
      auto& x = sets_[static_cast<std::size_t>(i)];
      if (x == 0) continue;
      x |= bit(v);
      if (dfs(idx + 1, next_rest)) return true;
      x &= ~bit(v);
      if (aborted_) return false;
    }
    return dfs(idx + 1, next_rest);
  }

  Config cfg_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<VertexMask> nbr_;
  std::vector<VertexMask> sets_;
  std::vector<Vertex> order_;
};

}  // namespace

SearchResult<Model> find_clique_minor(const Graph& g, int t, std::int64_t budget) {
  if (t < 1) throw Error("clique order must be at least 1");
  if (budget <= 0) throw Error("budget must be positive");
  BranchSearch::Config cfg;
  cfg.slots = t;
  cfg.group.assign(static_cast<std::size_t>(t), 0);
  cfg.need.assign(static_cast<std::size_t>(t), low_bits(t));
  cfg.seed.assign(static_cast<std::size_t>(t), 0);
  cfg.allowed = g.order() == 0 ? 0 : g.all_mask();
  SearchResult<Model> out;
  if (t > g.order()) {
    out.status = SearchStatus::proven_absent;
    out.nodes = 1;
    return out;
  }
  BranchSearch search(g, std::move(cfg), budget);
  out.status = search.run();
  out.nodes = search.nodes();
  if (out.found()) {
    std::vector<std::vector<Vertex>> sets;
    for (VertexMask x : search.sets()) sets.push_back(mask_to_vertices(x));
    Model m = make_clique_model(std::move(sets));
    if (auto v = verify_model(g, m); !v) throw Error("internal: clique model failed verification: " + v.clause);
    out.certificate = std::move(m);
  }
  return out;
}

SearchResult<KstModel> find_biclique_minor(const Graph& g, int s, int t, std::int64_t budget) {
  if (s < 0 || t < 0) throw Error("biclique sides must be non-negative");
  if (budget <= 0) throw Error("budget must be positive");
  SearchResult<KstModel> out;
  if (s + t > g.order()) {
    out.status = SearchStatus::proven_absent;
    out.nodes = 1;
    return out;
  }
  BranchSearch::Config cfg;
  cfg.slots = s + t;
  const std::uint64_t a_bits = low_bits(s);
  const std::uint64_t b_bits = low_bits(s + t) & ~a_bits;
  for (int i = 0; i < s + t; ++i) {
    cfg.group.push_back(i < s ? 0 : 1);
    cfg.need.push_back(i < s ? b_bits : a_bits);
  }
  cfg.seed.assign(static_cast<std::size_t>(s + t), 0);
  cfg.allowed = g.order() == 0 ? 0 : g.all_mask();
  BranchSearch search(g, std::move(cfg), budget);
  out.status = search.run();
  out.nodes = search.nodes();
  if (out.found()) {
    KstModel m;
    for (int i = 0; i < s + t; ++i) {
      (i < s ? m.a_sets : m.b_sets).push_back(mask_to_vertices(search.sets()[static_cast<std::size_t>(i)]));
    }
    if (auto v = verify_kst_model(g, m); !v) throw Error("internal: biclique model failed verification: " + v.clause);
    out.certificate = std::move(m);
  }
  return out;
}

SearchResult<Model> find_rooted_clique_model(const Graph& g, std::span<const Vertex> roots, VertexMask allowed,
                                             std::int64_t budget) {
  if (budget <= 0) throw Error("budget must be positive");
  check_vertices(g, roots);
  const int a = static_cast<int>(roots.size());
  SearchResult<Model> out;
  VertexMask root_mask = 0;
  for (Vertex r : roots) {
    if (root_mask & bit(r)) throw Error("repeated root");
    root_mask |= bit(r);
  }
  if ((root_mask & allowed) != root_mask) {
    out.status = SearchStatus::proven_absent;
    out.nodes = 1;
    return out;
  }
  BranchSearch::Config cfg;
  cfg.slots = a;
  for (int i = 0; i < a; ++i) {
    cfg.group.push_back(i);
    cfg.need.push_back(low_bits(a));
    cfg.seed.push_back(bit(roots[static_cast<std::size_t>(i)]));
  }
  cfg.allowed = allowed & (g.order() == 0 ? 0 : g.all_mask());
  BranchSearch search(g, std::move(cfg), budget);
  out.status = search.run();
  out.nodes = search.nodes();
  if (out.found()) {
    std::vector<std::vector<Vertex>> sets;
    for (VertexMask x : search.sets()) sets.push_back(mask_to_vertices(x));
    Model m = make_clique_model(std::move(sets));
    if (auto v = verify_model(g, m); !v) throw Error("internal: rooted model failed verification: " + v.clause);
    out.certificate = std::move(m);
  }
  return out;
}

std::optional<Model> density_extract_minor(const Graph& g, int t, int target_order, std::int64_t budget) {
  if (t < 2) throw Error("density extraction needs t >= 2");
  Graph current = g;
  std::vector<Vertex> to_current(static_cast<std::size_t>(g.order()));
  std::iota(to_current.begin(), to_current.end(), 0);
  while (current.order() > std::max(target_order, t) && current.size() > 0) {
    std::optional<Edge> pick;
    std::size_t best = 0;
    for (const Edge& e : current.edges()) {
      std::size_t common = 0;
      for (Vertex w : current.neighbors(e.u)) common += current.has_edge(w, e.v) ? 1U : 0U;
      if (!pick || common < best) {
        pick = e;
        best = common;
      }
    }
    const Edge chosen[] = {*pick};
    Contraction c = contract_edges(current, chosen);
    for (auto& v : to_current) v = c.mapping[static_cast<std::size_t>(v)];
    current = std::move(c.graph);
  }
  if (current.order() > 64) return std::nullopt;
  auto found = find_clique_minor(current, t, budget);
  if (!found.found()) return std::nullopt;
  std::vector<std::vector<Vertex>> lifted(found.certificate->branch_sets.size());
  std::vector<int> set_of(static_cast<std::size_t>(current.order()), -1);
  for (std::size_t i = 0; i < found.certificate->branch_sets.size(); ++i) {
    for (Vertex v : found.certificate->branch_sets[i]) set_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    const int s = set_of[static_cast<std::size_t>(to_current[static_cast<std::size_t>(v)])];
    if (s >= 0) lifted[static_cast<std::size_t>(s)].push_back(v);
  }
  Model m = make_clique_model(std::move(lifted));
  if (auto v = verify_model(g, m); !v) throw Error("internal: lifted model failed verification: " + v.clause);
  return m;
}

}  // namespace minorkit
