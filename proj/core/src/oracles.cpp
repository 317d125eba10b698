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

#include "minorkit/oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <tuple>

#include "minorkit/error.hpp"

namespace minorkit::oracle {

namespace {

// Whether the vertices with in_set[v] induce a connected graph, using only
// edges accepted by `usable`.
template <class Usable>
bool connected_within(const Graph& g, const std::vector<char>& in_set, Usable&& usable) {
  const int n = g.order();
  int start = -1;
  int size = 0;
  for (int v = 0; v < n; ++v) {
    if (in_set[static_cast<std::size_t>(v)]) {
      ++size;
      if (start < 0) start = v;
    }
  }
  if (start < 0) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{start};
  seen[static_cast<std::size_t>(start)] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w) {
      if (in_set[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)] && g.has_edge(v, w) &&
          usable(v, w)) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == size;
}

// label[v] in {-1, 0..h-1}: checks that the labelled sets realise `pattern`
// (set i for pattern vertex i) through edges accepted by `usable`.
template <class Usable>
bool labels_realise(const Graph& g, const Graph& pattern, const std::vector<int>& label, Usable&& usable) {
  const int n = g.order();
  const int h = pattern.order();
  for (int i = 0; i < h; ++i) {
    std::vector<char> in_set(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) in_set[static_cast<std::size_t>(v)] = label[static_cast<std::size_t>(v)] == i;
    if (!connected_within(g, in_set, usable)) return false;
  }
  for (const Edge& pe : pattern.edges()) {
    bool touching = false;
    for (int v = 0; v < n && !touching; ++v) {
      if (label[static_cast<std::size_t>(v)] != pe.u) continue;
      for (int w = 0; w < n && !touching; ++w) {
        touching = label[static_cast<std::size_t>(w)] == pe.v && g.has_edge(v, w) && usable(v, w);
      }
    }
    if (!touching) return false;
  }
  return true;
}

// Odometer over label vectors: entries with fixed[v] >= 0 stay put, the rest
// range over -1..h-1 when free[v] and stay -1 otherwise.
template <class F>
bool any_labelling(int n, int h, const std::vector<int>& fixed, const std::vector<char>& free, F&& f) {
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    if (fixed[static_cast<std::size_t>(v)] >= 0) label[static_cast<std::size_t>(v)] = fixed[static_cast<std::size_t>(v)];
  }
  while (true) {
    if (f(label)) return true;
    int v = 0;
    for (; v < n; ++v) {
      if (fixed[static_cast<std::size_t>(v)] >= 0 || !free[static_cast<std::size_t>(v)]) continue;
      if (++label[static_cast<std::size_t>(v)] < h) break;
      label[static_cast<std::size_t>(v)] = -1;
    }
    if (v == n) return false;
  }
}

Graph complete(int t) {
  std::vector<Edge> edges;
  for (int u = 0; u < t; ++u) {
    for (int v = u + 1; v < t; ++v) edges.emplace_back(u, v);
  }
  return Graph(t, edges);
}

// All simple paths from s to t, as vertex sequences.
std::vector<Path> all_paths(const Graph& g, Vertex s, Vertex t) {
  std::vector<Path> out;
  if (s == t) return {{s}};
  Path current{s};
  std::vector<char> on(static_cast<std::size_t>(g.order()), 0);
  on[static_cast<std::size_t>(s)] = 1;
  std::function<void()> walk = [&] {
    const Vertex v = current.back();
    for (Vertex w = 0; w < g.order(); ++w) {
      if (!g.has_edge(v, w) || on[static_cast<std::size_t>(w)]) continue;
      current.push_back(w);
      if (w == t) {
        out.push_back(current);
      } else {
        on[static_cast<std::size_t>(w)] = 1;
        walk();
        on[static_cast<std::size_t>(w)] = 0;
      }
      current.pop_back();
    }
  };
  walk();
  return out;
}

bool is_linkage(const std::vector<Path>& paths) {
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t k = 1; k + 1 < paths[i].size(); ++k) {
      for (std::size_t j = 0; j < paths.size(); ++j) {
        if (j != i && std::find(paths[j].begin(), paths[j].end(), paths[i][k]) != paths[j].end()) return false;
      }
    }
  }
  return true;
}

// Calls f on every linkage for the pairs (ignoring parity), stopping when f
// returns true.
template <class F>
bool any_linkage(const Graph& g, const std::vector<std::pair<Vertex, Vertex>>& pairs, F&& f) {
  std::vector<std::vector<Path>> options;
  for (const auto& [s, t] : pairs) options.push_back(all_paths(g, s, t));
  std::vector<Path> chosen(pairs.size());
  std::function<bool(std::size_t)> pick = [&](std::size_t i) {
    if (i == pairs.size()) return is_linkage(chosen) && f(chosen);
    for (const Path& p : options[i]) {
      chosen[i] = p;
      if (pick(i + 1)) return true;
    }
    return false;
  };
  return pick(0);
}

bool parity_matches(const std::vector<Path>& paths, const std::vector<int>& odd) {
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const bool want = std::find(odd.begin(), odd.end(), static_cast<int>(i)) != odd.end();
    if (((paths[i].size() - 1) % 2 == 1) != want) return false;
  }
  return true;
}

}  // namespace

bool has_minor(const Graph& g, const Graph& pattern) {
  const int n = g.order();
  const int h = pattern.order();
  if (h == 0) return true;
  if (h > n) return false;
  const std::vector<int> fixed(static_cast<std::size_t>(n), -1);
  const std::vector<char> free(static_cast<std::size_t>(n), 1);
  return any_labelling(n, h, fixed, free, [&](const std::vector<int>& label) {
    return labels_realise(g, pattern, label, [](Vertex, Vertex) { return true; });
  });
}

// A K_t model inside a component can absorb every other vertex of that
// component, so it suffices to try partitions of a component into exactly t
// connected, pairwise adjacent blocks.
bool has_clique_minor(const Graph& g, int t) {
  if (t <= 0) return true;
  const int n = g.order();
  if (n > 64) throw Error("exceeds exact bound");
  std::vector<VertexMask> adj(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)] |= VertexMask{1} << e.v;
    adj[static_cast<std::size_t>(e.v)] |= VertexMask{1} << e.u;
  }
  auto connected = [&](VertexMask set) {
    VertexMask reached = set & (~set + 1);
    VertexMask frontier = reached;
    while (frontier) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      frontier = next & set & ~reached;
      reached |= frontier;
    }
    return reached == set;
  };
  auto touching = [&](VertexMask x, VertexMask y) {
    for (VertexMask f = x; f; f &= f - 1) {
      if (adj[static_cast<std::size_t>(std::countr_zero(f))] & y) return true;
    }
    return false;
  };
  VertexMask unseen = n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
  while (unseen) {
    VertexMask component = unseen & (~unseen + 1);
    for (VertexMask grow = component; grow;) {
      VertexMask next = 0;
      for (VertexMask f = grow; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      grow = next & ~component;
      component |= grow;
    }
    unseen &= ~component;
    std::vector<Vertex> members;
    for (VertexMask f = component; f; f &= f - 1) members.push_back(std::countr_zero(f));
    const int m = static_cast<int>(members.size());
    if (m < t) continue;
    // Restricted growth strings with exactly t blocks.
    std::vector<VertexMask> block(static_cast<std::size_t>(t), 0);
    std::function<bool(int, int)> place = [&](int i, int used) {
      if (m - i < t - used) return false;
      if (i == m) {
        for (int a = 0; a < t; ++a) {
          if (!connected(block[static_cast<std::size_t>(a)])) return false;
          for (int b = a + 1; b < t; ++b) {
            if (!touching(block[static_cast<std::size_t>(a)], block[static_cast<std::size_t>(b)])) return false;
          }
        }
        return true;
      }
      const VertexMask bit = VertexMask{1} << members[static_cast<std::size_t>(i)];
      for (int a = 0; a < std::min(used + 1, t); ++a) {
        block[static_cast<std::size_t>(a)] |= bit;
        const bool ok = place(i + 1, std::max(used, a + 1));
        block[static_cast<std::size_t>(a)] &= ~bit;
        if (ok) return true;
      }
      return false;
    };
    if (place(0, 0)) return true;
  }
  return false;
}

bool is_list_colorable(const Graph& g, const ListAssignment& lists) {
  const int n = g.order();
  if (lists.order() != n) throw Error("list assignment does not match the graph");
  std::vector<Color> color(static_cast<std::size_t>(n));
  std::function<bool(int)> go = [&](int v) {
    if (v == n) return true;
    for (Color c : lists.list(v)) {
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = !(g.has_edge(u, v) && color[static_cast<std::size_t>(u)] == c);
      if (!ok) continue;
      color[static_cast<std::size_t>(v)] = c;
      if (go(v + 1)) return true;
    }
    return false;
  };
  return go(0);
}

int independence_number(const Graph& g) {
  const int n = g.order();
  if (n > 24) throw Error("exceeds exact bound");
  int best = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    bool independent = true;
    for (int u = 0; u < n && independent; ++u) {
      if (!(m >> u & 1U)) continue;
      for (int v = u + 1; v < n && independent; ++v) independent = !((m >> v & 1U) && g.has_edge(u, v));
    }
    if (independent) best = std::max(best, static_cast<int>(std::popcount(m)));
  }
  return best;
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n > 20) throw Error("exceeds exact bound");
  int best = std::max(0, n - 1);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    const int removed = static_cast<int>(std::popcount(m));
    if (removed >= best || n - removed < 2) continue;
    std::vector<char> rest(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) rest[static_cast<std::size_t>(v)] = !(m >> v & 1U);
    if (!connected_within(g, rest, [](Vertex, Vertex) { return true; })) best = removed;
  }
  return best;
}

int degeneracy(const Graph& g) {
  const int n = g.order();
  if (n > 20) throw Error("exceeds exact bound");
  int best = 0;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    int low = n;
    for (int v = 0; v < n; ++v) {
      if (!(m >> v & 1U)) continue;
      int d = 0;
      for (int w = 0; w < n; ++w) d += (m >> w & 1U) && g.has_edge(v, w) ? 1 : 0;
      low = std::min(low, d);
    }
    best = std::max(best, low);
  }
  return best;
}

bool has_linkage(const Graph& g, const LinkageSpec& spec) {
  const std::vector<int> odd = spec.parity.value_or(std::vector<int>{});
  return any_linkage(g, spec.pairs, [&](const std::vector<Path>& paths) {
    return !spec.parity || parity_matches(paths, odd);
  });
}

std::optional<int> min_total_ab_paths(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b,
                                      int count) {
  const std::set<Vertex> as(a.begin(), a.end());
  const std::set<Vertex> bs(b.begin(), b.end());
  std::vector<Path> candidates;
  for (Vertex s : as) {
    for (Vertex t : bs) {
      for (Path& p : all_paths(g, s, t)) {
        bool clean = true;
        for (std::size_t k = 1; k < p.size() && clean; ++k) clean = !as.count(p[k]);
        for (std::size_t k = 0; k + 1 < p.size() && clean; ++k) clean = !bs.count(p[k]);
        if (clean) candidates.push_back(std::move(p));
      }
    }
  }
  std::optional<int> best;
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  std::function<void(std::size_t, int, int)> choose = [&](std::size_t from, int left, int total) {
    if (left == 0) {
      if (!best || total < *best) best = total;
      return;
    }
    for (std::size_t i = from; i < candidates.size(); ++i) {
      const Path& p = candidates[i];
      if (std::any_of(p.begin(), p.end(), [&](Vertex v) { return used[static_cast<std::size_t>(v)] != 0; })) continue;
      for (Vertex v : p) used[static_cast<std::size_t>(v)] = 1;
      choose(i + 1, left - 1, total + static_cast<int>(p.size()) - 1);
      for (Vertex v : p) used[static_cast<std::size_t>(v)] = 0;
    }
  };
  choose(0, count, 0);
  return best;
}

namespace {

// Whether a K_a model rooted at r (bipartite with root classes from j when
// `classes` is set) fits inside `allowed`.
bool rooted_model_fits(const Graph& g, const std::vector<Vertex>& r, const std::vector<char>& allowed,
                       const std::optional<std::vector<int>>& classes) {
  const int n = g.order();
  const int a = static_cast<int>(r.size());
  const Graph pattern = complete(a);
  std::vector<int> fixed(static_cast<std::size_t>(n), -1);
  for (int k = 0; k < a; ++k) fixed[static_cast<std::size_t>(r[static_cast<std::size_t>(k)])] = k;
  return any_labelling(n, a, fixed, allowed, [&](const std::vector<int>& label) {
    if (!classes) return labels_realise(g, pattern, label, [](Vertex, Vertex) { return true; });
    // Try every colouring of the labelled non-root vertices.
    std::vector<Vertex> open;
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < a; ++k) {
      const bool in_a = std::find(classes->begin(), classes->end(), k) != classes->end();
      color[static_cast<std::size_t>(r[static_cast<std::size_t>(k)])] = in_a ? 0 : 1;
    }
    for (int v = 0; v < n; ++v) {
      if (label[static_cast<std::size_t>(v)] >= 0 && fixed[static_cast<std::size_t>(v)] < 0) open.push_back(v);
    }
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << open.size()); ++m) {
      for (std::size_t q = 0; q < open.size(); ++q) color[static_cast<std::size_t>(open[q])] = (m >> q) & 1U ? 1 : 0;
      if (labels_realise(g, pattern, label, [&](Vertex u, Vertex v) {
            return color[static_cast<std::size_t>(u)] != color[static_cast<std::size_t>(v)];
          })) {
        return true;
      }
    }
    return false;
  });
}

bool woven_oracle(const Graph& g, int a, int b, bool parity) {
  const int n = g.order();
  if (a < 0 || b < 0) throw Error("a and b must be nonnegative");
  if (n > 8) throw Error("exceeds exact bound");
  if (a > n) return true;
  std::map<std::tuple<std::vector<Vertex>, std::vector<char>, std::vector<int>, bool>, bool> memo;
  auto fits = [&](const std::vector<Vertex>& r, const std::vector<char>& allowed,
                  const std::optional<std::vector<int>>& classes) {
    const auto key = std::make_tuple(r, allowed, classes.value_or(std::vector<int>{}), classes.has_value());
    const auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const bool result = rooted_model_fits(g, r, allowed, classes);
    memo.emplace(key, result);
    return result;
  };
  // Root sets in increasing bitmask order.
  for (std::uint64_t rm = 0; rm < (std::uint64_t{1} << n); ++rm) {
    if (std::popcount(rm) != a) continue;
    std::vector<Vertex> r;
    for (int v = 0; v < n; ++v) {
      if (rm >> v & 1U) r.push_back(v);
    }
    // Every ordered terminal tuple (s_1..s_b, t_1..t_b).
    std::vector<Vertex> tuple(static_cast<std::size_t>(2 * b), 0);
    while (true) {
      std::vector<std::pair<Vertex, Vertex>> pairs;
      std::vector<int> open;
      for (int i = 0; i < b; ++i) {
        pairs.emplace_back(tuple[static_cast<std::size_t>(i)], tuple[static_cast<std::size_t>(b + i)]);
        if (pairs.back().first != pairs.back().second) open.push_back(i);
      }
      const std::uint64_t j_count = parity ? (std::uint64_t{1} << a) : 1;
      const std::uint64_t i_count = parity ? (std::uint64_t{1} << open.size()) : 1;
      for (std::uint64_t jm = 0; jm < j_count; ++jm) {
        std::optional<std::vector<int>> classes;
        if (parity) {
          classes = std::vector<int>{};
          for (int k = 0; k < a; ++k) {
            if (jm >> k & 1U) classes->push_back(k);
          }
        }
        for (std::uint64_t im = 0; im < i_count; ++im) {
          std::vector<int> odd;
          for (std::size_t q = 0; q < open.size(); ++q) {
            if (im >> q & 1U) odd.push_back(open[q]);
          }
          const bool ok = any_linkage(g, pairs, [&](const std::vector<Path>& paths) {
            if (parity && !parity_matches(paths, odd)) return false;
            std::vector<char> allowed(static_cast<std::size_t>(n), 1);
            for (const Path& p : paths) {
              for (std::size_t k = 0; k < p.size(); ++k) {
                const bool is_root = (rm >> p[k]) & 1U;
                const bool interior = k > 0 && k + 1 < p.size();
                if (is_root && interior) return false;
                if (!is_root) allowed[static_cast<std::size_t>(p[k])] = 0;
              }
            }
            for (Vertex v : r) allowed[static_cast<std::size_t>(v)] = 0;  // roots are fixed, not free
            return fits(r, allowed, classes);
          });
          if (!ok) return false;
        }
      }
      int k = 0;
      for (; k < 2 * b; ++k) {
        if (++tuple[static_cast<std::size_t>(k)] < n) break;
        tuple[static_cast<std::size_t>(k)] = 0;
      }
      if (k == 2 * b) break;
    }
  }
  return true;
}

}  // namespace

bool is_woven(const Graph& g, int a, int b) { return woven_oracle(g, a, b, false); }
bool is_parity_woven(const Graph& g, int a, int b) { return woven_oracle(g, a, b, true); }

SeparabilityVerdict::Kind chromatic_separability(const Graph& g, const ListAssignment& lists, int s) {
  const int n = g.order();
  if (n > 12) throw Error("exceeds exact bound");
  if (oracle::is_list_colorable(g, lists)) return SeparabilityVerdict::Kind::colorable;
  // bad[m]: some shrinking by s colours per vertex leaves G[m] non-colourable.
  std::vector<char> bad(std::size_t{1} << n, 0);
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    std::vector<Vertex> vs;
    for (int v = 0; v < n; ++v) {
      if (m >> v & 1U) vs.push_back(v);
    }
    std::vector<Edge> edges;
    for (std::size_t x = 0; x < vs.size(); ++x) {
      for (std::size_t y = x + 1; y < vs.size(); ++y) {
        if (g.has_edge(vs[x], vs[y])) edges.emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(y));
      }
    }
    const Graph sub(static_cast<int>(vs.size()), edges);
    // Each vertex drops a set of exactly min(s, |L(v)|) colours.
    std::vector<std::vector<std::vector<Color>>> options;
    for (Vertex v : vs) {
      const auto& full = lists.list(v);
      const std::size_t keep = full.size() > static_cast<std::size_t>(s) ? full.size() - static_cast<std::size_t>(s) : 0;
      std::vector<std::vector<Color>> opts;
      for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << full.size()); ++pick) {
        if (static_cast<std::size_t>(std::popcount(pick)) != keep) continue;
        std::vector<Color> l;
        for (std::size_t q = 0; q < full.size(); ++q) {
          if (pick >> q & 1U) l.push_back(full[q]);
        }
        opts.push_back(std::move(l));
      }
      options.push_back(std::move(opts));
    }
    std::vector<std::size_t> idx(vs.size(), 0);
    while (true) {
      std::vector<std::vector<Color>> chosen;
      for (std::size_t q = 0; q < idx.size(); ++q) chosen.push_back(options[q][idx[q]]);
      if (!oracle::is_list_colorable(sub, ListAssignment(std::move(chosen)))) {
        bad[m] = 1;
        break;
      }
      std::size_t q = 0;
      while (q < idx.size() && ++idx[q] == options[q].size()) idx[q++] = 0;
      if (q == idx.size()) break;
    }
  }
  for (std::uint64_t x = 1; x < (std::uint64_t{1} << n); ++x) {
    if (!bad[x]) continue;
    for (std::uint64_t y = 1; y < (std::uint64_t{1} << n); ++y) {
      if (bad[y] && !(x & y)) return SeparabilityVerdict::Kind::separable;
    }
  }
  return SeparabilityVerdict::Kind::inseparable;
}

}  // namespace minorkit::oracle
