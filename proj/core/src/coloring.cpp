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

#include "minorkit/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "minorkit/rng.hpp"

namespace minorkit {

ListAssignment::ListAssignment(std::vector<std::vector<Color>> lists, std::optional<int> palette_bound)
    : lists_(std::move(lists)), palette_bound_(palette_bound) {
  for (auto& l : lists_) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    if (!l.empty() && l.front() < 0) throw Error("negative colour in list");
    if (palette_bound_ && !l.empty() && l.back() > *palette_bound_) {
      throw Error("colour " + std::to_string(l.back()) + " exceeds palette bound " + std::to_string(*palette_bound_));
    }
  }
}

ListAssignment ListAssignment::full_palette(int n, int ell) {
  std::vector<Color> all(static_cast<std::size_t>(std::max(ell, 0)));
  std::iota(all.begin(), all.end(), 1);
  return ListAssignment(std::vector<std::vector<Color>>(static_cast<std::size_t>(n), all), ell);
}

ListAssignment ListAssignment::uniform(int n, std::vector<Color> list) {
  return ListAssignment(std::vector<std::vector<Color>>(static_cast<std::size_t>(n), std::move(list)));
}

int ListAssignment::min_size() const {
  if (lists_.empty()) return 0;
  std::size_t best = lists_.front().size();
  for (const auto& l : lists_) best = std::min(best, l.size());
  return static_cast<int>(best);
}

std::vector<Color> ListAssignment::colors() const {
  std::set<Color> all;
  for (const auto& l : lists_) all.insert(l.begin(), l.end());
  return {all.begin(), all.end()};
}

ListAssignment ListAssignment::restricted(std::span<const Vertex> vertices) const {
  std::vector<std::vector<Color>> out;
  out.reserve(vertices.size());
  for (Vertex v : vertices) out.push_back(list(v));
  return ListAssignment(std::move(out), palette_bound_);
}

bool ListAssignment::contains(const ListAssignment& other) const {
  if (other.order() != order()) return false;
  for (std::size_t v = 0; v < lists_.size(); ++v) {
    if (!std::includes(lists_[v].begin(), lists_[v].end(), other.lists_[v].begin(), other.lists_[v].end())) {
      return false;
    }
  }
  return true;
}

Verdict verify_coloring(const Graph& g, const ListAssignment& lists, const Coloring& c) {
  if (static_cast<int>(c.size()) != g.order() || lists.order() != g.order()) {
    return Verdict::fail("coloring size mismatch");
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto& l = lists.list(v);
    if (!std::binary_search(l.begin(), l.end(), c[static_cast<std::size_t>(v)])) {
      return Verdict::fail("color not in list");
    }
  }
  for (const Edge& e : g.edges()) {
    if (c[static_cast<std::size_t>(e.u)] == c[static_cast<std::size_t>(e.v)]) return Verdict::fail("improper edge");
  }
  return Verdict::pass();
}

namespace {

class ListSolver {
 public:
  ListSolver(const Graph& g, const ListAssignment& lists)
      : g_(g), lists_(lists), color_(static_cast<std::size_t>(g.order()), -1) {}

  bool solve(int colored) {
    const int n = g_.order();
    if (colored == n) return true;
    Vertex best = -1;
    std::vector<Color> best_options;
    for (Vertex v = 0; v < n; ++v) {
      if (color_[static_cast<std::size_t>(v)] >= 0) continue;
      auto options = available(v);
      if (best < 0 || options.size() < best_options.size()) {
        best = v;
        best_options = std::move(options);
        if (best_options.size() <= 1) break;
      }
    }
    for (Color c : best_options) {
      color_[static_cast<std::size_t>(best)] = c;
      if (solve(colored + 1)) return true;
    }
    color_[static_cast<std::size_t>(best)] = -1;
    return false;
  }

  const Coloring& coloring() const { return color_; }

 private:
  std::vector<Color> available(Vertex v) const {
    std::vector<Color> out;
    for (Color c : lists_.list(v)) {
      bool clash = false;
      for (Vertex w : g_.neighbors(v)) {
        if (color_[static_cast<std::size_t>(w)] == c) {
          clash = true;
          break;
        }
      }
      if (!clash) out.push_back(c);
    }
    return out;
  }

  const Graph& g_;
  const ListAssignment& lists_;
  Coloring color_;
};

void require_cover(const Graph& g, const ListAssignment& lists) {
  if (lists.order() < g.order()) throw Error("vertex " + std::to_string(lists.order()) + " has no list");
}

Coloring checked(const Graph& g, const ListAssignment& lists, Coloring c) {
  if (auto v = verify_coloring(g, lists, c); !v) throw Error("internal: coloring failed verification: " + v.clause);
  return c;
}

}  // namespace

std::optional<Coloring> is_list_colorable(const Graph& g, const ListAssignment& lists) {
  require_cover(g, lists);
  ListSolver solver(g, lists);
  if (!solver.solve(0)) return std::nullopt;
  return checked(g, lists, solver.coloring());
}

Coloring greedy_degenerate_color(const Graph& g, const ListAssignment& lists) {
  require_cover(g, lists);
  const DegeneracyOrder order = degeneracy(g);
  if (g.order() > 0 && lists.min_size() < order.d + 1) throw Error("insufficient lists");
  Coloring c(static_cast<std::size_t>(g.order()), -1);
  for (auto it = order.order.rbegin(); it != order.order.rend(); ++it) {
    for (Color candidate : lists.list(*it)) {
      bool clash = false;
      for (Vertex w : g.neighbors(*it)) clash = clash || c[static_cast<std::size_t>(w)] == candidate;
      if (!clash) {
        c[static_cast<std::size_t>(*it)] = candidate;
        break;
      }
    }
  }
  return checked(g, lists, std::move(c));
}

int chromatic_number(const Graph& g) {
  if (g.order() == 0) return 0;
  for (int k = 1;; ++k) {
    if (is_list_colorable(g, ListAssignment::full_palette(g.order(), k))) return k;
  }
}

namespace {

/// Searches for a non-colourable assignment of k-subsets of {1..palette} to
/// the vertices of h, listing colours in restricted-growth form. Lists are
/// colour bitmasks over vertex positions in BFS order.
class AdversarialLists {
 public:
  AdversarialLists(const Graph& h, int k, int palette) : k_(k), palette_(palette) {
    if (palette > 63) throw Error("exceeds exact bound");
    // BFS order keeps prefixes connected, so contradictions surface early.
    std::vector<Vertex> order;
    std::vector<char> seen(static_cast<std::size_t>(h.order()), 0);
    for (Vertex s = 0; s < h.order(); ++s) {
      if (seen[static_cast<std::size_t>(s)]) continue;
      seen[static_cast<std::size_t>(s)] = 1;
      std::size_t head = order.size();
      order.push_back(s);
      while (head < order.size()) {
        const Vertex v = order[head++];
        for (Vertex w : h.neighbors(v)) {
          if (!seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = 1;
            order.push_back(w);
          }
        }
      }
    }
    n_ = h.order();
    std::vector<int> pos(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    adj_.assign(static_cast<std::size_t>(n_), 0);
    for (const Edge& e : h.edges()) {
      const int a = pos[static_cast<std::size_t>(e.u)];
      const int b = pos[static_cast<std::size_t>(e.v)];
      adj_[static_cast<std::size_t>(a)] |= VertexMask{1} << b;
      adj_[static_cast<std::size_t>(b)] |= VertexMask{1} << a;
    }
    lists_.assign(static_cast<std::size_t>(n_), 0);
    colour_.assign(static_cast<std::size_t>(n_), -1);
  }

  bool find() { return assign(0, 0); }

 private:
  /// Backtracking on the first `len` positions, most constrained first.
  bool colorable(VertexMask open) {
    if (!open) return true;
    int best = -1;
    std::uint64_t best_avail = 0;
    int best_count = 65;
    for (VertexMask m = open; m; m &= m - 1) {
      const int v = lowest(m);
      std::uint64_t avail = lists_[static_cast<std::size_t>(v)];
      for (VertexMask nb = adj_[static_cast<std::size_t>(v)] & ~open; nb; nb &= nb - 1) {
        const int c = colour_[static_cast<std::size_t>(lowest(nb))];
        if (c >= 0) avail &= ~(std::uint64_t{1} << c);
      }
      const int cnt = popcount(avail);
      if (cnt < best_count) {
        best = v;
        best_avail = avail;
        best_count = cnt;
        if (cnt == 0) return false;
      }
    }
    const VertexMask rest = open & ~(VertexMask{1} << best);
    for (std::uint64_t a = best_avail; a; a &= a - 1) {
      colour_[static_cast<std::size_t>(best)] = lowest(a);
      if (colorable(rest)) {
        colour_[static_cast<std::size_t>(best)] = -1;
        return true;
      }
    }
    colour_[static_cast<std::size_t>(best)] = -1;
    return false;
  }

  bool prefix_colorable(int len) {
    const VertexMask open = len == 64 ? ~VertexMask{0} : (VertexMask{1} << len) - 1;
    return colorable(open);
  }

  bool assign(int i, int used) {
    if (i == n_) return false;
    for (int fresh = 0; fresh <= k_; ++fresh) {
      const int old = k_ - fresh;
      if (old > used || used + fresh > palette_) continue;
      std::vector<int> pick(static_cast<std::size_t>(old));
      std::iota(pick.begin(), pick.end(), 1);
      while (true) {
        std::uint64_t list = 0;
        for (int c : pick) list |= std::uint64_t{1} << c;
        for (int c = 1; c <= fresh; ++c) list |= std::uint64_t{1} << (used + c);
        lists_[static_cast<std::size_t>(i)] = list;
        if (!prefix_colorable(i + 1)) return true;
        if (assign(i + 1, used + fresh)) return true;
        // Next old-colour combination in lexicographic order.
        int j = old - 1;
        while (j >= 0 && pick[static_cast<std::size_t>(j)] == used - old + j + 1) --j;
        if (j < 0) break;
        ++pick[static_cast<std::size_t>(j)];
        for (int q = j + 1; q < old; ++q) pick[static_cast<std::size_t>(q)] = pick[static_cast<std::size_t>(q - 1)] + 1;
      }
    }
    return false;
  }

  int k_;
  int palette_;
  int n_ = 0;
  std::vector<VertexMask> adj_;
  std::vector<std::uint64_t> lists_;
  std::vector<int> colour_;
};

}  // namespace

int list_chromatic_number(const Graph& g, int palette, int max_order) {
  if (g.order() > max_order) throw Error("exceeds exact bound");
  if (palette < 0) throw Error("palette must be non-negative");
  if (g.order() == 0) return 0;
  const int chi = chromatic_number(g);
  if (palette > 0 && palette < chi) throw Error("palette smaller than the chromatic number");
  const int d = degeneracy(g).d;
  for (int k = chi;; ++k) {
    if (d < k) return k;
    const auto core = k_core(g, k);
    const Subgraph h = induced_subgraph(g, core);
    // If some k-assignment is bad, one with fewer than v(h) colours is: when
    // Hall's condition fails for a set A, colour the rest with distinct colours
    // outside L(A); then h[A] is already bad and every list can be drawn from L(A).
    const int full = std::max(k, h.graph.order() - 1);
    const int p = palette == 0 ? full : std::min(std::max(palette, k), full);
    if (!AdversarialLists(h.graph, k, p).find()) return k;
  }
}

namespace {

std::vector<std::uint8_t> alpha_table(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint8_t> alpha(std::size_t{1} << n, 0);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const Vertex v = lowest(mask);
    const auto without = alpha[mask & ~bit(v)];
    const auto with = static_cast<std::uint8_t>(1 + alpha[mask & ~bit(v) & ~g.neighbor_mask(v)]);
    alpha[mask] = std::max(without, with);
  }
  return alpha;
}

bool mask_connected(const Graph& g, VertexMask mask) {
  VertexMask reach = mask & (~mask + 1);
  while (true) {
    VertexMask next = reach;
    for (VertexMask r = reach; r; r &= r - 1) next |= g.neighbor_mask(lowest(r)) & mask;
    if (next == reach) return reach == mask;
    reach = next;
  }
}

}  // namespace

int independence_number(const Graph& g) {
  if (g.order() > 64) throw Error("independence number limited to 64 vertices");
  // Branch on a vertex of maximum degree; vertices of degree <= 1 are taken greedily.
  struct Rec {
    const Graph& g;
    int best = 0;
    void go(VertexMask rest, int size) {
      if (size + popcount(rest) <= best) return;
      if (rest == 0) {
        best = std::max(best, size);
        return;
      }
      Vertex pivot = -1;
      int pivot_deg = -1;
      for (VertexMask r = rest; r; r &= r - 1) {
        const Vertex v = lowest(r);
        const int d = popcount(g.neighbor_mask(v) & rest);
        if (d <= 1) {
          go(rest & ~bit(v) & ~g.neighbor_mask(v), size + 1);
          return;
        }
        if (d > pivot_deg) {
          pivot = v;
          pivot_deg = d;
        }
      }
      go(rest & ~bit(pivot) & ~g.neighbor_mask(pivot), size + 1);
      go(rest & ~bit(pivot), size);
    }
  } rec{g};
  rec.go(g.order() == 0 ? 0 : g.all_mask(), 0);
  return rec.best;
}

int hall_ratio(const Graph& g) {
  if (g.order() == 0) throw Error("Hall ratio undefined for the null graph");
  if (g.order() > 20) throw Error("exceeds exact bound");
  const auto alpha = alpha_table(g);
  int best = 1;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.order()); ++mask) {
    const int size = popcount(mask);
    const int a = alpha[mask];
    if ((size + a - 1) / a <= best || !mask_connected(g, mask)) continue;
    best = (size + a - 1) / a;
  }
  return best;
}

const char* to_string(SeparabilityVerdict::Kind kind) {
  switch (kind) {
    case SeparabilityVerdict::Kind::colorable: return "colorable";
    case SeparabilityVerdict::Kind::separable: return "separable";
    case SeparabilityVerdict::Kind::inseparable: return "inseparable";
  }
  return "?";
}

namespace {

// Enumerates, for the vertices of `sub`, every choice of max(|L(v)| - s, 0)
// colours from L(v); returns the first choice leaving `sub` non-colourable.
std::optional<ListAssignment> failing_shrink(const Graph& sub, const ListAssignment& lists, int s) {
  const int n = sub.order();
  std::vector<int> keep(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    keep[static_cast<std::size_t>(v)] = std::max(static_cast<int>(lists.list(v).size()) - s, 0);
    if (keep[static_cast<std::size_t>(v)] == 0) {
      std::vector<std::vector<Color>> out(lists.lists());
      for (Vertex w = 0; w < n; ++w) {
        out[static_cast<std::size_t>(w)].resize(static_cast<std::size_t>(
            std::max(static_cast<int>(lists.list(w).size()) - s, 0)));
      }
      return ListAssignment(std::move(out));
    }
  }
  // One combination index vector per vertex.
  std::vector<std::vector<int>> pick(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    pick[static_cast<std::size_t>(v)].resize(static_cast<std::size_t>(keep[static_cast<std::size_t>(v)]));
    std::iota(pick[static_cast<std::size_t>(v)].begin(), pick[static_cast<std::size_t>(v)].end(), 0);
  }
  while (true) {
    std::vector<std::vector<Color>> shrunk(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
      for (int i : pick[static_cast<std::size_t>(v)]) {
        shrunk[static_cast<std::size_t>(v)].push_back(lists.list(v)[static_cast<std::size_t>(i)]);
      }
    }
    ListAssignment candidate(std::move(shrunk));
    if (!is_list_colorable(sub, candidate)) return candidate;
    Vertex v = n - 1;
    for (; v >= 0; --v) {
      auto& p = pick[static_cast<std::size_t>(v)];
      const int size = static_cast<int>(lists.list(v).size());
      const int k = static_cast<int>(p.size());
      int j = k - 1;
      while (j >= 0 && p[static_cast<std::size_t>(j)] == size - k + j) --j;
      if (j >= 0) {
        ++p[static_cast<std::size_t>(j)];
        for (int q = j + 1; q < k; ++q) p[static_cast<std::size_t>(q)] = p[static_cast<std::size_t>(q - 1)] + 1;
        break;
      }
      std::iota(p.begin(), p.end(), 0);
    }
    if (v < 0) return std::nullopt;
  }
}

}  // namespace

SeparabilityVerdict chromatic_separability(const Graph& g, const ListAssignment& lists, int s) {
  if (s < 0) throw Error("s must be non-negative");
  require_cover(g, lists);
  const int n = g.order();
  if (n > 16) throw Error("exceeds exact bound");
  SeparabilityVerdict out;
  if (is_list_colorable(g, lists)) {
    out.kind = SeparabilityVerdict::Kind::colorable;
    return out;
  }
  std::vector<VertexMask> minimal;
  std::vector<ListAssignment> shrinks;
  for (int size = 1; size <= n; ++size) {
    // Masks of the given popcount in increasing order (Gosper's hack).
    VertexMask mask = (VertexMask{1} << size) - 1;
    const VertexMask limit = VertexMask{1} << n;
    while (mask < limit) {
      bool covered = false;
      for (VertexMask m : minimal) covered = covered || (m & mask) == m;
      if (!covered) {
        ++out.subsets_examined;
        const auto vs = mask_to_vertices(mask);
        const Subgraph sub = induced_subgraph(g, vs);
        if (auto shrink = failing_shrink(sub.graph, lists.restricted(vs), s)) {
          minimal.push_back(mask);
          shrinks.push_back(std::move(*shrink));
        }
      }
      const VertexMask c = mask & (~mask + 1);
      const VertexMask r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  for (VertexMask m : minimal) out.minimal_sets.push_back(mask_to_vertices(m));
  for (std::size_t i = 0; i < minimal.size() && !out.first; ++i) {
    for (std::size_t j = i + 1; j < minimal.size(); ++j) {
      if (minimal[i] & minimal[j]) continue;
      out.first = SeparabilityWitness{mask_to_vertices(minimal[i]), shrinks[i]};
      out.second = SeparabilityWitness{mask_to_vertices(minimal[j]), shrinks[j]};
      break;
    }
  }
  if (out.first) {
    out.kind = SeparabilityVerdict::Kind::separable;
    if (auto v = verify_separability_witness(g, lists, s, *out.first, *out.second); !v) {
      throw Error("internal: separability witness failed verification: " + v.clause);
    }
  } else {
    out.kind = SeparabilityVerdict::Kind::inseparable;
  }
  return out;
}

Verdict verify_separability_witness(const Graph& g, const ListAssignment& lists, int s, const SeparabilityWitness& a,
                                    const SeparabilityWitness& b) {
  std::set<Vertex> seen;
  for (const SeparabilityWitness* w : {&a, &b}) {
    if (w->vertices.empty()) return Verdict::fail("empty witness");
    if (w->lists.order() != static_cast<int>(w->vertices.size())) return Verdict::fail("witness list size mismatch");
    for (std::size_t i = 0; i < w->vertices.size(); ++i) {
      const Vertex v = w->vertices[i];
      if (!g.contains(v)) return Verdict::fail("witness vertex out of range");
      if (!seen.insert(v).second) return Verdict::fail("witnesses not disjoint");
      const auto& sub = w->lists.list(static_cast<Vertex>(i));
      const auto& full = lists.list(v);
      if (!std::includes(full.begin(), full.end(), sub.begin(), sub.end())) {
        return Verdict::fail("witness list not contained in L");
      }
      if (static_cast<int>(sub.size()) < static_cast<int>(full.size()) - s) return Verdict::fail("witness list too short");
    }
    if (is_list_colorable(induced_subgraph(g, w->vertices).graph, w->lists)) {
      return Verdict::fail("witness colorable");
    }
  }
  return Verdict::pass();
}

Coloring palette_split_color(const Graph& g, std::span<const Vertex> x, const ListAssignment& lists, int ell) {
  require_cover(g, lists);
  if (ell < 1) throw Error("palette size must be positive");
  for (const auto& l : lists.lists()) {
    if (!l.empty() && (l.front() < 1 || l.back() > ell)) throw Error("list outside palette {1..ell}");
  }
  std::vector<char> in_x(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : x) {
    if (!g.contains(v)) throw Error("vertex " + std::to_string(v) + " out of range");
    in_x[static_cast<std::size_t>(v)] = 1;
  }
  const int x_size = static_cast<int>(std::count(in_x.begin(), in_x.end(), 1));
  if (g.order() > 0 && lists.min_size() < x_size + (ell + 1) / 2 + 1) {
    throw Error("precondition |L| >= |x| + ceil(ell/2) + 1 not met");
  }
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!in_x[static_cast<std::size_t>(v)]) rest.push_back(v);
  }
  const Subgraph outside = induced_subgraph(g, rest);
  const auto parts = bipartition(outside.graph);
  if (!parts) throw Error("not bipartite");

  Coloring c(static_cast<std::size_t>(g.order()), -1);
  auto smallest_free = [&](Vertex v, Color lo, Color hi) {
    for (Color col : lists.list(v)) {
      if (col < lo || col > hi) continue;
      bool clash = false;
      for (Vertex w : g.neighbors(v)) clash = clash || c[static_cast<std::size_t>(w)] == col;
      if (!clash) return col;
    }
    throw Error("internal: palette split ran out of colours");
  };
  for (Vertex v = 0; v < g.order(); ++v) {
    if (in_x[static_cast<std::size_t>(v)]) c[static_cast<std::size_t>(v)] = smallest_free(v, 1, ell);
  }
  const int half = ell / 2;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    const Vertex v = rest[i];
    const bool side_a = parts->side[i] == 0;
    c[static_cast<std::size_t>(v)] = side_a ? smallest_free(v, 1, half) : smallest_free(v, half + 1, ell);
  }
  return checked(g, lists, std::move(c));
}

bool parity_split_setting_holds(int x_size, int k, int ell, int list_min) {
  return x_size < 4 * k - 3 && ell >= 32 * k && 8 * list_min >= 7 * ell;
}

std::optional<PaletteSample> random_palette_subsample(const Graph& g, std::span<const Vertex> x,
                                                      std::span<const Vertex> z, const ListAssignment& lists, int r,
                                                      std::uint64_t seed, int max_retries) {
  require_cover(g, lists);
  const int size = lists.min_size();
  if (r < 0 || size <= 0 || r > size) throw Error("invalid sampling probability r/|L|");
  std::set<Vertex> xs(x.begin(), x.end());
  for (Vertex v : z) {
    if (xs.count(v)) throw Error("x and z must be disjoint");
  }
  for (Vertex v : x) {
    if (!g.contains(v)) throw Error("vertex out of range");
  }
  for (Vertex v : z) {
    if (!g.contains(v)) throw Error("vertex out of range");
  }
  const double p = static_cast<double>(r) / static_cast<double>(size);
  const auto palette = lists.colors();
  const Rng root(seed);
  for (int retry = 0; retry < max_retries; ++retry) {
    const Rng attempt = root.split(static_cast<std::uint64_t>(retry));
    PaletteSample sample;
    sample.retry = retry;
    for (Color col : palette) {
      Rng coin = attempt.split(static_cast<std::uint64_t>(col));
      if (r == size || coin.uniform01() < p) sample.colors.push_back(col);
    }
    auto kept = [&](Vertex v) {
      int count = 0;
      for (Color col : lists.list(v)) count += std::binary_search(sample.colors.begin(), sample.colors.end(), col);
      return count;
    };
    bool ok = true;
    for (Vertex v : x) {
      sample.x_counts.push_back(kept(v));
      ok = ok && 2 * sample.x_counts.back() >= r;
    }
    for (Vertex v : z) {
      sample.z_counts.push_back(kept(v));
      ok = ok && 2 * sample.z_counts.back() <= 3 * r;
    }
    if (ok) return sample;
  }
  return std::nullopt;
}

}  // namespace minorkit
