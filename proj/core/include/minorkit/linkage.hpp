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
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "minorkit/error.hpp"
#include "minorkit/graph.hpp"

namespace minorkit {

/// Vertex sequence; consecutive vertices are adjacent.
using Path = std::vector<Vertex>;

inline int path_length(const Path& p) { return p.empty() ? 0 : static_cast<int>(p.size()) - 1; }
int total_length(std::span<const Path> paths);

struct LinkageSpec {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  /// Indices of the pairs whose path must have an odd number of edges; when
  /// present every other path must be even.
  std::optional<std::vector<int>> parity;
};

struct Linkage {
  std::vector<Path> paths;
};

/// Throws Error if a terminal is out of range or the parity set is invalid
/// (index out of range, repeated, or naming a pair with s = t).
void validate_spec(const Graph& g, const LinkageSpec& spec);

/// Clauses: "path count", "path endpoints", "path not in graph",
/// "path not simple", "paths intersect", "parity".
Verdict verify_linkage(const Graph& g, const LinkageSpec& spec, const Linkage& l);

/// Backtracking over the pairs in order. Each path's interior avoids every
/// terminal and every vertex already used; paths are extended in neighbour
/// order. Vertices in `forbidden` never appear inside a path. At most 64 vertices.
SearchResult<Linkage> find_linkage(const Graph& g, const LinkageSpec& spec, std::int64_t budget = kDefaultBudget,
                                   VertexMask forbidden = 0);

/// Enumerates linkages in the same order as find_linkage, handing each to
/// `accept` until it returns true. The result holds the accepted linkage, or
/// proven_absent once every linkage has been rejected.
SearchResult<Linkage> for_each_linkage(const Graph& g, const LinkageSpec& spec,
                                       const std::function<bool(const Linkage&)>& accept,
                                       std::int64_t budget = kDefaultBudget, VertexMask forbidden = 0);

/// `count` vertex-disjoint A-B paths of minimum total length (min-cost flow),
/// or nullopt if fewer exist. Throws Error if a and b intersect.
std::optional<std::vector<Path>> find_geodesic_ab_paths(const Graph& g, std::span<const Vertex> a,
                                                        std::span<const Vertex> b, int count);

enum class ExpressMode { ab_paths, linkage };

/// Condition (i): every vertex off the paths has at most 3 neighbours on each
/// path. Condition (ii): the subgraph induced by the paths (minus the path ends
/// in linkage mode) is (2l-1)-degenerate. Clauses "condition (i)", "condition (ii)".
Verdict is_express(const Graph& g, std::span<const Path> paths, ExpressMode mode);

struct ShortcutWitness {
  Vertex vertex;
  int path;
};

/// First off-path vertex (then first path) violating condition (i).
std::optional<ShortcutWitness> find_shortcut_witness(const Graph& g, std::span<const Path> paths);

/// Vertices of the (2l)-core of the subgraph induced by the paths.
std::vector<Vertex> rewire_witness(const Graph& g, std::span<const Path> paths);

/// Reroutes the path on which `witness` has at least four neighbours through
/// the witness, using its neighbours nearest to either end. Paths run from A to
/// B. Throws Error("invalid witness") when the witness does not qualify.
std::vector<Path> improve_shortcut(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b,
                                   std::span<const Path> paths, Vertex witness);

/// Uses the non-empty (2l)-core H of G[V(P)]: with u_i, v_i the first two
/// H-vertices of P_i, joins u_i to a later H-vertex of P_j (j != i) along a
/// directed cycle of the auxiliary digraph and splices the paths. A chord from
/// some u_i to its own path is shortcut directly. Path i of the result starts
/// where input path i starts. Throws Error when the core is empty.
std::vector<Path> improve_cycle_rewire(const Graph& g, std::span<const Path> paths);

struct DescentResult {
  std::vector<Path> paths;
  int shortcut_moves = 0;
  int rewire_moves = 0;
  /// Residual negative-cycle cancellations (only with global search).
  int global_moves = 0;
  /// Total length after each step, starting with the input.
  std::vector<int> totals;
};

/// Applies the shortcut and rewiring moves until neither applies; with
/// `global` set, then cancels negative cycles of the residual min-cost-flow
/// network (and repeats), so the result is a minimum-total system.
/// Throws Error if `start` is not a system of vertex-disjoint A-B paths.
DescentResult geodesic_descent(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b,
                               std::span<const Path> start, bool global = true);

/// Twin reduction for linkages: originals keep their labels, each further
/// occurrence of a terminal gets a fresh twin (same neighbourhood) numbered
/// from g.order() upward. Pairs with s = t are left out and, unless their vertex
/// is also an end of another pair, that vertex is isolated.
struct TwinExpansion {
  Graph graph;
  std::vector<Vertex> to_original;
  /// Indices of the non-degenerate pairs, in spec order.
  std::vector<int> pair_index;
  std::vector<Vertex> a;  // copy used for s_i of each non-degenerate pair
  std::vector<Vertex> b;  // copy used for t_i
};

TwinExpansion twin_expansion(const Graph& g, std::span<const std::pair<Vertex, Vertex>> pairs);

struct LinkageDescentResult {
  Linkage linkage;
  /// pairs[i] = (first, last vertex) of path i; S and T are preserved as
  /// multisets while the pairing may change.
  std::vector<std::pair<Vertex, Vertex>> pairs;
  DescentResult inner;
};

/// Linkage-mode descent through the twin reduction. The start linkage must
/// verify against `pairs`.
LinkageDescentResult geodesic_linkage_descent(const Graph& g, std::span<const std::pair<Vertex, Vertex>> pairs,
                                              const Linkage& start, bool global = true);

struct MengerResult {
  std::optional<std::vector<Path>> paths;
  /// Separator smaller than |a1| + |a2| when the paths do not exist.
  std::vector<Vertex> cut;
};

/// |a1| + |a2| vertex-disjoint (a1 ∪ a2)-b paths. Throws Error unless the
/// three sets are pairwise disjoint.
MengerResult menger_variant_paths(const Graph& g, std::span<const Vertex> a1, std::span<const Vertex> a2,
                                  std::span<const Vertex> b);

/// Fan hypothesis for side i: 2|A_i| paths from A_i to B in G - A_{3-i},
/// disjoint outside A_i, with every vertex of A_i the end of exactly two.
bool menger_fan_holds(const Graph& g, std::span<const Vertex> ai, std::span<const Vertex> other,
                      std::span<const Vertex> b);

/// Brute force over all terminal tuples (and parity sets). At most 8 vertices;
/// k must satisfy 1 <= k <= v(G).
bool is_k_linked(const Graph& g, int k, std::int64_t budget = kDefaultBudget);
bool is_k_parity_linked(const Graph& g, int k, std::int64_t budget = kDefaultBudget);

}  // namespace minorkit
