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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "minorkit/error.hpp"
#include "minorkit/graph.hpp"

namespace minorkit {

using Color = int;
/// coloring[v] is the colour of vertex v.
using Coloring = std::vector<Color>;

/// Per-vertex colour lists (kept sorted and duplicate-free).
class ListAssignment {
 public:
  ListAssignment() = default;
  /// Throws Error on negative colours or colours above `palette_bound`.
  explicit ListAssignment(std::vector<std::vector<Color>> lists, std::optional<int> palette_bound = std::nullopt);

  /// Every vertex gets {1, ..., ell}.
  static ListAssignment full_palette(int n, int ell);
  static ListAssignment uniform(int n, std::vector<Color> list);

  int order() const noexcept { return static_cast<int>(lists_.size()); }
  const std::vector<Color>& list(Vertex v) const { return lists_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::vector<Color>>& lists() const noexcept { return lists_; }
  std::optional<int> palette_bound() const noexcept { return palette_bound_; }

  /// |L|, the smallest list size; 0 for an empty assignment.
  int min_size() const;
  /// Union of all lists, ascending.
  std::vector<Color> colors() const;
  /// Lists of the given vertices, renumbered 0..k-1 in the given order.
  ListAssignment restricted(std::span<const Vertex> vertices) const;
  /// Whether other(v) is a subset of this->list(v) for every v.
  bool contains(const ListAssignment& other) const;

  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

 private:
  std::vector<std::vector<Color>> lists_;
  std::optional<int> palette_bound_;
};

/// Clauses: "coloring size mismatch", "color not in list", "improper edge".
Verdict verify_coloring(const Graph& g, const ListAssignment& lists, const Coloring& c);

/// Exact backtracking (most constrained vertex first). Throws Error when the
/// assignment does not cover every vertex.
std::optional<Coloring> is_list_colorable(const Graph& g, const ListAssignment& lists);

/// Colours along the reverse degeneracy order. Throws Error("insufficient lists")
/// unless |L| >= degeneracy + 1.
Coloring greedy_degenerate_color(const Graph& g, const ListAssignment& lists);

int chromatic_number(const Graph& g);

/// Least k such that every assignment of k-subsets of {1..palette} is
/// colourable. Only the k-core needs lists; assignments are enumerated up to
/// colour permutation. palette = 0 means the sufficient bound (core size - 1).
/// Throws Error("exceeds exact bound") above `max_order` vertices.
int list_chromatic_number(const Graph& g, int palette = 0, int max_order = 8);

/// Exact independence number; requires at most 64 vertices.
int independence_number(const Graph& g);

/// max over connected induced subgraphs H of ceil(v(H) / alpha(H)).
/// Throws on the null graph and above 20 vertices.
int hall_ratio(const Graph& g);

struct SeparabilityWitness {
  std::vector<Vertex> vertices;
  /// Shrunken lists for `vertices`, indexed like `vertices`.
  ListAssignment lists;
};

struct SeparabilityVerdict {
  enum class Kind { colorable, separable, inseparable };
  Kind kind = Kind::colorable;
  /// Set for separable verdicts.
  std::optional<SeparabilityWitness> first;
  std::optional<SeparabilityWitness> second;
  /// Exhaustion record: number of vertex sets tested and the inclusion-minimal
  /// sets that admit a non-colourable shrinking.
  std::uint64_t subsets_examined = 0;
  std::vector<std::vector<Vertex>> minimal_sets;
};

const char* to_string(SeparabilityVerdict::Kind kind);

/// Decides s-chromatic-separability by enumerating vertex sets by size. A set U
/// is "bad" when some shrinking of the lists on U by s colours per vertex leaves
/// G[U] non-colourable; bad sets are closed upwards, so it suffices to look for
/// two disjoint minimal bad sets. Up to 16 vertices.
SeparabilityVerdict chromatic_separability(const Graph& g, const ListAssignment& lists, int s);

/// Checks a separable witness against g, lists and s from scratch.
Verdict verify_separability_witness(const Graph& g, const ListAssignment& lists, int s, const SeparabilityWitness& a,
                                    const SeparabilityWitness& b);

/// Colours x greedily, then one side of the bipartite graph g - x from
/// {1..floor(ell/2)} and the other side from the colours above floor(ell/2).
/// Requires lists inside {1..ell} and |L| >= |x| + ceil(ell/2) + 1.
/// Throws Error("not bipartite") when g - x has an odd cycle.
Coloring palette_split_color(const Graph& g, std::span<const Vertex> x, const ListAssignment& lists, int ell);

/// The stronger setting in which the palette split is applied when linking
/// with parities: |x| < 4k - 3, ell >= 32k and |L| >= 7 ell / 8.
bool parity_split_setting_holds(int x_size, int k, int ell, int list_min);

struct PaletteSample {
  std::vector<Color> colors;
  int retry = 0;
  /// |L(v) ∩ colors| for the vertices of x and of z, in input order.
  std::vector<int> x_counts;
  std::vector<int> z_counts;
};

/// Keeps each colour independently with probability r/|L| (decided by hashing
/// seed, retry and colour) until every v in x keeps at least r/2 of its colours
/// and every v in z keeps at most 3r/2. Returns nullopt when retries run out.
std::optional<PaletteSample> random_palette_subsample(const Graph& g, std::span<const Vertex> x,
                                                      std::span<const Vertex> z, const ListAssignment& lists, int r,
                                                      std::uint64_t seed, int max_retries);

}  // namespace minorkit
