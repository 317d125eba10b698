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

#include "minorkit/coloring.hpp"
#include "minorkit/config.hpp"
#include "minorkit/error.hpp"
#include "minorkit/graph.hpp"
#include "minorkit/linkage.hpp"
#include "minorkit/minors.hpp"

namespace minorkit {

// ------------------------------------------------------------ control functions

/// g(s) = C (1 + log s)^6 and f(t) = 49 g(7 sqrt(log t)) with C = c_newforced.
/// Natural logarithms throughout.
class FunctionTable {
 public:
  explicit FunctionTable(ConstantsConfig cfg = {});

  /// Throws Error for s < 1.
  double g(double s) const;
  /// Throws Error for t < 3.
  double f(double t) const;
  /// 49 C (1 + log 7)^6 (1 + log log t)^6, an upper bound on f(t) for t >= 3.
  double f_upper_bound(double t) const;
  /// c_smallconn log log t.
  double smallconn_bound(double t) const;

  const ConstantsConfig& config() const noexcept { return cfg_; }

 private:
  ConstantsConfig cfg_;
};

double eval_g(double s, const ConstantsConfig& cfg = {});
double eval_f(double t, const ConstantsConfig& cfg = {});

/// c_density t sqrt(log t): graphs at least this dense have a K_t minor.
double density_threshold(int t, const ConstantsConfig& cfg = {});
/// c_bipartitedensity t sqrt(log t), the bipartite-minor analogue.
double bipartite_density_threshold(int t, const ConstantsConfig& cfg = {});

// ------------------------------------------------------------ majority recolouring

struct MajorityResult {
  /// Bipartite expansion of the retained subgraph of K_{a,b}; same trees.
  Expansion expansion;
  /// Retained branch edges per B-node.
  std::vector<int> legs;
  /// Majority attachment value chosen for each B-node.
  std::vector<int> majority;
  int removed = 0;
};

/// Input: a verified expansion of K_{a,b} whose pattern has A = {0..a-1}.
/// Each A-tree is 2-coloured (phi) and so is each B-tree (psi_j). A branch
/// edge between A-tree i and B-tree j has value phi(end in i) XOR psi_j(end in
/// j); for every j the majority value is kept (ties keep 0) and the other
/// branch edges are dropped. B-tree j is then coloured psi_j XOR value XOR 1,
/// which makes every kept edge bichromatic. With singleton B-trees the value is
/// just the colour of the A-side end. Throws Error if the input does not verify.
MajorityResult majority_bipartite_minor(const Graph& g, const Expansion& e, int a);

// ------------------------------------------------------------ unbalanced bound

struct UnbalancedBound {
  double lhs = 0;
  double rhs = 0;
  bool holds = false;
};

/// lhs = e(G), rhs = c t sqrt(log t) sqrt(|A||B|) + (t-2) v(G), rounded up by
/// one ulp. Throws Error("not a bipartition") or for t < 3.
UnbalancedBound check_unbalanced_bound(const Graph& g, std::span<const Vertex> a_side,
                                       std::span<const Vertex> b_side, int t, double c);

/// Least c >= 0 for which the bound holds on this graph.
double minimal_unbalanced_constant(const Graph& g, std::span<const Vertex> a_side, std::span<const Vertex> b_side,
                                   int t);

/// Checks |B| >= c_logbip2 log(t) |A| and that every B-vertex has 2t neighbours
/// in A, throwing Error("hypothesis not met") otherwise, then searches for a
/// K_t model (in a bipartite graph any model certifies a bipartite minor).
SearchResult<Model> logbip2_extract(const Graph& g, std::span<const Vertex> a_side, std::span<const Vertex> b_side,
                                    int t, const ConstantsConfig& cfg = {}, std::int64_t budget = kDefaultBudget);

// ------------------------------------------------------------ connectivity

struct ConnectedPiece {
  Subgraph subgraph;
  int kappa = 0;
};

/// Returns an induced k-connected subgraph, or nullopt if there is none.
/// Vertices of degree < k are peeled off; if the rest has a separator X
/// smaller than k, every side C + X is tried, densest first. Any k-connected
/// subgraph survives peeling and lies inside one side, so the search is
/// complete; it is exponential only when separators keep appearing.
std::optional<ConnectedPiece> mader_extract(const Graph& g, int k);

/// Exhaustive over vertex subsets (at most 10 vertices): maximises kappa, then
/// size, then prefers the smallest vertex mask.
ConnectedPiece brute_max_connectivity_subgraph(const Graph& g);

// ------------------------------------------------------------ railroads

struct Railroad {
  std::vector<Vertex> stations;
  std::vector<Path> inbound;
  std::vector<Path> outbound;
  int width = 1;
  int length = 1;
};

/// Clauses: "track not a path", "tracks not disjoint", "track count",
/// "track neighbors", "track incidence", "degeneracy".
Verdict verify_railroad(const Graph& g, const Railroad& r);

// ------------------------------------------------------------ near-bipartite

/// |x| <= 8t - 2 and some component of g - x is bipartite with >= 8t + 2 vertices.
bool check_near_bipartite_witness(const Graph& g, std::span<const Vertex> x, int t);

// ------------------------------------------------------------ list colouring cores

struct ColoringCore {
  Subgraph subgraph;
  /// Lists of the core's vertices, in its own labels.
  ListAssignment lists;
};

/// Induced subgraphs are tried largest first (then by vertex mask); for each
/// k-connected one, the restricted lists are tried and then every reduction
/// to lists of exactly max(1, |L| - 4k) colours. Returns the first core that
/// is not colourable from its lists. Requires |L| >= 4k + 1 and at most 8
/// vertices; throws Error("exceeds exact bound") when the reduction count is
/// too large.
std::optional<ColoringCore> find_noncolorable_connected_core(const Graph& g, const ListAssignment& lists, int k);

// ------------------------------------------------------------ small connected covers

struct SmallConnCover {
  std::vector<Subgraph> parts;
  /// 1-based stage that failed; nullopt when all r parts were found.
  std::optional<int> failed_stage;
  /// Why the failing stage stopped.
  std::string reason;
  /// Size cap t f(t) log t in force.
  double size_cap = 0;
};

/// Stage s removes the parts found so far (X), colours G[X] from its lists when
/// possible and deletes those colours from neighbouring lists, shrinks the
/// rest to a vertex-critical non-colourable subgraph and extracts a
/// k-connected piece from it with mader_extract. Throws Error("threshold")
/// when t < 3 or the size cap cannot hold a k-connected graph.
SmallConnCover small_conn_cover(const Graph& g, const ListAssignment& lists, int k, int t, int r,
                                const ConstantsConfig& cfg = {});

}  // namespace minorkit
