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
#include <vector>

#include "minorkit/error.hpp"
#include "minorkit/graph.hpp"
#include "minorkit/linkage.hpp"
#include "minorkit/minors.hpp"

namespace minorkit {

/// One instance of the woven property: roots `r`, terminal pairs
/// (s_terms[i], t_terms[i]), and in the parity case the root indices `j` that
/// must lie in colour class 0 together with the odd pair indices `i`.
struct WovenQuery {
  std::vector<Vertex> r;
  std::vector<Vertex> s_terms;
  std::vector<Vertex> t_terms;
  std::optional<std::vector<int>> j;
  std::optional<std::vector<int>> i;

  bool parity() const { return j.has_value() || i.has_value(); }
  std::vector<std::pair<Vertex, Vertex>> pairs() const;
};

/// A rooted K_a model (plain case) or a rooted bipartite K_a expansion (parity
/// case) together with a linkage that meets it only in roots that are terminals.
struct WovenWitness {
  std::optional<Model> model;
  std::optional<Expansion> expansion;
  Linkage linkage;
};

/// Throws Error on repeated or out-of-range roots, mismatched terminal counts,
/// a bad root class set, or an invalid parity set.
void validate_query(const Graph& g, const WovenQuery& q);

/// Clauses: "model", "expansion", "model roots", "root classes", "linkage",
/// "intersection" (the model and linkage must share exactly the roots that are
/// terminals).
Verdict verify_woven_witness(const Graph& g, const WovenQuery& q, const WovenWitness& w);

/// Enumerates linkages whose interiors avoid the roots and, for each distinct
/// vertex set, searches for a rooted model in what remains. In the parity case
/// every 2-colouring of the remaining vertices with the prescribed root classes
/// is tried, keeping only bichromatic edges. At most 64 vertices.
SearchResult<WovenWitness> answer_woven_query(const Graph& g, const WovenQuery& q,
                                              std::int64_t budget = kDefaultBudget);

/// Every query with |R| = a and b terminal pairs (repeats allowed) has a
/// witness. Vacuously true when a exceeds the order. At most 8 vertices;
/// throws Error("budget exhausted") if a query cannot be decided.
bool is_woven(const Graph& g, int a, int b, std::int64_t budget = kDefaultBudget);
bool is_parity_woven(const Graph& g, int a, int b, std::int64_t budget = kDefaultBudget);

/// Answers woven queries on a fixed host graph, in that graph's labels.
using WovenOracle = std::function<std::optional<WovenWitness>(const WovenQuery&)>;

/// Oracle backed by answer_woven_query.
WovenOracle brute_force_oracle(Graph h, std::int64_t budget = kDefaultBudget);

/// Direct construction for complete graphs: terminal pairs are joined by an
/// edge or through one spare vertex, roots are singletons (or root plus spare
/// partner in the parity case). Returns nullopt when spare vertices run out.
WovenOracle clique_oracle(int n);

struct ComposeResult {
  Linkage linkage;
  std::optional<Model> model;
  std::optional<Expansion> expansion;
  /// Indices of the paths that met the subgraph and were rerouted.
  std::vector<int> rerouted;
  /// The query that was put to the oracle, in the subgraph's labels.
  WovenQuery inner_query;
};

/// Reroutes the paths of `p` that meet `h` through a woven query on h:
/// each such path keeps its segments up to its first and from its last vertex
/// in h, and the middle comes from the oracle's linkage. The model is the
/// oracle's, mapped back to g. Throws Error if the oracle fails or if the
/// composed objects violate the containment guarantees.
ComposeResult compose_through_woven(const Graph& g, const Subgraph& h, const WovenOracle& oracle,
                                    std::span<const std::pair<Vertex, Vertex>> pairs, const Linkage& p,
                                    std::span<const Vertex> r);

/// Parity version: the inner query marks as odd exactly the pairs whose
/// original middle segment is odd, so every rerouted path keeps its parity.
/// `parity` is the pattern of `p` and `j` the root indices for class 0.
ComposeResult compose_through_parity_woven(const Graph& g, const Subgraph& h, const WovenOracle& oracle,
                                           std::span<const std::pair<Vertex, Vertex>> pairs,
                                           std::span<const int> parity, const Linkage& p,
                                           std::span<const Vertex> r, std::span<const int> j);

}  // namespace minorkit
