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

#include <optional>
#include <span>
#include <vector>

#include "minorkit/coloring.hpp"
#include "minorkit/graph.hpp"
#include "minorkit/linkage.hpp"

// Plain exhaustive reference implementations. They use only the Graph and
// ListAssignment containers, never the searches they are compared against,
// and are meant for graphs with at most about ten vertices.
namespace minorkit::oracle {

/// Some partition of a vertex subset into connected sets realises `pattern`.
bool has_minor(const Graph& g, const Graph& pattern);
/// Partitions of each component into exactly t connected, pairwise adjacent
/// blocks.
bool has_clique_minor(const Graph& g, int t);

/// Tries every colour combination.
bool is_list_colorable(const Graph& g, const ListAssignment& lists);

int independence_number(const Graph& g);
/// Fewest vertices whose removal disconnects g or leaves one vertex.
int vertex_connectivity(const Graph& g);
/// Largest minimum degree over all non-empty vertex subsets.
int degeneracy(const Graph& g);

/// Every (s_i, t_i) choice of simple paths is tried.
bool has_linkage(const Graph& g, const LinkageSpec& spec);

/// Minimum total length of `count` vertex-disjoint A-B paths (each meets A only
/// at its start and B only at its end), by enumerating simple paths.
std::optional<int> min_total_ab_paths(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b,
                                      int count);

/// Definition of (a,b)-woven checked by enumerating roots, terminal tuples,
/// linkages and vertex partitions.
bool is_woven(const Graph& g, int a, int b);
bool is_parity_woven(const Graph& g, int a, int b);

/// "colorable", "separable" or "inseparable", by comparing every pair of
/// disjoint vertex sets against every shrinking of their lists.
SeparabilityVerdict::Kind chromatic_separability(const Graph& g, const ListAssignment& lists, int s);

}  // namespace minorkit::oracle
