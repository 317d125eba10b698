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

#include <string>
#include <vector>

#include "minorkit/graph.hpp"

namespace minorkit {

/// Largest order accepted by canonical_form (the code must fit in 64 bits).
inline constexpr int kCanonicalMaxOrder = 11;

/// Relabelling of g that is identical for isomorphic inputs, found by colour
/// refinement plus individualisation over the refined cells.
Graph canonical_form(const Graph& g);
std::string canonical_graph6(const Graph& g);

/// All graphs on exactly n vertices up to isomorphism, in canonical form and
/// sorted by graph6 string. Supported for n <= 9 (n = 9 takes minutes).
std::vector<Graph> nonisomorphic_graphs(int n);

/// Concatenation of nonisomorphic_graphs(0..max_n) excluding the null graph.
std::vector<Graph> all_graphs_up_to(int max_n);

}  // namespace minorkit
