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
#include <string_view>
#include <vector>

#include "minorkit/graph.hpp"

namespace minorkit {

enum class GraphFormat { graph6, edge_list, dimacs };

/// Accepts "graph6", "g6", "edge-list", "edges", "dimacs", "col".
GraphFormat parse_format_name(std::string_view name);

/// Picks a format from a file extension (.g6, .col/.dimacs, anything else: edge list).
GraphFormat format_for_path(std::string_view path);

struct ParseResult {
  Graph graph;
  /// Non-fatal oddities such as repeated edges, in input order.
  std::vector<std::string> warnings;
};

/// Parses a single graph. Malformed input raises ParseError with the byte
/// offset of the offending character.
ParseResult parse_graph(std::string_view text, GraphFormat format);

/// Canonical text for `g`: graph6 without header; DIMACS and edge lists list
/// edges in sorted order. parse_graph(emit_graph(g, f), f).graph == g.
std::string emit_graph(const Graph& g, GraphFormat format);

std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

/// One graph per non-empty line (graph6 corpus files); '#' starts a comment line.
std::vector<Graph> parse_graph6_lines(std::string_view text);

}  // namespace minorkit
