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
#include <utility>

#include "minorkit/coloring.hpp"
#include "minorkit/graph.hpp"
#include "minorkit/linkage.hpp"
#include "minorkit/minors.hpp"
#include "minorkit/woven.hpp"

namespace minorkit {

/// Version stamped into every certificate as the top-level "schema" field.
inline constexpr int kSchemaVersion = 1;

// Certificates are single JSON objects with "schema" and "kind" fields.
// Vertices are integers; edges are two-element arrays; the pattern graph is
// {"order", "edges", "name"}. Parsers throw ParseError on malformed input.

std::string to_json(const Model& m);
std::string to_json(const Expansion& e);
std::string to_json(const KstModel& m);
std::string to_json(const LinkageSpec& spec, const Linkage& l);
std::string to_json(const WovenQuery& q, const WovenWitness& w);

Model model_from_json(std::string_view text);
Expansion expansion_from_json(std::string_view text);
KstModel kst_model_from_json(std::string_view text);
std::pair<LinkageSpec, Linkage> linkage_from_json(std::string_view text);
std::pair<WovenQuery, WovenWitness> woven_from_json(std::string_view text);

/// {"vertex": [colours]} with decimal vertex keys.
std::string lists_to_json(const ListAssignment& l);
ListAssignment lists_from_json(std::string_view text, int order);
/// {"vertex": colour}.
std::string coloring_to_json(const Coloring& c);
Coloring coloring_from_json(std::string_view text, int order);

/// Certificate of kind "list_coloring": {"lists": [[...], ...], "coloring": [...]},
/// both indexed by vertex.
std::string to_json(const ListAssignment& lists, const Coloring& c);
std::pair<ListAssignment, Coloring> list_coloring_from_json(std::string_view text);

/// The "kind" field of a certificate.
std::string certificate_kind(std::string_view text);

/// Parses a certificate of any kind and runs the matching verifier against g.
Verdict verify_certificate_json(const Graph& g, std::string_view text);

}  // namespace minorkit
