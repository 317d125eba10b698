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

#include "minorkit/serialize.hpp"

#include <algorithm>

#include <json.hpp>

namespace minorkit {

using nlohmann::json;

namespace {

json edges_json(std::span<const Edge> edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

json pattern_json(const Graph& p, const std::string& name) {
  return json{{"order", p.order()}, {"edges", edges_json(p.edges())}, {"name", name}};
}

json header(const char* kind) { return json{{"schema", kSchemaVersion}, {"kind", kind}}; }

json parse(std::string_view text, const char* expected_kind) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!j.is_object()) throw ParseError("certificate must be a JSON object", 0);
  if (j.value("schema", -1) != kSchemaVersion) throw ParseError("unsupported schema version", 0);
  if (expected_kind && j.value("kind", std::string{}) != expected_kind) {
    throw ParseError(std::string("expected a certificate of kind ") + expected_kind, 0);
  }
  return j;
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what(), 0);
  }
}

Edge edge_from(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("edge must be a pair", 0);
  return Edge(j[0].get<Vertex>(), j[1].get<Vertex>());
}

std::vector<Edge> edges_from(const json& j) {
  std::vector<Edge> out;
  for (const auto& e : j) out.push_back(edge_from(e));
  return out;
}

std::pair<Graph, std::string> pattern_from(const json& j) {
  const int order = j.at("order").get<int>();
  if (order < 0) throw ParseError("negative pattern order", 0);
  return {Graph(order, edges_from(j.at("edges"))), j.value("name", std::string{})};
}

json coloring_map_json(const std::map<Vertex, int>& c) {
  json out = json::object();
  for (const auto& [v, col] : c) out[std::to_string(v)] = col;
  return out;
}

std::map<Vertex, int> coloring_map_from(const json& j) {
  std::map<Vertex, int> out;
  for (const auto& [k, v] : j.items()) out[std::stoi(k)] = v.get<int>();
  return out;
}

json model_body(const Model& m) {
  json j = header("model");
  j["pattern"] = pattern_json(m.pattern, m.pattern_name);
  j["branch_sets"] = m.branch_sets;
  j["assignment"] = m.assignment;
  return j;
}

Model model_from(const json& j) {
  Model m;
  std::tie(m.pattern, m.pattern_name) = pattern_from(j.at("pattern"));
  m.branch_sets = j.at("branch_sets").get<std::vector<std::vector<Vertex>>>();
  m.assignment = j.at("assignment").get<std::vector<int>>();
  return m;
}

json expansion_body(const Expansion& e) {
  json j = header("expansion");
  j["pattern"] = pattern_json(e.pattern, e.pattern_name);
  json trees = json::array();
  for (const Tree& t : e.trees) trees.push_back({{"vertices", t.vertices}, {"edges", edges_json(t.edges)}});
  j["trees"] = std::move(trees);
  j["branch_edges"] = edges_json(e.branch_edges);
  j["flags"] = {{"rooted", e.roots.has_value()},
                {"bipartite", e.bipartite_coloring.has_value()},
                {"odd", e.odd_coloring.has_value()}};
  if (e.roots) j["roots"] = *e.roots;
  json colorings = json::object();
  if (e.bipartite_coloring) colorings["bipartite"] = coloring_map_json(*e.bipartite_coloring);
  if (e.odd_coloring) colorings["odd"] = coloring_map_json(*e.odd_coloring);
  j["colorings"] = std::move(colorings);
  return j;
}

Expansion expansion_from(const json& j) {
  Expansion e;
  std::tie(e.pattern, e.pattern_name) = pattern_from(j.at("pattern"));
  for (const auto& t : j.at("trees")) {
    e.trees.push_back(Tree{t.at("vertices").get<std::vector<Vertex>>(), edges_from(t.at("edges"))});
  }
  e.branch_edges = edges_from(j.at("branch_edges"));
  const json flags = j.value("flags", json::object());
  if (flags.value("rooted", false)) e.roots = j.at("roots").get<std::vector<Vertex>>();
  const json colorings = j.value("colorings", json::object());
  if (flags.value("bipartite", false)) e.bipartite_coloring = coloring_map_from(colorings.at("bipartite"));
  if (flags.value("odd", false)) e.odd_coloring = coloring_map_from(colorings.at("odd"));
  return e;
}

json linkage_body(const LinkageSpec& spec, const Linkage& l) {
  json j = header("linkage");
  json pairs = json::array();
  for (const auto& [s, t] : spec.pairs) pairs.push_back({s, t});
  j["pairs"] = std::move(pairs);
  j["parity"] = spec.parity ? json(*spec.parity) : json(nullptr);
  j["paths"] = l.paths;
  return j;
}

std::pair<LinkageSpec, Linkage> linkage_from(const json& j) {
  LinkageSpec spec;
  for (const auto& p : j.at("pairs")) {
    if (!p.is_array() || p.size() != 2) throw ParseError("terminal pair must have two entries", 0);
    spec.pairs.emplace_back(p[0].get<Vertex>(), p[1].get<Vertex>());
  }
  if (j.contains("parity") && !j.at("parity").is_null()) spec.parity = j.at("parity").get<std::vector<int>>();
  Linkage l{j.at("paths").get<std::vector<Path>>()};
  return {std::move(spec), std::move(l)};
}

json query_json(const WovenQuery& q) {
  json j{{"r", q.r}, {"s", q.s_terms}, {"t", q.t_terms}};
  j["j"] = q.j ? json(*q.j) : json(nullptr);
  j["i"] = q.i ? json(*q.i) : json(nullptr);
  return j;
}

WovenQuery query_from(const json& j) {
  WovenQuery q;
  q.r = j.at("r").get<std::vector<Vertex>>();
  q.s_terms = j.at("s").get<std::vector<Vertex>>();
  q.t_terms = j.at("t").get<std::vector<Vertex>>();
  if (j.contains("j") && !j.at("j").is_null()) q.j = j.at("j").get<std::vector<int>>();
  if (j.contains("i") && !j.at("i").is_null()) q.i = j.at("i").get<std::vector<int>>();
  return q;
}

}  // namespace

std::string to_json(const Model& m) { return model_body(m).dump(); }
std::string to_json(const Expansion& e) { return expansion_body(e).dump(); }

std::string to_json(const KstModel& m) {
  json j = header("kst_model");
  j["a_sets"] = m.a_sets;
  j["b_sets"] = m.b_sets;
  return j.dump();
}

std::string to_json(const LinkageSpec& spec, const Linkage& l) { return linkage_body(spec, l).dump(); }

std::string to_json(const WovenQuery& q, const WovenWitness& w) {
  json j = header("woven");
  j["query"] = query_json(q);
  if (w.model) j["model"] = model_body(*w.model);
  if (w.expansion) j["expansion"] = expansion_body(*w.expansion);
  LinkageSpec spec{q.pairs(), std::nullopt};
  if (q.parity()) spec.parity = q.i.value_or(std::vector<int>{});
  j["linkage"] = linkage_body(spec, w.linkage);
  return j.dump();
}

Model model_from_json(std::string_view text) {
  const json j = parse(text, "model");
  return guarded([&] { return model_from(j); });
}

Expansion expansion_from_json(std::string_view text) {
  const json j = parse(text, "expansion");
  return guarded([&] { return expansion_from(j); });
}

KstModel kst_model_from_json(std::string_view text) {
  const json j = parse(text, "kst_model");
  return guarded([&] {
    return KstModel{j.at("a_sets").get<std::vector<std::vector<Vertex>>>(),
                    j.at("b_sets").get<std::vector<std::vector<Vertex>>>()};
  });
}

std::pair<LinkageSpec, Linkage> linkage_from_json(std::string_view text) {
  const json j = parse(text, "linkage");
  return guarded([&] { return linkage_from(j); });
}

std::pair<WovenQuery, WovenWitness> woven_from_json(std::string_view text) {
  const json j = parse(text, "woven");
  return guarded([&] {
    WovenWitness w;
    if (j.contains("model")) w.model = model_from(j.at("model"));
    if (j.contains("expansion")) w.expansion = expansion_from(j.at("expansion"));
    w.linkage = linkage_from(j.at("linkage")).second;
    return std::pair{query_from(j.at("query")), std::move(w)};
  });
}

std::string lists_to_json(const ListAssignment& l) {
  json j = json::object();
  for (Vertex v = 0; v < l.order(); ++v) j[std::to_string(v)] = l.list(v);
  return j.dump();
}

ListAssignment lists_from_json(std::string_view text, int order) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  return guarded([&] {
    std::vector<std::vector<Color>> lists(static_cast<std::size_t>(order));
    std::vector<char> seen(static_cast<std::size_t>(order), 0);
    for (const auto& [k, v] : j.items()) {
      const int vertex = std::stoi(k);
      if (vertex < 0 || vertex >= order) throw ParseError("list for out-of-range vertex " + k, 0);
      lists[static_cast<std::size_t>(vertex)] = v.get<std::vector<Color>>();
      seen[static_cast<std::size_t>(vertex)] = 1;
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw ParseError("every vertex needs a list", 0);
    return ListAssignment(std::move(lists));
  });
}

std::string coloring_to_json(const Coloring& c) {
  json j = json::object();
  for (std::size_t v = 0; v < c.size(); ++v) j[std::to_string(v)] = c[v];
  return j.dump();
}

Coloring coloring_from_json(std::string_view text, int order) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  return guarded([&] {
    Coloring c(static_cast<std::size_t>(order), -1);
    for (const auto& [k, v] : j.items()) {
      const int vertex = std::stoi(k);
      if (vertex < 0 || vertex >= order) throw ParseError("colour for out-of-range vertex " + k, 0);
      c[static_cast<std::size_t>(vertex)] = v.get<Color>();
    }
    return c;
  });
}

std::string to_json(const ListAssignment& lists, const Coloring& c) {
  json j = header("list_coloring");
  j["lists"] = lists.lists();
  j["coloring"] = c;
  return j.dump();
}

std::pair<ListAssignment, Coloring> list_coloring_from_json(std::string_view text) {
  const json j = parse(text, "list_coloring");
  return guarded([&] {
    return std::pair{ListAssignment(j.at("lists").get<std::vector<std::vector<Color>>>()),
                     j.at("coloring").get<Coloring>()};
  });
}

std::string certificate_kind(std::string_view text) {
  const json j = parse(text, nullptr);
  return j.value("kind", std::string{});
}

Verdict verify_certificate_json(const Graph& g, std::string_view text) {
  const std::string kind = certificate_kind(text);
  if (kind == "model") return verify_model(g, model_from_json(text));
  if (kind == "expansion") return verify_expansion(g, expansion_from_json(text));
  if (kind == "kst_model") return verify_kst_model(g, kst_model_from_json(text));
  if (kind == "linkage") {
    const auto [spec, l] = linkage_from_json(text);
    return verify_linkage(g, spec, l);
  }
  if (kind == "woven") {
    const auto [q, w] = woven_from_json(text);
    return verify_woven_witness(g, q, w);
  }
  if (kind == "list_coloring") {
    const auto [lists, c] = list_coloring_from_json(text);
    if (lists.order() != g.order()) return Verdict::fail("list count mismatch");
    return verify_coloring(g, lists, c);
  }
  throw ParseError("unknown certificate kind '" + kind + "'", 0);
}

}  // namespace minorkit
