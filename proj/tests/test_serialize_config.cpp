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

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "minorkit/config.hpp"
#include "minorkit/constructions.hpp"
#include "minorkit/serialize.hpp"
#include "support.hpp"

namespace minorkit {
namespace {

TEST(Certificates, ModelRoundTrip) {
  const Graph p = petersen_graph();
  const auto m = find_clique_minor(p, 5);
  ASSERT_TRUE(m.found());
  const std::string text = to_json(*m.certificate);
  EXPECT_EQ(certificate_kind(text), "model");
  const Model back = model_from_json(text);
  EXPECT_EQ(back.branch_sets, m.certificate->branch_sets);
  EXPECT_EQ(back.assignment, m.certificate->assignment);
  EXPECT_EQ(back.pattern, m.certificate->pattern);
  EXPECT_EQ(to_json(back), text);
  EXPECT_TRUE(verify_certificate_json(p, text));
  EXPECT_FALSE(verify_certificate_json(cycle_graph(10), text));
}

TEST(Certificates, ExpansionRoundTrip) {
  Rng rng(1);
  const auto [g, e] = test::random_kab_expansion(4, 3, 3, 2, 2, rng);
  const MajorityResult out = majority_bipartite_minor(g, e, 4);
  const std::string text = to_json(out.expansion);
  const Expansion back = expansion_from_json(text);
  EXPECT_EQ(back.bipartite_coloring, out.expansion.bipartite_coloring);
  EXPECT_EQ(back.branch_edges, out.expansion.branch_edges);
  EXPECT_EQ(to_json(back), text);
  EXPECT_TRUE(verify_certificate_json(g, text));
}

TEST(Certificates, KstLinkageWovenListsRoundTrip) {
  const auto kst = find_biclique_minor(grid_graph(3, 3), 2, 2);
  ASSERT_TRUE(kst.found());
  const std::string kst_text = to_json(*kst.certificate);
  EXPECT_EQ(to_json(kst_model_from_json(kst_text)), kst_text);
  EXPECT_TRUE(verify_certificate_json(grid_graph(3, 3), kst_text));

  const LinkageSpec spec{{{0, 3}, {1, 1}}, std::vector<int>{0}};
  const auto l = find_linkage(complete_graph(5), spec);
  ASSERT_TRUE(l.found());
  const std::string l_text = to_json(spec, *l.certificate);
  const auto [spec2, l2] = linkage_from_json(l_text);
  EXPECT_EQ(spec2.pairs, spec.pairs);
  EXPECT_EQ(spec2.parity, spec.parity);
  EXPECT_EQ(l2.paths, l.certificate->paths);
  EXPECT_TRUE(verify_certificate_json(complete_graph(5), l_text));

  const WovenQuery q{{0}, {1}, {2}, {}, {}};
  const auto w = answer_woven_query(complete_graph(4), q);
  ASSERT_TRUE(w.found());
  const std::string w_text = to_json(q, *w.certificate);
  EXPECT_EQ(certificate_kind(w_text), "woven");
  const auto [q2, w2] = woven_from_json(w_text);
  EXPECT_EQ(to_json(q2, w2), w_text);
  EXPECT_TRUE(verify_certificate_json(complete_graph(4), w_text));

  const ListAssignment lists({{1, 2}, {2, 3}, {1}});
  EXPECT_EQ(lists_from_json(lists_to_json(lists), 3), lists);
  EXPECT_EQ(lists_to_json(lists), R"({"0":[1,2],"1":[2,3],"2":[1]})");
  const Coloring c{2, 3, 1};
  EXPECT_EQ(coloring_from_json(coloring_to_json(c), 3), c);
  EXPECT_THROW(lists_from_json(R"({"0":[1]})", 2), ParseError);
  EXPECT_THROW(coloring_from_json(R"({"5":1})", 2), ParseError);
}

TEST(Certificates, ListColoring) {
  const ListAssignment lists({{1, 2}, {2}, {1, 3}});
  const Coloring c{1, 2, 3};
  const std::string text = to_json(lists, c);
  EXPECT_EQ(certificate_kind(text), "list_coloring");
  const auto [l2, c2] = list_coloring_from_json(text);
  EXPECT_EQ(l2, lists);
  EXPECT_EQ(c2, c);
  EXPECT_TRUE(verify_certificate_json(complete_graph(3), text));
  EXPECT_EQ(verify_certificate_json(complete_graph(3), to_json(lists, Coloring{2, 2, 3})).clause, "improper edge");
  EXPECT_EQ(verify_certificate_json(complete_graph(4), text).clause, "list count mismatch");
}

TEST(Certificates, TamperingIsDetected) {
  const LinkageSpec spec{{{0, 2}}, std::nullopt};
  const std::string good = to_json(spec, Linkage{{{0, 1, 2}}});
  EXPECT_TRUE(verify_certificate_json(path_graph(3), good));
  const std::string bad = to_json(spec, Linkage{{{0, 2}}});
  EXPECT_FALSE(verify_certificate_json(path_graph(3), bad));
}

TEST(Certificates, MalformedInput) {
  try {
    certificate_kind("{\"schema\": 1, \"kind\": ");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_GT(e.offset(), 0u);
  }
  EXPECT_THROW(certificate_kind("[1, 2]"), ParseError);
  EXPECT_THROW(certificate_kind(R"({"schema": 2, "kind": "model"})"), ParseError);
  EXPECT_THROW(verify_certificate_json(path_graph(2), R"({"schema": 1, "kind": "mystery"})"), ParseError);
  EXPECT_THROW(model_from_json(R"({"schema": 1, "kind": "linkage"})"), ParseError);
  EXPECT_THROW(model_from_json(R"({"schema": 1, "kind": "model"})"), ParseError);
}

TEST(Config, DefaultsAndEntries) {
  const ConstantsConfig cfg;
  EXPECT_EQ(cfg.c_density, 3.2);
  EXPECT_EQ(cfg.c_bipartitedensity, 7.0);
  EXPECT_EQ(cfg.c_logbip, 1.0);
  const auto entries = cfg.entries();
  ASSERT_EQ(entries.size(), 15u);
  EXPECT_EQ(entries.front().first, "c_newforced");
  EXPECT_NO_THROW(cfg.validate());
}

TEST(Config, ParseAndRoundTrip) {
  const ConstantsConfig cfg = ConstantsConfig::parse("# tuned\n\nc_logbip = 0.5\n  c_woven=3   # inline\n");
  EXPECT_EQ(cfg.c_logbip, 0.5);
  EXPECT_EQ(cfg.c_woven, 3.0);
  EXPECT_EQ(cfg.c_linked, 1.0);
  EXPECT_EQ(ConstantsConfig::parse(cfg.to_text()), cfg);
}

TEST(Config, Errors) {
  auto message = [](std::string_view text) {
    try {
      ConstantsConfig::parse(text);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_EQ(message("c_nope = 1"), "config line 1: unknown constant 'c_nope'");
  EXPECT_EQ(message("c_woven = 1\nc_woven = 2"), "config line 2: duplicate constant 'c_woven'");
  EXPECT_EQ(message("c_woven = 1x"), "config line 1: malformed number '1x'");
  EXPECT_EQ(message("c_woven"), "config line 1: expected name = value");
  EXPECT_EQ(message("c_woven = -1"), "constant c_woven must be positive");
  EXPECT_EQ(message("c_woven = nan"), "constant c_woven must be positive");
  EXPECT_THROW(ConstantsConfig::load("/nonexistent/minorkit.cfg"), Error);
}

TEST(Config, LoadFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "minorkit_test_config.cfg";
  {
    std::ofstream out(path);
    out << "c_density = 4\n";
  }
  EXPECT_EQ(ConstantsConfig::load(path).c_density, 4.0);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace minorkit
