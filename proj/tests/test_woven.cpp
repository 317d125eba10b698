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

#include <algorithm>
#include <set>

#include "minorkit/enumerate.hpp"
#include "minorkit/oracles.hpp"
#include "minorkit/woven.hpp"
#include "support.hpp"

namespace minorkit {
namespace {

std::set<Vertex> linkage_vertices(const Linkage& l) {
  std::set<Vertex> out;
  for (const Path& p : l.paths) out.insert(p.begin(), p.end());
  return out;
}

std::set<Vertex> model_vertices(const ComposeResult& c) {
  std::set<Vertex> out;
  if (c.model) {
    for (const auto& b : c.model->branch_sets) out.insert(b.begin(), b.end());
  }
  if (c.expansion) {
    for (const auto& t : c.expansion->trees) {
      for (Vertex v : t.vertices) out.insert(v);
    }
  }
  return out;
}

/// Containment guarantees of the composition, checked from scratch.
void expect_composition_ok(const Graph& g, const Subgraph& h, const LinkageSpec& spec, const Linkage& before,
                           const std::vector<Vertex>& r, const ComposeResult& out) {
  EXPECT_TRUE(verify_linkage(g, spec, out.linkage));
  std::set<Vertex> allowed = linkage_vertices(before);
  allowed.insert(h.to_parent.begin(), h.to_parent.end());
  const std::set<Vertex> after = linkage_vertices(out.linkage);
  for (Vertex v : after) EXPECT_TRUE(allowed.count(v)) << "vertex " << v << " outside V(H) and V(P)";
  const std::set<Vertex> old = linkage_vertices(before);
  for (Vertex v : model_vertices(out)) {
    if (!after.count(v)) continue;
    EXPECT_TRUE(std::find(r.begin(), r.end(), v) != r.end() && old.count(v)) << "shared vertex " << v;
  }
}

TEST(WovenQuery, Examples) {
  const WovenQuery k4{{0}, {1}, {2}, {}, {}};
  const auto found = answer_woven_query(complete_graph(4), k4);
  ASSERT_TRUE(found.found());
  EXPECT_TRUE(verify_woven_witness(complete_graph(4), k4, *found.certificate));

  const WovenQuery p3{{1}, {0}, {2}, {}, {}};
  EXPECT_EQ(answer_woven_query(path_graph(3), p3).status, SearchStatus::proven_absent);

  const auto empty = answer_woven_query(path_graph(3), WovenQuery{});
  ASSERT_TRUE(empty.found());
  EXPECT_TRUE(empty.certificate->linkage.paths.empty());

  EXPECT_THROW(answer_woven_query(path_graph(3), WovenQuery{{1, 1}, {}, {}, {}, {}}), Error);
  EXPECT_THROW(answer_woven_query(path_graph(3), WovenQuery{{}, {0}, {}, {}, {}}), Error);
}

TEST(WovenQuery, WitnessVerifierClauses) {
  const Graph g = complete_graph(4);
  const WovenQuery q{{0}, {1}, {2}, {}, {}};
  WovenWitness w;
  w.model = make_clique_model({{0}});
  w.linkage = Linkage{{{1, 2}}};
  EXPECT_TRUE(verify_woven_witness(g, q, w));
  w.model = make_clique_model({{0, 1}});
  EXPECT_EQ(verify_woven_witness(g, q, w).clause, "intersection");
  w.model = make_clique_model({{3}});
  EXPECT_EQ(verify_woven_witness(g, q, w).clause, "model roots");
  w.model = make_clique_model({{0}});
  w.linkage = Linkage{{{1, 0, 2}}};
  EXPECT_FALSE(verify_woven_witness(g, q, w));
}

TEST(IsWoven, Examples) {
  EXPECT_TRUE(is_woven(cycle_graph(4), 1, 1));
  EXPECT_FALSE(is_woven(path_graph(3), 1, 1));
  EXPECT_TRUE(is_woven(path_graph(4), 0, 0));
  EXPECT_TRUE(is_woven(complete_graph(4), 1, 1));
  EXPECT_TRUE(is_woven(path_graph(2), 3, 0));
  EXPECT_THROW(is_woven(complete_graph(9), 1, 1), Error);
}

TEST(IsWoven, CompleteGraphs) {
  for (int n = 1; n <= 6; ++n) {
    for (int a = 0; a <= 2; ++a) {
      for (int b = 0; b <= 2 && a + 2 * b <= n; ++b) {
        EXPECT_TRUE(is_woven(complete_graph(n), a, b)) << "K_" << n << " a=" << a << " b=" << b;
      }
    }
  }
}

TEST(IsWoven, MatchesOracleUpToSixVertices) {
  for (const Graph& g : all_graphs_up_to(6)) {
    for (int a = 0; a <= 2; ++a) {
      for (int b = 0; b <= 2; ++b) {
        ASSERT_EQ(is_woven(g, a, b), oracle::is_woven(g, a, b)) << to_graph6(g) << " a=" << a << " b=" << b;
      }
    }
  }
}

TEST(IsParityWoven, MatchesOracleUpToFiveVertices) {
  for (const Graph& g : all_graphs_up_to(5)) {
    for (int a = 0; a <= 2; ++a) {
      for (int b = 0; b <= 1; ++b) {
        ASSERT_EQ(is_parity_woven(g, a, b), oracle::is_parity_woven(g, a, b)) << to_graph6(g) << " a=" << a << " b=" << b;
      }
    }
  }
  EXPECT_FALSE(is_parity_woven(cycle_graph(4), 0, 1));
  EXPECT_TRUE(is_parity_woven(complete_graph(3), 0, 1));
}

TEST(Compose, DisjointLinkageIsUnchanged) {
  const Graph g = test::edges(7, {{0, 1}, {1, 2}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}});
  const std::vector<Vertex> clique{3, 4, 5, 6};
  const Subgraph h = induced_subgraph(g, clique);
  const LinkageSpec spec{{{0, 2}}, std::nullopt};
  const Linkage p{{{0, 1, 2}}};
  const std::vector<Vertex> r{4};
  const ComposeResult out = compose_through_woven(g, h, clique_oracle(4), spec.pairs, p, r);
  EXPECT_EQ(out.linkage.paths, p.paths);
  EXPECT_TRUE(out.rerouted.empty());
  ASSERT_TRUE(out.model);
  EXPECT_EQ(out.model->branch_sets, (std::vector<std::vector<Vertex>>{{4}}));

  const std::vector<int> odd{};
  const std::vector<int> j{0};
  const ComposeResult par = compose_through_parity_woven(g, h, clique_oracle(4), spec.pairs, odd, p, r, j);
  EXPECT_EQ(par.linkage.paths, p.paths);
}

// Pendant 0 - K_4 on {2, 3, 4, 5} - pendant 6.
Graph single_crossing() {
  return test::edges(7, {{0, 2}, {5, 6}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
}

TEST(Compose, SinglePathThroughClique) {
  const Graph g = single_crossing();
  const std::vector<Vertex> clique{2, 3, 4, 5};
  const Subgraph h = induced_subgraph(g, clique);
  const LinkageSpec spec{{{0, 6}}, std::nullopt};
  const Linkage p{{{0, 2, 3, 4, 5, 6}}};
  const std::vector<Vertex> r{3};
  const ComposeResult out = compose_through_woven(g, h, clique_oracle(4), spec.pairs, p, r);
  EXPECT_EQ(out.rerouted, (std::vector<int>{0}));
  ASSERT_TRUE(out.model);
  EXPECT_EQ(out.model->branch_sets, (std::vector<std::vector<Vertex>>{{3}}));
  EXPECT_EQ(out.linkage.paths, (std::vector<Path>{{0, 2, 5, 6}}));
  expect_composition_ok(g, h, spec, p, r, out);

  // The brute-force oracle on the same subgraph gives a valid result too.
  const ComposeResult brute = compose_through_woven(g, h, brute_force_oracle(h.graph), spec.pairs, p, r);
  expect_composition_ok(g, h, spec, p, r, brute);
}

TEST(Compose, TwoPathsThroughClique) {
  // K_5 on {2..6}; pendants 0-2, 1-3, 7-4, 8-5.
  std::vector<Edge> e{{0, 2}, {1, 3}, {7, 4}, {8, 5}};
  for (Vertex u = 2; u <= 6; ++u) {
    for (Vertex v = u + 1; v <= 6; ++v) e.emplace_back(u, v);
  }
  const Graph g(9, e);
  const std::vector<Vertex> clique{2, 3, 4, 5, 6};
  const Subgraph h = induced_subgraph(g, clique);
  const LinkageSpec spec{{{0, 7}, {1, 8}}, std::nullopt};
  const Linkage p{{{0, 2, 6, 4, 7}, {1, 3, 5, 8}}};
  ASSERT_TRUE(verify_linkage(g, spec, p));
  const std::vector<Vertex> r{6};
  const ComposeResult out = compose_through_woven(g, h, clique_oracle(5), spec.pairs, p, r);
  EXPECT_EQ(out.rerouted, (std::vector<int>{0, 1}));
  EXPECT_EQ(out.inner_query.s_terms.size(), 2u);
  expect_composition_ok(g, h, spec, p, r, out);
}

TEST(Compose, ParityIsPreserved) {
  const Graph g = single_crossing();
  const std::vector<Vertex> clique{2, 3, 4, 5};
  const Subgraph h = induced_subgraph(g, clique);
  const LinkageSpec spec{{{0, 6}}, std::vector<int>{0}};
  const Linkage p{{{0, 2, 3, 4, 5, 6}}};
  ASSERT_TRUE(verify_linkage(g, spec, p));
  const std::vector<int> odd{0};
  const std::vector<Vertex> r{3};
  for (const std::vector<int>& j : {std::vector<int>{}, std::vector<int>{0}}) {
    const ComposeResult out = compose_through_parity_woven(g, h, clique_oracle(4), spec.pairs, odd, p, r, j);
    // The middle segment 2..5 has three edges, so the inner query asks for odd.
    ASSERT_TRUE(out.inner_query.i);
    EXPECT_EQ(*out.inner_query.i, (std::vector<int>{0}));
    ASSERT_EQ(out.linkage.paths.size(), 1u);
    EXPECT_EQ(path_length(out.linkage.paths[0]) % 2, 1);
    ASSERT_TRUE(out.expansion);
    ASSERT_TRUE(out.expansion->bipartite_coloring);
    EXPECT_TRUE(verify_expansion(g, *out.expansion));
    EXPECT_EQ(out.expansion->bipartite_coloring->at(3), j.empty() ? 1 : 0);
    expect_composition_ok(g, h, spec, p, r, out);
  }
}

TEST(Compose, EvenMiddleSegment) {
  const Graph g = single_crossing();
  const std::vector<Vertex> clique{2, 3, 4, 5};
  const Subgraph h = induced_subgraph(g, clique);
  const LinkageSpec spec{{{0, 6}}, std::vector<int>{}};
  const Linkage p{{{0, 2, 3, 5, 6}}};
  const std::vector<int> odd{};
  const std::vector<Vertex> r{4};
  const std::vector<int> j{};
  const ComposeResult out = compose_through_parity_woven(g, h, clique_oracle(4), spec.pairs, odd, p, r, j);
  ASSERT_TRUE(out.inner_query.i);
  EXPECT_TRUE(out.inner_query.i->empty());
  EXPECT_EQ(path_length(out.linkage.paths[0]) % 2, 0);
  expect_composition_ok(g, h, spec, p, r, out);
}

}  // namespace
}  // namespace minorkit
