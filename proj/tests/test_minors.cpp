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

#include <map>

#include "minorkit/enumerate.hpp"
#include "minorkit/minors.hpp"
#include "minorkit/oracles.hpp"
#include "support.hpp"

namespace minorkit {
namespace {

using test::edges;

Model petersen_k5() { return make_clique_model({{0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}}); }

Expansion singleton_expansion(const Graph& pattern) {
  Expansion e;
  e.pattern = pattern;
  for (Vertex v = 0; v < pattern.order(); ++v) e.trees.push_back(Tree{{v}, {}});
  e.branch_edges = pattern.edges();
  return e;
}

TEST(VerifyModel, Examples) {
  EXPECT_TRUE(verify_model(petersen_graph(), petersen_k5()));
  EXPECT_TRUE(verify_model(complete_graph(4), make_clique_model({{0}, {1}, {2}, {3}})));
  const Verdict v = verify_model(cycle_graph(5), make_clique_model({{0, 2}, {1}}));
  EXPECT_FALSE(v);
  EXPECT_EQ(v.clause, "branch set not connected");
  EXPECT_THROW(verify_model(cycle_graph(5), make_clique_model({{0, 7}})), Error);
}

TEST(VerifyModel, Clauses) {
  const Graph g = complete_graph(4);
  EXPECT_EQ(verify_model(g, make_clique_model({{0}, {0}})).clause, "branch sets not disjoint");
  EXPECT_EQ(verify_model(g, make_clique_model({{0}, {}})).clause, "empty branch set");
  EXPECT_EQ(verify_model(path_graph(3), make_clique_model({{0}, {2}})).clause, "branch sets not adjacent");
  Model m = make_clique_model({{0}, {1}});
  m.assignment = {0, 0};
  EXPECT_EQ(verify_model(g, m).clause, "assignment not a bijection");
}

TEST(VerifyModel, MonotoneUnderAddingEdges) {
  Rng rng(4);
  for (const Graph& g : test::random_graphs(80, 4, 9, 0.5, 19)) {
    const auto r = find_clique_minor(g, 3);
    if (!r.found()) continue;
    std::vector<Edge> more = g.edges();
    for (int i = 0; i < 4; ++i) {
      const Vertex u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(g.order())));
      const Vertex v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(g.order())));
      if (u != v) more.emplace_back(u, v);
    }
    EXPECT_TRUE(verify_model(Graph(g.order(), more), *r.certificate));
  }
}

TEST(VerifyExpansion, C4Flags) {
  const Graph c4 = cycle_graph(4);
  Expansion e = singleton_expansion(c4);
  e.bipartite_coloring = std::map<Vertex, int>{{0, 0}, {1, 1}, {2, 0}, {3, 1}};
  EXPECT_TRUE(verify_expansion(c4, e));

  Expansion odd = singleton_expansion(c4);
  odd.odd_coloring = std::map<Vertex, int>{{0, 0}, {1, 1}, {2, 0}, {3, 1}};
  const Verdict v = verify_expansion(c4, odd);
  EXPECT_FALSE(v);
  EXPECT_EQ(v.clause, "odd coloring: branch edge bichromatic");

  // Exhaustive over 2-colourings of the four singleton trees: only the two
  // constant colourings make every branch edge monochromatic.
  int accepted = 0;
  for (int mask = 0; mask < 16; ++mask) {
    std::map<Vertex, int> c;
    for (Vertex v2 = 0; v2 < 4; ++v2) c[v2] = (mask >> v2) & 1;
    odd.odd_coloring = c;
    accepted += verify_expansion(c4, odd).ok;
  }
  EXPECT_EQ(accepted, 2);
}

TEST(VerifyExpansion, RootsAndTrees) {
  const Graph g = path_graph(4);
  Expansion e;
  e.pattern = complete_graph(2);
  e.trees = {Tree{{0, 1}, {Edge(0, 1)}}, Tree{{2, 3}, {Edge(2, 3)}}};
  e.branch_edges = {Edge(1, 2)};
  EXPECT_TRUE(verify_expansion(g, e));
  e.roots = std::vector<Vertex>{0, 1};
  EXPECT_EQ(verify_expansion(g, e).clause, "root multiplicity");
  e.roots = std::vector<Vertex>{0, 3};
  EXPECT_TRUE(verify_expansion(g, e));
  e.roots = std::vector<Vertex>{0};
  EXPECT_EQ(verify_expansion(g, e).clause, "root count");
  e.roots.reset();
  e.branch_edges = {Edge(0, 1)};
  EXPECT_EQ(verify_expansion(g, e).clause, "branch edge misplaced");
  e.branch_edges = {Edge(1, 2)};
  e.trees[0].edges.clear();
  EXPECT_EQ(verify_expansion(g, e).clause, "node not a tree");
  e.trees[0] = Tree{{0, 9}, {}};
  EXPECT_THROW(verify_expansion(g, e), Error);
}

TEST(VerifyExpansion, FlagSoundness) {
  // Odd K_3 expansions only exist in non-bipartite graphs; accepted bipartite
  // expansions have a bipartite union.
  for (const Graph& g : all_graphs_up_to(6)) {
    const auto r = find_clique_minor(g, 3);
    if (!r.found()) continue;
    Expansion e = model_to_expansion(g, *r.certificate);
    ASSERT_TRUE(verify_expansion(g, e));
    const std::vector<Vertex> vs = expansion_vertices(e);
    std::vector<Edge> union_edges = e.branch_edges;
    for (const Tree& t : e.trees) union_edges.insert(union_edges.end(), t.edges.begin(), t.edges.end());
    const Graph union_graph(g.order(), union_edges);
    bool odd_accepted = false;
    for (int mask = 0; mask < (1 << vs.size()); ++mask) {
      std::map<Vertex, int> c;
      for (std::size_t i = 0; i < vs.size(); ++i) c[vs[i]] = (mask >> i) & 1;
      Expansion odd = e;
      odd.odd_coloring = c;
      odd_accepted = odd_accepted || verify_expansion(g, odd).ok;
      Expansion bip = e;
      bip.bipartite_coloring = c;
      if (verify_expansion(g, bip)) {
        EXPECT_TRUE(bipartition(union_graph).has_value());
      }
    }
    if (odd_accepted) {
      EXPECT_FALSE(bipartition(g).has_value());
    }
  }
}

TEST(FindCliqueMinor, Examples) {
  const auto p = find_clique_minor(petersen_graph(), 5);
  ASSERT_TRUE(p.found());
  EXPECT_TRUE(verify_model(petersen_graph(), *p.certificate));

  Rng rng(2);
  const auto tree = find_clique_minor(random_tree(15, rng), 3);
  EXPECT_EQ(tree.status, SearchStatus::proven_absent);
  EXPECT_FALSE(tree.certificate);

  const auto k6 = find_clique_minor(complete_graph(6), 6);
  ASSERT_TRUE(k6.found());
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(k6.certificate->branch_sets[i], std::vector<Vertex>{static_cast<Vertex>(i)});

  EXPECT_THROW(find_clique_minor(petersen_graph(), 3, 0), Error);
  EXPECT_THROW(find_clique_minor(petersen_graph(), 0), Error);
  EXPECT_EQ(find_clique_minor(petersen_graph(), 6, 10).status, SearchStatus::exhausted);
}

TEST(FindCliqueMinor, Deterministic) {
  for (const Graph& g : test::random_graphs(30, 6, 12, 0.5, 21)) {
    const auto a = find_clique_minor(g, 4);
    const auto b = find_clique_minor(g, 4);
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.nodes, b.nodes);
    if (a.found()) {
      EXPECT_EQ(a.certificate->branch_sets, b.certificate->branch_sets);
    }
  }
}

TEST(FindCliqueMinor, MatchesPartitionOracleUpToEightVertices) {
  for (const Graph& g : all_graphs_up_to(8)) {
    for (int t = 1; t <= 4; ++t) {
      const auto r = find_clique_minor(g, t);
      ASSERT_NE(r.status, SearchStatus::exhausted);
      ASSERT_EQ(r.found(), oracle::has_clique_minor(g, t)) << to_graph6(g) << " t=" << t;
      if (r.found()) {
        ASSERT_TRUE(verify_model(g, *r.certificate));
      }
    }
  }
}

TEST(FindBicliqueMinor, Examples) {
  const auto k23 = find_biclique_minor(complete_bipartite(2, 3), 2, 3);
  ASSERT_TRUE(k23.found());
  EXPECT_EQ(k23.certificate->a_sets, (std::vector<std::vector<Vertex>>{{0}, {1}}));
  EXPECT_EQ(k23.certificate->b_sets, (std::vector<std::vector<Vertex>>{{2}, {3}, {4}}));
  EXPECT_EQ(find_biclique_minor(star_graph(4), 2, 2).status, SearchStatus::proven_absent);
  const auto grid = find_biclique_minor(grid_graph(3, 3), 2, 2);
  ASSERT_TRUE(grid.found());
  EXPECT_TRUE(verify_kst_model(grid_graph(3, 3), *grid.certificate));
  EXPECT_THROW(find_biclique_minor(grid_graph(3, 3), 2, 2, -1), Error);
}

TEST(FindBicliqueMinor, MatchesOracle) {
  for (const Graph& g : all_graphs_up_to(6)) {
    for (auto [s, t] : {std::pair{1, 2}, std::pair{2, 2}, std::pair{2, 3}, std::pair{1, 4}}) {
      const auto r = find_biclique_minor(g, s, t);
      ASSERT_EQ(r.found(), oracle::has_minor(g, complete_bipartite(s, t))) << to_graph6(g) << " " << s << "," << t;
      if (r.found()) {
        ASSERT_TRUE(verify_kst_model(g, *r.certificate));
      }
    }
  }
}

TEST(BTangent, Examples) {
  const Graph g = Graph(3);
  KstModel m;
  m.b_sets = {{0}, {1}, {2}};
  const std::vector<Vertex> all{0, 1, 2};
  EXPECT_TRUE(check_b_tangent(g, m, all));
  const std::vector<Vertex> missing{0, 1};
  EXPECT_FALSE(check_b_tangent(g, m, missing));
  KstModel with_a;
  with_a.a_sets = {{0}};
  with_a.b_sets = {{1}, {2}};
  const std::vector<Vertex> touches_a{0, 1, 2};
  EXPECT_FALSE(check_b_tangent(complete_graph(3), with_a, touches_a));
  const std::vector<Vertex> good{1, 2};
  EXPECT_TRUE(check_b_tangent(complete_graph(3), with_a, good));
}

TEST(RootedCliqueModel, Examples) {
  const std::vector<Vertex> roots{0, 2};
  const auto c4 = find_rooted_clique_model(cycle_graph(4), roots, cycle_graph(4).all_mask());
  ASSERT_TRUE(c4.found());
  EXPECT_TRUE(verify_model(cycle_graph(4), *c4.certificate));
  EXPECT_EQ(c4.certificate->branch_sets[0].front(), 0);
  const std::vector<Vertex> leaves{1, 2, 3};
  EXPECT_EQ(find_rooted_clique_model(star_graph(3), leaves, star_graph(3).all_mask()).status,
            SearchStatus::proven_absent);
  // Forbidding the connecting vertices makes the C_4 query impossible.
  EXPECT_EQ(find_rooted_clique_model(cycle_graph(4), roots, bit(0) | bit(2)).status, SearchStatus::proven_absent);
}

TEST(DensityExtract, Examples) {
  const auto k10 = density_extract_minor(complete_graph(10), 4);
  ASSERT_TRUE(k10);
  EXPECT_TRUE(verify_model(complete_graph(10), *k10));
  Rng rng(6);
  EXPECT_FALSE(density_extract_minor(random_tree(20, rng), 3));
  for (const Graph& g : test::random_graphs(10, 30, 30, 0.9, 31)) {
    ASSERT_TRUE(find_clique_minor(g, 4).found());
    const auto m = density_extract_minor(g, 4);
    ASSERT_TRUE(m);
    EXPECT_TRUE(verify_model(g, *m));
  }
}

}  // namespace
}  // namespace minorkit

namespace minorkit {
namespace {

TEST(Oracles, CliquePartitionAgreesWithLabelling) {
  for (const Graph& g : all_graphs_up_to(6)) {
    for (int t = 1; t <= 5; ++t) {
      ASSERT_EQ(oracle::has_clique_minor(g, t), oracle::has_minor(g, complete_graph(t))) << to_graph6(g) << " t=" << t;
    }
  }
}

}  // namespace
}  // namespace minorkit
