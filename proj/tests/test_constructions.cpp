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

#include <cmath>
#include <numeric>
#include <set>

#include "minorkit/constructions.hpp"
#include "minorkit/enumerate.hpp"
#include "minorkit/oracles.hpp"
#include "support.hpp"

namespace minorkit {
namespace {

using test::edges;

Expansion identity_expansion(const Graph& pattern, const std::string& name) {
  Model m;
  m.pattern = pattern;
  m.pattern_name = name;
  for (Vertex v = 0; v < pattern.order(); ++v) m.branch_sets.push_back({v});
  m.assignment.resize(static_cast<std::size_t>(pattern.order()));
  std::iota(m.assignment.begin(), m.assignment.end(), 0);
  return model_to_expansion(pattern, m);
}

TEST(Functions, Examples) {
  EXPECT_DOUBLE_EQ(eval_g(1), 1.0);
  ConstantsConfig cfg;
  cfg.c_newforced = 2.5;
  EXPECT_DOUBLE_EQ(eval_g(1, cfg), 2.5);
  EXPECT_LT(eval_g(2), eval_g(10));
  // 49 (1 + log(7 sqrt(log 3)))^6 evaluated at 30 digits.
  EXPECT_NEAR(eval_f(3), 35219.1584326904, 35219.1584326904 * 1e-12);
  EXPECT_THROW(eval_g(0.5), Error);
  EXPECT_THROW(eval_f(2), Error);
  EXPECT_NEAR(density_threshold(3), 3.2 * 3 * std::sqrt(std::log(3.0)), 1e-12);
  EXPECT_NEAR(bipartite_density_threshold(4), 7.0 * 4 * std::sqrt(std::log(4.0)), 1e-12);
}

TEST(Functions, GrowthAndBounds) {
  const FunctionTable table;
  double previous = table.g(1);
  for (double s = 1.25; s < 1e6; s *= 1.25) {
    EXPECT_GE(table.g(s), previous);
    previous = table.g(s);
  }
  for (double t = 3; t < 1e12; t *= 3) EXPECT_LE(table.f(t), table.f_upper_bound(t) * (1 + 1e-12)) << t;
  // f grows like (log log t)^6, so c log log t with c = 1 falls short.
  EXPECT_GT(table.f(1e6), table.smallconn_bound(1e6));
}

TEST(Majority, IdentityExpansionKeepsEverything) {
  const Graph k46 = complete_bipartite(4, 6);
  const Expansion e = identity_expansion(k46, "K_{4,6}");
  ASSERT_TRUE(verify_expansion(k46, e));
  const MajorityResult out = majority_bipartite_minor(k46, e, 4);
  EXPECT_EQ(out.removed, 0);
  EXPECT_EQ(out.legs, std::vector<int>(6, 4));
  ASSERT_TRUE(out.expansion.bipartite_coloring);
  EXPECT_TRUE(verify_expansion(k46, out.expansion));
}

// A-trees are the edges {0,1}, {2,3}, {4,5}, {6,7}; B-nodes 8 and 9 are
// singletons. Node 8 meets the even end of trees 0..2 and the odd end of tree
// 3; node 9 meets even ends of trees 0, 1 and odd ends of trees 2, 3.
TEST(Majority, MinorityLegsAreRemoved) {
  const Graph g = edges(10, {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 0}, {8, 2}, {8, 4}, {8, 7}, {9, 0}, {9, 2}, {9, 5}, {9, 7}});
  Expansion e;
  e.pattern = complete_bipartite(4, 2);
  e.pattern_name = "K_{4,2}";
  for (Vertex i = 0; i < 4; ++i) e.trees.push_back(Tree{{2 * i, 2 * i + 1}, {Edge(2 * i, 2 * i + 1)}});
  e.trees.push_back(Tree{{8}, {}});
  e.trees.push_back(Tree{{9}, {}});
  for (const Edge& pe : e.pattern.edges()) {
    const Vertex b = pe.v == 4 ? 8 : 9;
    for (Vertex w : e.trees[static_cast<std::size_t>(pe.u)].vertices) {
      if (g.has_edge(w, b)) e.branch_edges.emplace_back(w, b);
    }
  }
  ASSERT_TRUE(verify_expansion(g, e));
  const MajorityResult out = majority_bipartite_minor(g, e, 4);
  EXPECT_EQ(out.legs, (std::vector<int>{3, 2}));
  EXPECT_EQ(out.removed, 3);
  EXPECT_TRUE(verify_expansion(g, out.expansion));
  ASSERT_TRUE(out.expansion.bipartite_coloring);
  // Node 8 keeps the three legs that agree; the lone odd-end leg is dropped.
  for (const Edge& be : out.expansion.branch_edges) EXPECT_NE(be, Edge(7, 8));
}

TEST(Majority, BoundaryAEqualsTwo) {
  // Trees {0,1} and {2}; B-node 3 attaches to 0 and 2 with different values.
  const Graph g = edges(4, {{0, 1}, {0, 3}, {1, 2}, {2, 3}});
  Expansion e;
  e.pattern = complete_bipartite(2, 1);
  e.pattern_name = "K_{2,1}";
  e.trees = {Tree{{0, 1}, {Edge(0, 1)}}, Tree{{2}, {}}, Tree{{3}, {}}};
  e.branch_edges = {Edge(0, 3), Edge(2, 3), Edge(1, 2)};
  // Pattern edges of K_{2,1} are (0,2) and (1,2); the tree-0/tree-1 edge is not one.
  e.branch_edges = {Edge(0, 3), Edge(2, 3)};
  ASSERT_TRUE(verify_expansion(g, e));
  const MajorityResult out = majority_bipartite_minor(g, e, 2);
  EXPECT_GE(out.legs[0], 1);
  EXPECT_TRUE(verify_expansion(g, out.expansion));
  EXPECT_THROW(majority_bipartite_minor(complete_graph(3), e, 2), Error);
}

TEST(Majority, RandomExpansions) {
  Rng rng(404);
  for (int trial = 0; trial < 200; ++trial) {
    const int a = 2 + static_cast<int>(rng.below(4));
    const int b = 1 + static_cast<int>(rng.below(5));
    const auto [g, e] = test::random_kab_expansion(a, b, 4, 3, 5, rng);
    ASSERT_TRUE(verify_expansion(g, e));
    const MajorityResult out = majority_bipartite_minor(g, e, a);
    ASSERT_TRUE(verify_expansion(g, out.expansion)) << verify_expansion(g, out.expansion).clause;
    ASSERT_TRUE(out.expansion.bipartite_coloring);
    for (int legs : out.legs) ASSERT_GE(legs, (a + 1) / 2);
    ASSERT_EQ(std::accumulate(out.legs.begin(), out.legs.end(), 0) + out.removed, a * b);
  }
}

TEST(UnbalancedBound, Examples) {
  const std::vector<Vertex> a{0, 1, 2};
  const std::vector<Vertex> b{3, 4, 5};
  const UnbalancedBound k33 = check_unbalanced_bound(complete_bipartite(3, 3), a, b, 3, 1.0);
  EXPECT_EQ(k33.lhs, 9);
  EXPECT_NEAR(k33.rhs, 15.4333236657138, 1e-9);
  EXPECT_TRUE(k33.holds);
  const UnbalancedBound empty = check_unbalanced_bound(Graph(6), a, b, 3, 1e-9);
  EXPECT_EQ(empty.lhs, 0);
  EXPECT_TRUE(empty.holds);
  const std::vector<Vertex> bad{0, 3};
  const std::vector<Vertex> rest{1, 2, 4, 5};
  EXPECT_THROW(check_unbalanced_bound(complete_bipartite(3, 3), bad, rest, 3, 1.0), Error);
  EXPECT_THROW(check_unbalanced_bound(complete_bipartite(3, 3), a, b, 2, 1.0), Error);
  // 9 = c * 3 sqrt(log 3) * 3 + 6 at the minimal constant.
  EXPECT_NEAR(minimal_unbalanced_constant(complete_bipartite(3, 3), a, b, 3), 3 / (9 * std::sqrt(std::log(3.0))), 1e-12);
}

TEST(UnbalancedBound, ForestsNeedNoConstant) {
  // Bipartite graphs without a K_3 minor are forests, so e <= v - 1 <= (t-2) v.
  for (const Graph& g : all_graphs_up_to(7)) {
    const auto parts = bipartition(g);
    if (!parts || oracle::has_clique_minor(g, 3)) continue;
    ASSERT_EQ(minimal_unbalanced_constant(g, parts->a, parts->b, 3), 0.0);
    ASSERT_TRUE(check_unbalanced_bound(g, parts->a, parts->b, 3, 1e-6).holds);
  }
}

TEST(Logbip2, Examples) {
  const std::vector<Vertex> a4{0, 1, 2, 3};
  const std::vector<Vertex> b3{4, 5, 6};
  const auto k2 = logbip2_extract(complete_bipartite(4, 3), a4, b3, 2);
  ASSERT_TRUE(k2.found());
  EXPECT_TRUE(verify_model(complete_bipartite(4, 3), *k2.certificate));

  const int nb = static_cast<int>(std::ceil(std::log(3.0) * 6));
  const Graph k6b = complete_bipartite(6, nb);
  std::vector<Vertex> a6(6);
  std::iota(a6.begin(), a6.end(), 0);
  std::vector<Vertex> bb(static_cast<std::size_t>(nb));
  std::iota(bb.begin(), bb.end(), 6);
  const auto k3 = logbip2_extract(k6b, a6, bb, 3);
  ASSERT_TRUE(k3.found());
  EXPECT_TRUE(verify_model(k6b, *k3.certificate));

  try {
    logbip2_extract(complete_bipartite(4, 3), b3, a4, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "hypothesis not met");
  }
}

TEST(Mader, Examples) {
  const auto k6 = mader_extract(complete_graph(6), 3);
  ASSERT_TRUE(k6);
  EXPECT_EQ(k6->subgraph.graph.order(), 6);

  // Two K_5 on {0..4} and {4..8}.
  std::vector<Edge> e;
  for (Vertex base : {0, 4}) {
    for (Vertex u = 0; u < 5; ++u) {
      for (Vertex v = u + 1; v < 5; ++v) e.emplace_back(base + u, base + v);
    }
  }
  const Graph bowtie(9, e);
  const auto block = mader_extract(bowtie, 4);
  ASSERT_TRUE(block);
  EXPECT_EQ(block->subgraph.graph.order(), 5);
  EXPECT_EQ(vertex_connectivity(block->subgraph.graph), 4);
  EXPECT_EQ(block->kappa, 4);

  Rng rng(3);
  EXPECT_FALSE(mader_extract(random_tree(12, rng), 2));
}

TEST(Mader, MatchesBruteForceUpToSevenVertices) {
  for (const Graph& g : all_graphs_up_to(7)) {
    const ConnectedPiece best = brute_max_connectivity_subgraph(g);
    ASSERT_EQ(oracle::vertex_connectivity(best.subgraph.graph), best.kappa);
    const int lemma = static_cast<int>((density(g) / Rational(2)).ceil());
    if (is_connected(g)) {
      ASSERT_GE(best.kappa, lemma) << to_graph6(g);
    }
    for (int k = 1; k <= 4; ++k) {
      const auto piece = mader_extract(g, k);
      ASSERT_EQ(piece.has_value(), best.kappa >= k) << to_graph6(g) << " k=" << k;
      if (piece) {
        ASSERT_GE(oracle::vertex_connectivity(piece->subgraph.graph), k);
        ASSERT_EQ(piece->subgraph.graph, induced_subgraph(g, piece->subgraph.to_parent).graph);
      }
    }
  }
}

TEST(BruteConnectivity, Examples) {
  const ConnectedPiece c5 = brute_max_connectivity_subgraph(cycle_graph(5));
  EXPECT_EQ(c5.kappa, 2);
  EXPECT_EQ(c5.subgraph.graph.order(), 5);
  const ConnectedPiece k4 = brute_max_connectivity_subgraph(edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}}));
  EXPECT_EQ(k4.kappa, 3);
  EXPECT_EQ(k4.subgraph.to_parent, (std::vector<Vertex>{0, 1, 2, 3}));
  // Petersen minus a vertex: the three degree-2 vertices start a peeling
  // cascade, so nothing 3-connected survives.
  std::vector<Vertex> keep{1, 2, 3, 4, 5, 6, 7, 8, 9};
  const Graph p9 = induced_subgraph(petersen_graph(), keep).graph;
  EXPECT_EQ(brute_max_connectivity_subgraph(p9).kappa, 2);
  EXPECT_THROW(brute_max_connectivity_subgraph(complete_graph(11)), Error);
}

TEST(Railroad, Examples) {
  EXPECT_TRUE(verify_railroad(petersen_graph(), Railroad{}));
  Railroad many;
  for (Vertex v = 0; v < 19; ++v) many.inbound.push_back({v});
  EXPECT_EQ(verify_railroad(Graph(19), many).clause, "track count");

  // Vertex 0 sees five single-vertex inbound tracks; 4t = 4 is the limit.
  const Graph star = star_graph(5);
  Railroad hub;
  for (Vertex v = 1; v <= 5; ++v) hub.inbound.push_back({v});
  EXPECT_EQ(verify_railroad(star, hub).clause, "track incidence");
  hub.inbound.pop_back();
  EXPECT_TRUE(verify_railroad(star, hub));

  // Vertex 0 has four neighbours on the track 1-2-3-4.
  const Graph fan = edges(5, {{1, 2}, {2, 3}, {3, 4}, {0, 1}, {0, 2}, {0, 3}, {0, 4}});
  Railroad one{{}, {{1, 2, 3, 4}}, {}, 1, 1};
  EXPECT_EQ(verify_railroad(fan, one).clause, "track neighbors");
  one.stations = {0};
  EXPECT_TRUE(verify_railroad(fan, one));
  EXPECT_EQ(verify_railroad(fan, Railroad{{}, {{1, 3}}, {}, 1, 1}).clause, "track not a path");
  EXPECT_EQ(verify_railroad(fan, Railroad{{0}, {{1, 2}, {2, 3}}, {}, 1, 1}).clause, "tracks not disjoint");

  // K_98 split into single-vertex tracks is 97-degenerate, above 96t.
  Railroad dense{{}, {}, {}, 1, 6};
  for (Vertex v = 0; v < 98; ++v) dense.inbound.push_back({v});
  EXPECT_EQ(verify_railroad(complete_graph(98), dense).clause, "degeneracy");
}

TEST(Railroad, DeletingATrackCanExposeItsVertices) {
  // Single-vertex tracks {0}..{5} with 0 adjacent to the other five. Once
  // track {0} is gone, 0 is an outside vertex meeting 5 > 4t tracks.
  Railroad r;
  for (Vertex v = 0; v <= 5; ++v) r.inbound.push_back({v});
  const Graph star = star_graph(5);
  ASSERT_TRUE(verify_railroad(star, r));
  Railroad dropped = r;
  dropped.inbound.erase(dropped.inbound.begin());
  EXPECT_EQ(verify_railroad(star, dropped).clause, "track incidence");
  // Moving the dropped track's vertices into the stations keeps it valid.
  dropped.stations.push_back(0);
  EXPECT_TRUE(verify_railroad(star, dropped));
}

TEST(Railroad, DeletingATrackIntoStationsIsMonotone) {
  Rng rng(55);
  int valid = 0;
  for (const Graph& g : test::random_graphs(300, 8, 16, 0.25, 9)) {
    Railroad r;
    std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v = 0; v < g.order(); ++v) {
      if (used[static_cast<std::size_t>(v)] || rng.below(3) != 0) continue;
      Path p{v};
      used[static_cast<std::size_t>(v)] = 1;
      for (int step = 0; step < 3; ++step) {
        Vertex next = -1;
        for (Vertex w : g.neighbors(p.back())) {
          if (!used[static_cast<std::size_t>(w)]) next = w;
        }
        if (next < 0) break;
        used[static_cast<std::size_t>(next)] = 1;
        p.push_back(next);
      }
      (rng.below(2) ? r.inbound : r.outbound).push_back(p);
    }
    if (!verify_railroad(g, r)) continue;
    ++valid;
    for (std::size_t i = 0; i < r.inbound.size(); ++i) {
      Railroad smaller = r;
      smaller.stations.insert(smaller.stations.end(), r.inbound[i].begin(), r.inbound[i].end());
      smaller.inbound.erase(smaller.inbound.begin() + static_cast<std::ptrdiff_t>(i));
      ASSERT_TRUE(verify_railroad(g, smaller));
    }
  }
  EXPECT_GT(valid, 100);
}

TEST(NearBipartite, Examples) {
  const std::vector<Vertex> none;
  EXPECT_TRUE(check_near_bipartite_witness(path_graph(10), none, 1));
  EXPECT_FALSE(check_near_bipartite_witness(path_graph(9), none, 1));
  EXPECT_FALSE(check_near_bipartite_witness(cycle_graph(11), none, 1));
  // Triangle {0, 1, 2} hanging off vertex 2 of the path 2..12.
  std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}};
  for (Vertex v = 2; v < 12; ++v) e.emplace_back(v, v + 1);
  const Graph g(13, e);
  const std::vector<Vertex> x{2};
  EXPECT_TRUE(check_near_bipartite_witness(g, x, 1));
  EXPECT_FALSE(check_near_bipartite_witness(g, none, 1));
  const std::vector<Vertex> too_many{0, 1, 2, 3, 4, 5, 6};
  EXPECT_FALSE(check_near_bipartite_witness(g, too_many, 1));
}

TEST(NearBipartite, EmptyWitnessMeansBipartiteComponent) {
  for (const Graph& g : test::random_graphs(200, 10, 20, 0.12, 4)) {
    if (!check_near_bipartite_witness(g, {}, 1)) continue;
    bool found = false;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (Vertex s = 0; s < g.order(); ++s) {
      if (seen[static_cast<std::size_t>(s)]) continue;
      std::vector<Vertex> comp{s};
      seen[static_cast<std::size_t>(s)] = 1;
      for (std::size_t i = 0; i < comp.size(); ++i) {
        for (Vertex w : g.neighbors(comp[i])) {
          if (!seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = 1;
            comp.push_back(w);
          }
        }
      }
      if (comp.size() >= 10 && bipartition(induced_subgraph(g, comp).graph)) found = true;
    }
    EXPECT_TRUE(found);
  }
}

TEST(ColoringCore, Examples) {
  const ListAssignment l4 = ListAssignment::full_palette(5, 4);
  EXPECT_THROW(find_noncolorable_connected_core(complete_graph(5), l4, 1), Error);
  const ListAssignment l5 = ListAssignment::full_palette(6, 5);
  const auto k6 = find_noncolorable_connected_core(complete_graph(6), l5, 1);
  ASSERT_TRUE(k6);
  EXPECT_EQ(k6->subgraph.graph.order(), 6);
  EXPECT_EQ(k6->lists, l5);

  // Two triangles sharing vertex 2; lists [5] reduce to single colours.
  const Graph bowtie = edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  const auto core = find_noncolorable_connected_core(bowtie, ListAssignment::full_palette(5, 5), 1);
  ASSERT_TRUE(core);
  EXPECT_EQ(core->subgraph.graph.order(), 5);
  EXPECT_FALSE(is_list_colorable(core->subgraph.graph, core->lists));
  for (Vertex v = 0; v < 5; ++v) EXPECT_GE(static_cast<int>(core->lists.list(v).size()), 1);

  EXPECT_FALSE(find_noncolorable_connected_core(Graph(3), ListAssignment::full_palette(3, 5), 1));
  EXPECT_THROW(find_noncolorable_connected_core(complete_graph(9), ListAssignment::full_palette(9, 5), 1), Error);
}

TEST(ColoringCore, CoreOfEveryNonColourableGraph) {
  Rng rng(6);
  int cores = 0;
  for (const Graph& g : test::random_graphs(60, 3, 7, 0.6, 19)) {
    std::vector<std::vector<Color>> lists;
    for (int v = 0; v < g.order(); ++v) {
      std::vector<Color> l;
      for (Color c = 1; c <= 7; ++c) {
        if (l.size() < 5 && (rng.below(2) || 7 - c < 5 - static_cast<int>(l.size()))) l.push_back(c);
      }
      lists.push_back(l);
    }
    const ListAssignment l(lists);
    const auto core = find_noncolorable_connected_core(g, l, 1);
    if (is_list_colorable(g, l) && !core) continue;
    ASSERT_TRUE(core) << to_graph6(g);
    ++cores;
    const Subgraph& h = core->subgraph;
    ASSERT_GE(vertex_connectivity(h.graph), 1);
    ASSERT_FALSE(is_list_colorable(h.graph, core->lists));
    for (int v = 0; v < h.graph.order(); ++v) {
      const auto& full = l.list(h.to_parent[static_cast<std::size_t>(v)]);
      const auto& sub = core->lists.list(v);
      ASSERT_TRUE(std::includes(full.begin(), full.end(), sub.begin(), sub.end()));
      ASSERT_GE(static_cast<int>(sub.size()), static_cast<int>(full.size()) - 4);
    }
  }
  EXPECT_GT(cores, 20);
}

TEST(SmallConnCover, Examples) {
  // Two triangles and two isolated vertices, every list {1, 2}.
  const Graph two = edges(8, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  const ListAssignment l = ListAssignment::full_palette(8, 2);
  const SmallConnCover cover = small_conn_cover(two, l, 2, 3, 2);
  EXPECT_FALSE(cover.failed_stage);
  ASSERT_EQ(cover.parts.size(), 2u);
  std::set<std::vector<Vertex>> parts{cover.parts[0].to_parent, cover.parts[1].to_parent};
  EXPECT_EQ(parts, (std::set<std::vector<Vertex>>{{0, 1, 2}, {3, 4, 5}}));

  const Graph one = edges(8, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}});
  const SmallConnCover short_cover = small_conn_cover(one, l, 2, 3, 2);
  EXPECT_EQ(short_cover.failed_stage, std::optional<int>(2));
  EXPECT_EQ(short_cover.parts.size(), 1u);
  EXPECT_EQ(short_cover.reason, "residue is colourable");

  const SmallConnCover none = small_conn_cover(two, l, 2, 3, 0);
  EXPECT_TRUE(none.parts.empty());
  EXPECT_FALSE(none.failed_stage);
  try {
    small_conn_cover(two, l, 2, 2, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "threshold");
  }
}

}  // namespace
}  // namespace minorkit
