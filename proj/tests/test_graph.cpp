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

#include <set>

#include "minorkit/enumerate.hpp"
#include "minorkit/formats.hpp"
#include "minorkit/generators.hpp"
#include "minorkit/oracles.hpp"
#include "minorkit/rational.hpp"
#include "support.hpp"

namespace minorkit {
namespace {

using test::edges;

TEST(Graph, RejectsLoopsAndDeduplicates) {
  EXPECT_THROW(edges(3, {{1, 1}}), Error);
  EXPECT_THROW(edges(3, {{0, 3}}), Error);
  const Graph g = edges(3, {{0, 1}, {1, 0}, {1, 2}});
  EXPECT_EQ(g.size(), 2u);
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(Density, Examples) {
  EXPECT_EQ(density(complete_graph(5)), Rational(2));
  EXPECT_EQ(density(complete_graph(2)), Rational(1, 2));
  EXPECT_EQ(density(cycle_graph(4)), Rational(1));
  try {
    density(Graph(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "density undefined");
  }
}

TEST(Degeneracy, Examples) {
  Rng rng(11);
  EXPECT_EQ(degeneracy(random_tree(12, rng)).d, 1);
  EXPECT_EQ(degeneracy(path_graph(2)).d, 1);
  EXPECT_EQ(degeneracy(complete_graph(5)).d, 4);
  EXPECT_EQ(degeneracy(petersen_graph()).d, 3);
  EXPECT_EQ(degeneracy(Graph(0)).d, 0);
}

TEST(Degeneracy, OrderWitnessAndGreedyColouring) {
  for (const Graph& g : all_graphs_up_to(6)) {
    const DegeneracyOrder o = degeneracy(g);
    EXPECT_EQ(o.d, oracle::degeneracy(g));
    std::vector<int> pos(static_cast<std::size_t>(g.order()));
    for (std::size_t i = 0; i < o.order.size(); ++i) pos[static_cast<std::size_t>(o.order[i])] = static_cast<int>(i);
    for (Vertex v = 0; v < g.order(); ++v) {
      int later = 0;
      for (Vertex w : g.neighbors(v)) later += pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)];
      EXPECT_LE(later, o.d);
    }
    const std::vector<int> c = greedy_color_by_degeneracy(g, o);
    for (const Edge& e : g.edges()) EXPECT_NE(c[static_cast<std::size_t>(e.u)], c[static_cast<std::size_t>(e.v)]);
    for (int col : c) {
      EXPECT_GE(col, 0);
      EXPECT_LE(col, o.d);
    }
  }
}

TEST(Connectivity, Examples) {
  EXPECT_EQ(vertex_connectivity(complete_graph(6)), 5);
  EXPECT_EQ(vertex_connectivity(path_graph(4)), 1);
  EXPECT_EQ(vertex_connectivity(petersen_graph()), 3);
  EXPECT_EQ(vertex_connectivity(Graph(1)), 0);
  EXPECT_EQ(vertex_connectivity(Graph(3)), 0);
}

TEST(Connectivity, MatchesOracleAndCutDisconnects) {
  for (const Graph& g : all_graphs_up_to(6)) {
    const int k = vertex_connectivity(g);
    EXPECT_EQ(k, oracle::vertex_connectivity(g));
    if (g.order() > 0) {
      EXPECT_LE(k, g.min_degree());
    }
    if (is_complete(g)) {
      EXPECT_EQ(k, g.order() - 1);
      continue;
    }
    const std::vector<Vertex> cut = minimum_vertex_cut(g);
    EXPECT_EQ(static_cast<int>(cut.size()), k);
    const VertexMask rest = g.all_mask() & ~vertices_to_mask(cut);
    const Subgraph h = induced_subgraph(g, rest);
    EXPECT_TRUE(h.graph.order() <= 1 || !is_connected(h.graph));
  }
}

TEST(Contract, Examples) {
  const Contraction c4 = contract_edges(cycle_graph(4), std::vector<Edge>{Edge(0, 1)});
  EXPECT_EQ(c4.graph.order(), 3);
  EXPECT_EQ(c4.graph.size(), 3u);
  EXPECT_EQ(c4.mapping[0], c4.mapping[1]);

  std::vector<Edge> spokes;
  for (Vertex i = 0; i < 5; ++i) spokes.emplace_back(i, i + 5);
  const Contraction k5 = contract_edges(petersen_graph(), spokes);
  EXPECT_EQ(k5.graph.order(), 5);
  EXPECT_TRUE(is_complete(k5.graph));

  const Graph p = petersen_graph();
  const Contraction id = contract_edges(p, std::vector<Edge>{});
  EXPECT_EQ(id.graph, p);

  EXPECT_THROW(contract_edges(cycle_graph(4), std::vector<Edge>{Edge(0, 2)}), Error);
}

TEST(Contract, SingleEdgeBookkeeping) {
  Rng rng(5);
  for (const Graph& g : test::random_graphs(200, 2, 12, 0.4, 77)) {
    if (g.size() == 0) continue;
    const Edge e = g.edges()[static_cast<std::size_t>(rng.below(g.size()))];
    const Contraction c = contract_edges(g, std::vector<Edge>{e});
    const int common = popcount(g.neighbor_mask(e.u) & g.neighbor_mask(e.v));
    EXPECT_EQ(c.graph.order(), g.order() - 1);
    EXPECT_EQ(c.graph.size(), g.size() - 1 - static_cast<std::size_t>(common));
    EXPECT_EQ(density(c.graph), Rational(static_cast<std::int64_t>(g.size()) - 1 - common, g.order() - 1));
  }
}

TEST(Bipartition, Examples) {
  const auto c6 = bipartition(cycle_graph(6));
  ASSERT_TRUE(c6);
  EXPECT_EQ(c6->a.size(), 3u);
  EXPECT_EQ(c6->b.size(), 3u);
  EXPECT_FALSE(bipartition(cycle_graph(5)));
  const auto empty = bipartition(Graph(4));
  ASSERT_TRUE(empty);
  EXPECT_EQ(empty->a, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_TRUE(empty->b.empty());
}

TEST(Formats, Graph6RoundTripAllFiveVertexGraphs) {
  for (const Graph& g : nonisomorphic_graphs(5)) {
    const std::string s = to_graph6(g);
    EXPECT_EQ(s.size(), 3u);
    EXPECT_EQ(s[0], 'D');
    EXPECT_EQ(from_graph6(s), g);
  }
  EXPECT_EQ(from_graph6("D?{").order(), 5);
}

TEST(Formats, RoundTripAllFormats) {
  for (const Graph& g : test::random_graphs(60, 0, 20, 0.3, 3)) {
    for (GraphFormat f : {GraphFormat::graph6, GraphFormat::edge_list, GraphFormat::dimacs}) {
      const std::string text = emit_graph(g, f);
      const ParseResult r = parse_graph(text, f);
      EXPECT_EQ(r.graph, g);
      EXPECT_TRUE(r.warnings.empty());
      EXPECT_EQ(emit_graph(r.graph, f), text);
    }
  }
}

TEST(Formats, DimacsTriangle) {
  const ParseResult r = parse_graph("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n", GraphFormat::dimacs);
  EXPECT_EQ(r.graph, cycle_graph(3));
}

TEST(Formats, EdgeListDuplicateWarns) {
  const ParseResult r = parse_graph("3 3\n0 1\n1 2\n1 0\n", GraphFormat::edge_list);
  EXPECT_EQ(r.graph.size(), 2u);
  EXPECT_EQ(r.warnings.size(), 1u);
}

TEST(Formats, ErrorsCarryByteOffsets) {
  try {
    parse_graph("3 1\n0 x\n", GraphFormat::edge_list);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 6u);
  }
  try {
    from_graph6("D?{!");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 3u);
  }
  EXPECT_THROW(parse_graph("p edge 2 1\ne 1 1\n", GraphFormat::dimacs), ParseError);
  EXPECT_THROW(parse_graph("p edge 2 1\ne 1 3\n", GraphFormat::dimacs), ParseError);
}

TEST(Formats, NamesAndExtensions) {
  EXPECT_EQ(parse_format_name("g6"), GraphFormat::graph6);
  EXPECT_EQ(parse_format_name("dimacs"), GraphFormat::dimacs);
  EXPECT_EQ(format_for_path("x/y.col"), GraphFormat::dimacs);
  EXPECT_EQ(format_for_path("a.g6"), GraphFormat::graph6);
  EXPECT_EQ(format_for_path("a.txt"), GraphFormat::edge_list);
  EXPECT_THROW(parse_format_name("png"), Error);
}

TEST(Generators, Structure) {
  EXPECT_EQ(grid_graph(3, 3).size(), 12u);
  const Graph p = petersen_graph();
  EXPECT_EQ(p.size(), 15u);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(p.degree(v), 3);
  // K_{3*2}: two parts of size 3, the complement of two disjoint triangles.
  const Graph m = complete_multipartite(3, 2);
  EXPECT_EQ(m.order(), 6);
  EXPECT_EQ(m.size(), 9u);
  EXPECT_TRUE(bipartition(m).has_value());
  EXPECT_EQ(blowup(cycle_graph(3), 2).size(), 12u);
  EXPECT_EQ(blowup(cycle_graph(3), 2, true).size(), 15u);
  EXPECT_EQ(named_graph("grid:2x3"), grid_graph(2, 3));
  EXPECT_EQ(named_graph("multipartite:3x2"), m);
  EXPECT_THROW(named_graph("nonsense"), Error);
}

TEST(Generators, SeededDeterminism) {
  Rng a(42);
  Rng b(42);
  EXPECT_EQ(gnp(20, 0.3, a), gnp(20, 0.3, b));
  const Rng root(1);
  EXPECT_NE(root.split(1).seed(), root.split(2).seed());
  Rng t(9);
  const Graph tree = random_tree(30, t);
  EXPECT_EQ(tree.size(), 29u);
  EXPECT_TRUE(is_connected(tree));
}

TEST(Enumerate, CountsMatchKnownSequence) {
  const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n < 8; ++n) EXPECT_EQ(nonisomorphic_graphs(n).size(), expected[static_cast<std::size_t>(n)]) << n;
}

TEST(Enumerate, CanonicalFormIsInvariant) {
  Rng rng(3);
  for (const Graph& g : test::random_graphs(50, 1, 10, 0.4, 8)) {
    std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<Vertex>(i);
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[static_cast<std::size_t>(rng.below(i))]);
    std::vector<Edge> es;
    for (const Edge& e : g.edges()) es.emplace_back(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
    EXPECT_EQ(canonical_graph6(g), canonical_graph6(Graph(g.order(), es)));
  }
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(7, 2).ceil(), 4);
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(-7, 2).ceil(), -3);
  EXPECT_EQ(Rational(3, -6).str(), "-1/2");
  EXPECT_THROW(Rational(1, 0), Error);
}

}  // namespace
}  // namespace minorkit
