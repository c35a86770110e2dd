#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "mcx/mcx.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace mcx;
using testing_support::random_clean_graph;
using testing_support::random_permutation;

namespace {

Errc error_code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no mcx::Error thrown";
  return Errc::InvalidParameter;
}

}  // namespace

TEST(GraphConstruction, PathOfThreeVertices) {
  const Graph g = Graph::from_pairs(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(g.vertex_count(), 3);
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_FALSE(g.has_isolated_vertices());
}

TEST(GraphConstruction, RejectsLoopsDuplicatesAndRange) {
  EXPECT_EQ(error_code_of([] { Graph::from_pairs(2, {{0, 0}}); }), Errc::LoopEdge);
  EXPECT_EQ(error_code_of([] { Graph::from_pairs(4, {{0, 1}, {0, 1}}); }), Errc::DuplicateEdge);
  EXPECT_EQ(error_code_of([] { Graph::from_pairs(4, {{0, 1}, {1, 0}}); }), Errc::DuplicateEdge);
  EXPECT_EQ(error_code_of([] { Graph::from_pairs(2, {{0, 2}}); }), Errc::VertexOutOfRange);
}

TEST(GraphConstruction, EdgesSortedAndIsolatedFlag) {
  const Graph g = Graph::from_pairs(5, {{3, 2}, {1, 0}});
  ASSERT_EQ(g.edge_count(), 2);
  EXPECT_EQ(g.edge(0).u, 0);
  EXPECT_EQ(g.edge(0).v, 1);
  EXPECT_EQ(g.edge(1).u, 2);
  EXPECT_EQ(g.edge(1).v, 3);
  EXPECT_TRUE(g.has_isolated_vertices());
}

TEST(GraphFamilies, SizesAndParameterChecks) {
  EXPECT_EQ(banner().vertex_count(), 5);
  EXPECT_EQ(banner().edge_count(), 5);
  EXPECT_EQ(complete_bipartite(3, 2).edge_count(), 6);
  EXPECT_EQ(spider(4).vertex_count(), 9);
  EXPECT_EQ(spider(4).degree(0), 4);
  EXPECT_EQ(star(3).edge_count(), 3);
  EXPECT_EQ(cycle(7).edge_count(), 7);
  EXPECT_EQ(complete(4).edge_count(), 6);
  EXPECT_EQ(error_code_of([] { path(0); }), Errc::InvalidParameter);
  EXPECT_EQ(error_code_of([] { cycle(2); }), Errc::InvalidParameter);
  EXPECT_EQ(error_code_of([] { spider(1); }), Errc::InvalidParameter);
  EXPECT_EQ(error_code_of([] { complete_bipartite(0, 3); }), Errc::InvalidParameter);
}

TEST(GraphFamilies, SpiderTwoIsPathFive) { EXPECT_TRUE(isomorphic(spider(2), path(5))); }

TEST(DisjointUnion, OffsetsAndIdentity) {
  const Graph two = disjoint_union({path(3), path(3)});
  EXPECT_EQ(two.vertex_count(), 6);
  EXPECT_EQ(two.edge_count(), 4);
  const Graph none = disjoint_union(std::span<const Graph>{});
  EXPECT_EQ(none.vertex_count(), 0);
  const Graph pg = disjoint_union({path(2), banner()});
  EXPECT_EQ(pg.vertex_count(), 7);
  EXPECT_EQ(pg.edge_count(), 6);
}

TEST(Matchings, CompleteGraphFourHasTenMatchings) {
  EXPECT_EQ(enumerate_matchings(complete(4)).size(), 10u);
  EXPECT_EQ(oracle::matchings(complete(4).pairs()).size(), 10u);
}

TEST(Matchings, PathTwo) {
  const auto ms = enumerate_matchings(path(2));
  ASSERT_EQ(ms.size(), 2u);
  EXPECT_TRUE(ms[0].empty());
  EXPECT_EQ(ms[1].to_vector(), std::vector<int>{0});
}

TEST(Matchings, K43CountsBySize) {
  std::vector<int> by_size(5, 0);
  for (auto m : enumerate_matchings(complete_bipartite(4, 3))) ++by_size[static_cast<std::size_t>(m.size())];
  EXPECT_EQ(by_size, (std::vector<int>{1, 12, 36, 24, 0}));
  std::vector<int> oracle_size(5, 0);
  for (const auto& m : oracle::matchings(complete_bipartite(4, 3).pairs())) ++oracle_size[m.size()];
  EXPECT_EQ(by_size, oracle_size);
}

TEST(Matchings, OrderIsSizeThenLex) {
  const auto ms = enumerate_matchings(cycle(6));
  for (std::size_t i = 1; i < ms.size(); ++i) {
    const auto a = ms[i - 1].to_vector();
    const auto b = ms[i].to_vector();
    EXPECT_TRUE(a.size() < b.size() || (a.size() == b.size() && a < b));
  }
}

TEST(Matchings, AgreeWithBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 150; ++t) {
    const Graph g = random_clean_graph(rng, 8, 13);
    std::set<std::vector<int>> lib;
    for (auto m : enumerate_matchings(g)) lib.insert(m.to_vector());
    const auto brute = oracle::matchings(g.pairs());
    EXPECT_EQ(lib, std::set<std::vector<int>>(brute.begin(), brute.end())) << to_graph6(g);
    std::set<std::vector<int>> lib_max;
    for (auto m : maximal_matchings(g)) lib_max.insert(m.to_vector());
    const auto brute_max = oracle::maximal_matchings(g.pairs());
    EXPECT_EQ(lib_max, std::set<std::vector<int>>(brute_max.begin(), brute_max.end())) << to_graph6(g);
  }
}

TEST(Equimatchable, Examples) {
  EXPECT_TRUE(is_equimatchable(spider(3)));
  EXPECT_EQ(matching_number(spider(3)), 3);
  EXPECT_FALSE(is_equimatchable(path(4)));
  EXPECT_TRUE(is_equimatchable(complete_bipartite(3, 2)));
}

TEST(Equimatchable, MatchesPurity) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    const Graph g = random_clean_graph(rng);
    EXPECT_EQ(is_equimatchable(g), is_pure(matching_complex(g))) << to_graph6(g);
  }
}

TEST(SubgraphAvoiding, Examples) {
  const Graph c5 = cycle(5);
  EXPECT_TRUE(isomorphic(subgraph_avoiding(c5, Matching{0}).graph, path(3)));
  const Graph g = disjoint_union({path(3), Graph::from_pairs(1, {})});
  EXPECT_EQ(subgraph_avoiding(g, Matching{}).graph, path(3));
  const Graph k43 = complete_bipartite(4, 3);
  EXPECT_TRUE(isomorphic(subgraph_avoiding(k43, Matching{0}).graph, complete_bipartite(3, 2)));
  EXPECT_EQ(error_code_of([&] { subgraph_avoiding(path(3), Matching{0, 1}); }), Errc::NotAMatching);
}

TEST(SubgraphAvoiding, EdgeMapAndNonIncidence) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    const Graph g = random_clean_graph(rng);
    const Matching m = testing_support::random_matching(rng, g);
    const auto sub = subgraph_avoiding(g, m);
    const IndexSet covered = g.vertices_of(m);
    int kept = 0;
    for (int i = 0; i < g.edge_count(); ++i) {
      const bool avoid = !covered.contains(g.edge(i).u) && !covered.contains(g.edge(i).v);
      EXPECT_EQ(sub.edge_map[static_cast<std::size_t>(i)] >= 0, avoid);
      if (avoid) {
        EXPECT_EQ(sub.edge_map[static_cast<std::size_t>(i)], kept++);
      }
    }
    EXPECT_EQ(sub.graph.edge_count(), kept);
    EXPECT_FALSE(sub.graph.has_isolated_vertices());
  }
}

TEST(CanonicalForm, Examples) {
  EXPECT_EQ(canonical_form(spider(2)), canonical_form(path(5)));
  EXPECT_NE(canonical_form(star(3)), canonical_form(path(4)));
  const std::vector<int> perm{3, 5, 0, 2, 4, 1};
  EXPECT_EQ(canonical_form(cycle(6)), canonical_form(relabel(cycle(6), perm)));
  EXPECT_EQ(error_code_of([] { canonical_form(path(11)); }), Errc::TooLarge);
}

TEST(CanonicalForm, InvariantUnderRandomRelabelings) {
  std::mt19937_64 rng(14);
  const std::vector<Graph> graphs{complete_bipartite(4, 3), spider(3), cycle(7), banner(), copies(3, path(3)),
                                  complete(5), disjoint_union({cycle(5), path(3)})};
  for (const Graph& g : graphs) {
    const std::string base = canonical_form(g);
    for (int t = 0; t < 100; ++t) {
      EXPECT_EQ(canonical_form(relabel(g, random_permutation(rng, g.vertex_count()))), base) << to_graph6(g);
    }
  }
}

TEST(CanonicalForm, AgreesWithBruteForceIsomorphism) {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Graph a = testing_support::random_graph(rng, n, static_cast<int>(rng() % 9));
    const Graph b = testing_support::random_graph(rng, n, a.edge_count());
    const bool same = oracle::brute_canonical(n, a.pairs()) == oracle::brute_canonical(n, b.pairs());
    EXPECT_EQ(canonical_form(a) == canonical_form(b), same) << to_graph6(a) << " " << to_graph6(b);
  }
}

TEST(Components, Examples) {
  EXPECT_EQ(connected_components(copies(2, path(3))).components.size(), 2u);
  EXPECT_EQ(connected_components(cycle(7)).components.size(), 1u);
  const auto c = connected_components(disjoint_union({banner(), path(2)}));
  ASSERT_EQ(c.components.size(), 2u);
  EXPECT_EQ(c.components[0].edge_count(), 5);
  EXPECT_EQ(c.components[1].edge_count(), 1);
  const auto iso = connected_components(Graph::from_pairs(4, {{1, 2}}));
  EXPECT_EQ(iso.isolated_vertices, (std::vector<int>{0, 3}));
}

TEST(Graph6, RoundTripAndKnownStrings) {
  EXPECT_EQ(to_graph6(complete(4)), "C~");
  EXPECT_EQ(to_graph6(path(2)), "A_");
  EXPECT_EQ(from_graph6("C~"), complete(4));
  std::mt19937_64 rng(16);
  for (int t = 0; t < 100; ++t) {
    const Graph g = random_clean_graph(rng, 12, 20);
    EXPECT_EQ(from_graph6(to_graph6(g)), g);
  }
  EXPECT_EQ(error_code_of([] { from_graph6("C~~"); }), Errc::ParseError);
  EXPECT_EQ(error_code_of([] { from_graph6(""); }), Errc::ParseError);
}

TEST(EdgeList, ParseAndReportLineNumbers) {
  EXPECT_EQ(parse_edge_list("3 2\n0 1\n1 2\n"), path(3));
  EXPECT_EQ(parse_edge_list(to_edge_list(cycle(5))), cycle(5));
  try {
    parse_edge_list("3 2\n0 1\n1 x\n");
    FAIL() << "accepted a malformed line";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  EXPECT_EQ(error_code_of([] { parse_edge_list("3 1\n0 5\n"); }), Errc::ParseError);
  EXPECT_EQ(error_code_of([] { parse_edge_list("3 2\n0 1\n"); }), Errc::ParseError);
}
