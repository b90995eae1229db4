#include <random>

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace pcf;

TEST(Girth, SmallFamilies) {
  EXPECT_FALSE(girth(gen::path(6)).has_value());
  EXPECT_EQ(girth(gen::cycle(7)), 7);
  EXPECT_EQ(girth(gen::complete(4)), 3);
  EXPECT_EQ(girth(gen::dodecahedron()), 5);
  EXPECT_EQ(girth(gen::kstar(5)), 6);
}

TEST(Girth, AgreesWithEdgeBfs) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = oracle::random_tree_plus(4 + trial % 14, 1 + trial % 4, rng);
    EXPECT_EQ(girth(g), oracle::girth(g)) << emit_graph(g);
  }
}

TEST(Threads, SubdividedEdgesAreOneThreads) {
  auto g = gen::kstar(4);
  auto ts = enumerate_threads(g);
  ASSERT_EQ(ts.size(), 6u);
  for (const auto& t : ts) {
    EXPECT_EQ(t.length(), 1);
    EXPECT_FALSE(t.is_cycle());
  }
}

TEST(Threads, CycleComponentIsACycleThread) {
  auto ts = enumerate_threads(gen::cycle(6));
  ASSERT_EQ(ts.size(), 1u);
  EXPECT_TRUE(ts[0].is_cycle());
  EXPECT_EQ(ts[0].length(), 6);
}

TEST(Threads, EveryTwoVertexOnExactlyOneThread) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = gen::one_subdivision(oracle::random_tree_plus(6 + trial % 6, 2, rng));
    std::map<vertex, int> seen;
    for (const auto& t : enumerate_threads(g)) {
      for (vertex v : t.path) ++seen[v];
    }
    for (vertex v : g.vertices()) EXPECT_EQ(seen[v], g.degree(v) == 2 ? 1 : 0);
  }
}

TEST(Kstar, FindsPlantedCopy) {
  auto g = gen::kstar(5);
  g.add_edge(100, 0);
  g.add_edge(100, 101);
  auto w = find_kstar_subgraph(g, 5);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->branch.size(), 5u);
  EXPECT_EQ(w->middles.size(), 10u);
  for (auto [a, b, m] : w->middles) {
    EXPECT_TRUE(g.has_edge(a, m));
    EXPECT_TRUE(g.has_edge(b, m));
  }
  EXPECT_FALSE(find_kstar_subgraph(g, 6).has_value());
}

TEST(Kstar, AgreesWithBacktracking) {
  std::mt19937_64 rng(21);
  int positives = 0;
  for (int trial = 0; trial < 150; ++trial) {
    graph base = oracle::random_tree_plus(4 + trial % 3, 3 + trial % 4, rng);
    graph g = gen::one_subdivision(base);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(g.vertex_count()) - 1);
    for (int extra = 0; extra < trial % 3; ++extra) {
      int u = pick(rng);
      int v = pick(rng);
      if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
    }
    for (int k = 3; k <= 5; ++k) {
      bool expected = oracle::has_kstar(g, k);
      positives += expected;
      EXPECT_EQ(find_kstar_subgraph(g, k).has_value(), expected) << "k=" << k << "\n" << emit_graph(g);
    }
  }
  EXPECT_GT(positives, 0);
}

TEST(InducedC5, AgreesWithSubsetSearch) {
  std::mt19937_64 rng(13);
  int positives = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto g = oracle::random_tree_plus(5 + trial % 6, 1 + trial % 4, rng);
    bool expected = oracle::has_induced_c5(g);
    positives += expected;
    auto found = find_induced_c5(g);
    ASSERT_EQ(found.has_value(), expected) << emit_graph(g);
    if (found) {
      vertex_set s(found->begin(), found->end());
      auto h = g.induced(s);
      EXPECT_EQ(h.edge_count(), 5u);
      for (int i = 0; i < 5; ++i) EXPECT_TRUE(g.has_edge((*found)[i], (*found)[(i + 1) % 5]));
    }
  }
  EXPECT_GT(positives, 0);
}

TEST(InducedC5, ChordKillsIt) {
  auto g = gen::cycle(5);
  EXPECT_TRUE(find_induced_c5(g).has_value());
  g.add_edge(0, 2);
  EXPECT_FALSE(find_induced_c5(g).has_value());
}

TEST(RegularSubdivision, RecognizesKstarAndPetersen) {
  auto rec = recognize_one_subdivision_of_regular(gen::kstar(6));
  ASSERT_TRUE(rec.has_value());
  EXPECT_EQ(rec->second, 5);
  EXPECT_EQ(rec->first.vertex_count(), 6u);
  EXPECT_EQ(rec->first.edge_count(), 15u);

  graph petersen = graph_from_edges({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                                     {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  auto rp = recognize_one_subdivision_of_regular(gen::one_subdivision(petersen));
  ASSERT_TRUE(rp.has_value());
  EXPECT_EQ(rp->second, 3);
}

TEST(RegularSubdivision, RejectsOthers) {
  EXPECT_FALSE(recognize_one_subdivision_of_regular(gen::cycle(8)).has_value());
  EXPECT_FALSE(recognize_one_subdivision_of_regular(gen::complete(4)).has_value());
  auto g = gen::kstar(5);
  g.add_edge(0, 1);
  EXPECT_FALSE(recognize_one_subdivision_of_regular(g).has_value());
  // Subdivision of an irregular graph.
  EXPECT_FALSE(recognize_one_subdivision_of_regular(gen::one_subdivision(gen::path(4))).has_value());
}

TEST(Forest, Detects) {
  EXPECT_TRUE(is_forest(gen::random_tree(40, 2)));
  EXPECT_FALSE(is_forest(gen::cycle(4)));
}
