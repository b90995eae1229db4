#include <random>

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace pcf;

TEST(Verify, AcceptsAndRejectsLikeTheDefinition) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    auto g = oracle::random_tree_plus(2 + trial % 7, trial % 3, rng);
    coloring phi(4);
    std::uniform_int_distribution<int> col(1, 4);
    for (vertex v : g.vertices()) phi.set(v, col(rng));
    EXPECT_EQ(!verify_pcf(g, phi).has_value(), oracle_pcf(g, phi)) << emit_graph(g);
  }
}

TEST(Verify, NamesTheViolation) {
  auto g = gen::path(3);
  coloring phi(3);
  phi.set(0, 1);
  phi.set(1, 2);
  phi.set(2, 1);
  auto bad = verify_pcf(g, phi);
  ASSERT_TRUE(bad.has_value());
  EXPECT_EQ(bad->describe(), "no-unique-color 1");
  phi.set(2, 2);
  EXPECT_EQ(verify_pcf(g, phi)->describe(), "improper-edge 1 2");
  phi.set(2, 7);
  EXPECT_EQ(verify_pcf(g, phi)->describe(), "color-out-of-range 2");
  phi.erase(2);
  EXPECT_THROW(verify_pcf(g, phi), error);
}

TEST(Verify, IsolatedVerticesAreExempt) {
  graph g;
  g.add_vertex(0);
  coloring phi(1);
  phi.set(0, 1);
  EXPECT_FALSE(verify_pcf(g, phi).has_value());
}

TEST(Exact, CycleValues) {
  for (int n = 3; n <= 12; ++n) {
    int expected = n == 5 ? 5 : (n % 3 == 0 ? 3 : 4);
    EXPECT_EQ(chi_pcf_exact(gen::cycle(n)), expected) << "n=" << n;
  }
}

TEST(Exact, AgreesWithExhaustiveAssignment) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 120; ++trial) {
    auto g = oracle::random_tree_plus(2 + trial % 6, trial % 4, rng);
    int chi = chi_pcf_exact(g);
    EXPECT_EQ(chi, oracle::chi_pcf(g)) << emit_graph(g);
    auto phi = pcf_color_exact(g, chi);
    ASSERT_TRUE(phi.has_value());
    EXPECT_TRUE(oracle_pcf(g, *phi));
    EXPECT_FALSE(pcf_color_exact(g, chi - 1).has_value());
  }
}

TEST(Exact, KstarLowerBounds) {
  EXPECT_FALSE(pcf_color_exact(gen::kstar(5), 4).has_value());
  EXPECT_TRUE(pcf_color_exact(gen::kstar(5), 5).has_value());
}

TEST(Exact, ThreadedMatchesSequential) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = oracle::random_tree_plus(6 + trial % 8, 2 + trial % 3, rng);
    exact_options par;
    par.threads = 3;
    for (int c = 2; c <= 5; ++c) {
      auto a = pcf_color_exact(g, c);
      auto b = pcf_color_exact(g, c, par);
      ASSERT_EQ(a.has_value(), b.has_value());
      if (a) EXPECT_EQ(*a, *b);
    }
  }
}

TEST(Exact, RefusesLargeInputs) {
  EXPECT_THROW(pcf_color_exact(gen::cycle(100), 4), error);
  exact_options big;
  big.max_vertices = 200;
  EXPECT_TRUE(pcf_color_exact(gen::cycle(30), 3, big).has_value());
}

TEST(Tree, ThreeColorsSuffice) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto t = gen::random_tree(1 + static_cast<int>(seed % 60), seed);
    auto phi = tree_pcf3(t);
    EXPECT_EQ(phi.palette(), 3);
    EXPECT_TRUE(oracle_pcf(t, phi)) << emit_graph(t);
  }
}

TEST(Tree, StarAndForest) {
  graph star;
  for (int i = 1; i <= 6; ++i) star.add_edge(0, i);
  star.add_edge(20, 21);
  star.add_vertex(30);
  EXPECT_TRUE(oracle_pcf(star, tree_pcf3(star)));
  EXPECT_THROW(tree_pcf3(gen::cycle(4)), error);
}
