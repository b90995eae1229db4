#include <random>

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace pcf;

namespace {

void expect_proper_k(const graph& g, const coloring& phi, int k) {
  for (vertex v : g.vertices()) {
    ASSERT_TRUE(phi.has(v));
    EXPECT_GE(phi[v], 1);
    EXPECT_LE(phi[v], k);
  }
  EXPECT_TRUE(oracle::proper(g, phi.assignment()));
}

}  // namespace

TEST(Brooks, RegularGraphs) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    int r = 3 + static_cast<int>(seed % 4);
    int n = 2 * (r + 2 + static_cast<int>(seed % 9));
    auto g = gen::random_regular(n, r, seed);
    expect_proper_k(g, brooks_proper_color(g, r), r);
  }
}

TEST(Brooks, CutVerticesAndBlocks) {
  // Two K4 minus an edge glued at a vertex, plus a pendant path.
  graph g = graph_from_edges({{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5},
                              {4, 6}, {5, 6}, {6, 7}});
  expect_proper_k(g, brooks_proper_color(g, 4), 4);
  graph h = graph_from_edges({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}, {5, 6}, {6, 4}});
  EXPECT_THROW(brooks_proper_color(h, 3), error);
  h = h.without({0});
  expect_proper_k(h, brooks_proper_color(h, 3), 3);
}

TEST(Brooks, EvenCycleAndPaths) {
  expect_proper_k(gen::cycle(8), brooks_proper_color(gen::cycle(8), 2), 2);
  expect_proper_k(gen::path(5), brooks_proper_color(gen::path(5), 2), 2);
  EXPECT_THROW(brooks_proper_color(gen::cycle(7), 2), error);
}

TEST(Brooks, CompleteGraphsError) {
  for (int k = 2; k <= 6; ++k) {
    try {
      brooks_proper_color(gen::complete(k + 1), k);
      FAIL() << "K_" << k + 1;
    } catch (const error& e) {
      EXPECT_EQ(e.code(), errc::brooks_precondition);
    }
  }
}

TEST(Brooks, DegreeAboveKErrors) {
  EXPECT_THROW(brooks_proper_color(gen::complete(5), 3), error);
}

TEST(Brooks, KstarBaseGraphs) {
  for (int k = 4; k <= 8; ++k) {
    auto g = gen::complete(k);
    EXPECT_THROW(brooks_proper_color(g, k - 1), error);
    g = g.without({0});
    g.add_edge(1, 100);
    EXPECT_NO_THROW(brooks_proper_color(g, k - 1));
  }
}
