#include <random>

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace pcf;

namespace {

void expect_all_vertices(const charge_ledger& ledger, const rational& q) {
  for (const auto& [e, charge] : ledger.final) {
    if (!e.is_face) EXPECT_EQ(charge, q) << e.str();
  }
}

}  // namespace

TEST(RuleSet, ParseAndName) {
  EXPECT_EQ(rule_set::parse("c4").name(), "c4");
  EXPECT_EQ(rule_set::parse("c6:9").name(), "c6:9");
  EXPECT_EQ(rule_set::parse("c6:9").bound(), rational(36, 11));
  EXPECT_TRUE(rule_set::parse("planar5").planar());
  EXPECT_THROW(rule_set::parse("c6:5"), error);
  EXPECT_THROW(rule_set::parse("c6:x"), error);
  EXPECT_THROW(rule_set::parse("c3"), error);
}

TEST(Discharge, KstarSixUnderC5) {
  auto g = gen::kstar(6);
  auto ledger = run(g, rule_set::c5());
  expect_all_vertices(ledger, rational(20, 7));
  auto rep = audit(g, rule_set::c5());
  EXPECT_TRUE(rep.conserved);
  EXPECT_TRUE(rep.all_at_bound);
  ASSERT_TRUE(rep.tight_structure.has_value());
  EXPECT_EQ(rep.tight_structure->second, 5);
  EXPECT_EQ(rep.tight_structure->first.vertex_count(), 6u);
  EXPECT_TRUE(rep.explained());
}

TEST(Discharge, KstarUnderC6Rules) {
  for (int c = 6; c <= 9; ++c) {
    auto g = gen::kstar(c + 1);
    auto rs = rule_set::c6plus(c);
    // A 2-vertex gains 2(c-2)/(c+2); a c-vertex loses c(c-2)/(c+2).
    expect_all_vertices(run(g, rs), rational(4 * c, c + 2));
    auto rep = audit(g, rs);
    ASSERT_TRUE(rep.tight_structure.has_value());
    EXPECT_EQ(rep.tight_structure->second, c);
  }
}

TEST(Discharge, FiveCycleUnderC4) {
  auto ledger = run(gen::cycle(5), rule_set::c4());
  expect_all_vertices(ledger, rational(2));
  EXPECT_TRUE(ledger.transfers.empty());
  auto rep = audit(gen::cycle(5), rule_set::c4());
  EXPECT_EQ(rep.cycle_components.size(), 1u);
  EXPECT_TRUE(rep.explained());
}

TEST(Discharge, C4ThreadShares) {
  // Theta with three 2-threads: each 2-vertex gets 1/5 from each end of its thread.
  graph g = graph_from_edges({{0, 2}, {2, 3}, {3, 1}, {0, 4}, {4, 5}, {5, 1}, {0, 6}, {6, 7}, {7, 1}});
  auto ledger = run(g, rule_set::c4());
  EXPECT_EQ(ledger.final.at(element::v(0)), rational(3) - rational(6, 5));
  EXPECT_EQ(ledger.final.at(element::v(2)), rational(12, 5));
}

TEST(Discharge, ConservationOnRandomGraphs) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = oracle::random_tree_plus(5 + trial % 30, trial % 12, rng);
    for (auto rs : {rule_set::c4(), rule_set::c5(), rule_set::c6plus(6), rule_set::c6plus(8)}) {
      auto ledger = run(g, rs);
      EXPECT_EQ(ledger.total_initial(), ledger.total_final());
      EXPECT_EQ(ledger.total_initial(), rational(2 * static_cast<std::int64_t>(g.edge_count())));
      rational net(0);
      for (const auto& t : ledger.transfers) {
        EXPECT_GT(t.amount, rational(0));
        EXPECT_FALSE(t.from == t.to);
      }
      for (const auto& [e, q] : ledger.final) net += q - ledger.initial.at(e);
      EXPECT_EQ(net, rational(0));
    }
  }
}

TEST(Discharge, AuditFindsConfigurationsNearDeficits) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = oracle::random_tree_plus(8 + trial % 20, 1 + trial % 5, rng);
    auto rep = audit(g, rule_set::c5());
    for (const auto& d : rep.deficient) {
      EXPECT_LT(d.charge, rep.bound);
    }
    EXPECT_TRUE(rep.explained()) << rep.to_lines();
  }
}

TEST(Planar5, InitialChargeSumsToMinusTwelve) {
  auto pg = gen::dodecahedron_plane();
  auto init = initial_charges(pg, rule_set::planar5());
  rational sum(0);
  for (const auto& [_, q] : init) sum += q;
  EXPECT_EQ(sum, rational(-12));
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto op = gen::random_outerplanar(6 + static_cast<int>(seed % 30), static_cast<int>(seed % 5), seed);
    auto ledger = run(op, rule_set::planar5());
    EXPECT_EQ(ledger.total_initial(), rational(-12));
    EXPECT_EQ(ledger.total_final(), rational(-12));
  }
}

TEST(Planar5, NeedsEmbeddingAndGirth) {
  EXPECT_THROW(run(gen::cycle(5), rule_set::planar5()), error);
  auto k4 = parse_plane_graph("0: 1 2 3\n1: 0 3 2\n2: 0 1 3\n3: 0 2 1\n");
  EXPECT_THROW(run(k4, rule_set::planar5()), error);
}

TEST(Planar5, DodecahedronHasNoTransfers) {
  auto ledger = run(gen::dodecahedron_plane(), rule_set::planar5());
  EXPECT_TRUE(ledger.transfers.empty());
  for (const auto& [e, q] : ledger.final) EXPECT_EQ(q, rational(e.is_face ? -1 : 0)) << e.str();
}

TEST(Planar5, SubdividedDodecahedronClassification) {
  auto pg = gen::one_subdivision(gen::dodecahedron_plane());
  auto pc = classify(pg);
  for (std::size_t f = 0; f < pg.faces().size(); ++f) {
    EXPECT_EQ(pg.faces()[f].length(), 10);
    EXPECT_FALSE(pc.faces[f].five);
    EXPECT_FALSE(pc.faces[f].terrible);
  }
  for (const auto& [v, vc] : pc.vertices) {
    EXPECT_FALSE(vc.bad);
    EXPECT_FALSE(vc.good);
  }
}

TEST(Planar5, TerribleFace) {
  // Pentagon 0..4 with 2-vertices 1 and 3; 0, 2 and 4 carry outside leaves.
  auto pg = parse_plane_graph(
      "0: 1 5 4\n"
      "1: 0 2\n"
      "2: 1 3 6\n"
      "3: 2 4\n"
      "4: 3 0 7\n"
      "5: 0\n"
      "6: 2\n"
      "7: 4\n");
  auto pc = classify(pg);
  int terrible = 0;
  for (std::size_t f = 0; f < pg.faces().size(); ++f) terrible += pc.faces[f].terrible;
  EXPECT_EQ(terrible, 1);
  EXPECT_EQ(pc.vertices.at(0).n2, 1);
}
