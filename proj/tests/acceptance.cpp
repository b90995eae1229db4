// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pcf/pcf.hpp"

using namespace pcf;

namespace {

struct outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(const std::string& what) {
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

bool checked_pcf(const graph& g, const coloring& phi) {
  return !verify_pcf(g, phi) && oracle::is_pcf(g, phi.assignment(), phi.palette());
}

// Every graph seen by criteria 3, 4 and 7, reused for the conservation check.
std::vector<graph> corpus;
std::vector<plane_graph> plane_corpus;

outcome threshold_identity() {
  outcome o;
  for (int c = 4; c <= 8; ++c) {
    auto m = mad_exact(gen::kstar(c + 1)).value;
    if (m != rational(4 * c, c + 2)) o.fail("c=" + std::to_string(c) + " got " + to_string(m));
  }
  // Subset enumeration for the small cases.
  for (int k = 3; k <= 5; ++k) {
    auto f = oracle::mad(gen::kstar(k));
    if (mad_exact(gen::kstar(k)).value != rational(f.num, f.den)) o.fail("oracle k=" + std::to_string(k));
  }
  o.detail = "mad(K*_{c+1}) = 4c/(c+2) for c = 4..8";
  return o;
}

outcome oracle_landmarks() {
  outcome o;
  auto expect = [&](const std::string& name, const graph& g, int want) {
    int got = chi_pcf_exact(g);
    if (got != want) o.fail(name + " gave " + std::to_string(got));
  };
  expect("C5", gen::cycle(5), 5);
  expect("C6", gen::cycle(6), 3);
  expect("C7", gen::cycle(7), 4);
  expect("C8", gen::cycle(8), 4);
  expect("K*_5", gen::kstar(5), 5);
  for (int n : {7, 8}) {
    if (oracle::chi_pcf(gen::cycle(n)) != 4) o.fail("brute force C" + std::to_string(n));
  }
  for (int n = 4; n <= 16; ++n) {
    bool three = chi_pcf_exact(gen::cycle(n)) == 3;
    if (three != (n % 3 == 0)) o.fail("C" + std::to_string(n));
  }
  o.detail = "C5..C8, K*_5 and C4..C16";
  return o;
}

outcome small_graphs_c4() {
  outcome o;
  std::size_t tested = 0;
  auto consider = [&](const graph& g) {
    if (!oracle::connected(g)) return;
    auto m = oracle::mad(g);
    if (!(m < oracle::fraction{12, 5})) return;
    if (oracle::has_induced_c5(g)) return;
    ++tested;
    if (tested % 4 == 0) corpus.push_back(g);
    try {
      auto r = color(g, 4);
      if (!checked_pcf(g, r.phi)) o.fail("color output rejected:\n" + emit_graph(g));
    } catch (const std::exception& e) {
      o.fail(std::string(e.what()) + "\n" + emit_graph(g));
    }
    if (!pcf_color_exact(g, 4)) o.fail("exact found none:\n" + emit_graph(g));
  };
  for (int n = 1; n <= 6; ++n) oracle::for_each_labeled_graph(n, consider);
  std::size_t exhaustive = tested;
  std::mt19937_64 rng(2024);
  while (tested < exhaustive + 6000) {
    int n = 7 + static_cast<int>(rng() % 3);
    consider(oracle::random_tree_plus(n, static_cast<int>(rng() % 4), rng));
  }
  o.detail = std::to_string(tested) + " graphs (" + std::to_string(exhaustive) +
             " labeled graphs on <= 6 vertices, the rest random on 7..9)";
  if (tested < 10000) o.fail("only " + std::to_string(tested) + " graphs");
  return o;
}

graph sparse_instance(int c, std::mt19937_64& rng) {
  const rational cap = kstar_threshold(c);
  for (;;) {
    graph g;
    switch (rng() % 3) {
      case 0:
        g = gen::random_sparse(10 + static_cast<int>(rng() % 51), cap, rng());
        break;
      case 1: {
        // 1-subdivision of a graph of maximum degree <= c.
        int n = 4 + static_cast<int>(rng() % 12);
        graph h;
        for (int i = 0; i < n; ++i) h.add_vertex(i);
        for (int t = 0; t < 4 * n; ++t) {
          int u = static_cast<int>(rng() % n);
          int v = static_cast<int>(rng() % n);
          if (u != v && !h.has_edge(u, v) && h.degree(u) < c && h.degree(v) < c) h.add_edge(u, v);
        }
        g = gen::one_subdivision(h);
        break;
      }
      default: {
        // A tight subdivision with some threads cut and pendant trees.
        int n = c + 2 + static_cast<int>(rng() % 3);
        if (n * c % 2) ++n;
        g = gen::one_subdivision(gen::random_regular(n, c, rng()));
        auto vs = g.vertices();
        for (int t = 0; t < 3; ++t) g = g.without({vs[rng() % vs.size()]});
        vertex next = g.max_id() + 1;
        for (int t = 0; t < 4; ++t) {
          auto ws = g.vertices();
          g.add_edge(ws[rng() % ws.size()], next++);
        }
        break;
      }
    }
    if (g.vertex_count() > 60 || g.empty()) continue;
    if (!mad_at_most(g, cap)) continue;
    if (find_kstar_subgraph(g, c + 1)) continue;
    return g;
  }
}

outcome sparse_palettes() {
  outcome o;
  std::mt19937_64 rng(77);
  std::string counts;
  for (int c = 5; c <= 7; ++c) {
    int ok = 0;
    for (int i = 0; i < 1000; ++i) {
      auto g = sparse_instance(c, rng);
      if (i % 4 == 0) corpus.push_back(g);
      try {
        auto r = color(g, c);
        if (checked_pcf(g, r.phi)) {
          ++ok;
        } else {
          o.fail("c=" + std::to_string(c) + " rejected:\n" + emit_graph(g));
        }
      } catch (const std::exception& e) {
        o.fail("c=" + std::to_string(c) + " " + e.what() + "\n" + emit_graph(g));
      }
    }
    counts += (counts.empty() ? "" : ", ") + std::string("c=") + std::to_string(c) + " " +
              std::to_string(ok) + "/1000";
  }
  o.detail = counts;
  return o;
}

outcome exception_behavior() {
  outcome o;
  for (int c = 4; c <= 6; ++c) {
    color_options opt;
    opt.check_hypotheses = true;
    try {
      color(gen::kstar(c + 1), c, opt);
      o.fail("c=" + std::to_string(c) + " colored K*");
    } catch (const error& e) {
      std::string msg = e.what();
      if (e.code() != errc::hypothesis || msg.find("K*_" + std::to_string(c + 1)) == std::string::npos) {
        o.fail("c=" + std::to_string(c) + " " + msg);
      }
    }
  }
  if (pcf_color_exact(gen::kstar(5), 4)) o.fail("K*_5 4-colorable");
  if (pcf_color_exact(gen::kstar(6), 5)) o.fail("K*_6 5-colorable");
  o.detail = "K*_{c+1} witness for c = 4..6; no 4-coloring of K*_5, no 5-coloring of K*_6";
  return o;
}

outcome discharge_ledger() {
  outcome o;
  auto k6 = gen::kstar(6);
  auto ledger = run(k6, rule_set::c5());
  for (const auto& [e, q] : ledger.final) {
    if (q != rational(20, 7)) o.fail(e.str() + " ends at " + to_string(q));
  }
  auto rep = audit(k6, rule_set::c5());
  if (!rep.all_at_bound || !rep.tight_structure || rep.tight_structure->second != 5 ||
      rep.tight_structure->first.vertex_count() != 6 || rep.tight_structure->first.edge_count() != 15) {
    o.fail("tight (K6, 5) structure not recognized");
  }
  auto c5 = run(gen::cycle(5), rule_set::c4());
  for (const auto& [e, q] : c5.final) {
    if (q != rational(2)) o.fail("C5 " + e.str() + " ends at " + to_string(q));
  }
  o.detail = "K*_6 at 20/7 everywhere with (K6, 5) recognized; C5 at 2";
  return o;
}

outcome planar_seven() {
  outcome o;
  auto attempt = [&](const std::string& name, const plane_graph& pg) {
    plane_corpus.push_back(pg);
    try {
      auto r = color_planar7(pg);
      if (!checked_pcf(pg.underlying(), r.phi)) o.fail(name + " rejected");
    } catch (const std::exception& e) {
      o.fail(name + ": " + e.what() + "\n" + emit_plane_graph(pg));
    }
  };
  attempt("dodecahedron", gen::dodecahedron_plane());
  attempt("subdivided dodecahedron", gen::one_subdivision(gen::dodecahedron_plane()));
  attempt("C5", gen::cycle_plane(5));
  std::mt19937_64 rng(5);
  int outer = 0;
  for (std::uint64_t seed = 0; outer < 150; ++seed) {
    int polygon = 5 + static_cast<int>(rng() % 60);
    int leaves = static_cast<int>(rng() % 16);
    auto pg = gen::random_outerplanar(polygon, leaves, seed);
    if (pg.underlying().vertex_count() > 80) continue;
    auto gi = oracle::girth(pg.underlying());
    if (!gi || *gi < 5) {
      o.fail("generator produced girth below 5");
      continue;
    }
    ++outer;
    attempt("outerplanar seed " + std::to_string(seed), pg);
  }
  o.detail = "dodecahedron, its subdivision, C5 and " + std::to_string(outer) + " outerplanar graphs";
  return o;
}

outcome conservation() {
  outcome o;
  std::size_t ledgers = 0;
  auto check = [&](const charge_ledger& l, const std::string& what) {
    ++ledgers;
    if (l.total_initial() != l.total_final()) o.fail(what);
  };
  for (const auto& g : corpus) {
    for (auto rs : {rule_set::c4(), rule_set::c5(), rule_set::c6plus(6), rule_set::c6plus(7)}) {
      check(run(g, rs), rs.name());
    }
  }
  for (const auto& pg : plane_corpus) {
    auto l = run(pg, rule_set::planar5());
    check(l, "planar5");
    if (pg.underlying().connected() && l.total_initial() != rational(-12)) {
      o.fail("planar initial sum " + to_string(l.total_initial()));
    }
    check(run(pg, rule_set::c5()), "c5 on plane graph");
  }
  o.detail = std::to_string(ledgers) + " ledgers over " + std::to_string(corpus.size()) + " graphs and " +
             std::to_string(plane_corpus.size()) + " plane graphs";
  return o;
}

outcome trees() {
  outcome o;
  std::mt19937_64 rng(9);
  for (int i = 0; i < 1000; ++i) {
    int n = 1 + static_cast<int>(rng() % 200);
    auto t = gen::random_tree(n, rng());
    auto phi = tree_pcf3(t);
    if (phi.palette() != 3 || !checked_pcf(t, phi)) o.fail("tree:\n" + emit_graph(t));
  }
  o.detail = "1000 random trees up to 200 vertices";
  return o;
}

bool brooks_instance_ok(const graph& g) {
  int k = g.max_degree();
  if (k < 2) return false;
  for (const auto& comp : g.components()) {
    auto h = g.induced(comp);
    std::size_t n = h.vertex_count();
    if (h.max_degree() == k && n == static_cast<std::size_t>(k) + 1 && h.edge_count() == n * (n - 1) / 2) {
      return false;
    }
    if (k == 2 && h.edge_count() == n && n % 2 == 1) return false;
  }
  return true;
}

outcome brooks() {
  outcome o;
  std::mt19937_64 rng(11);
  int done = 0;
  while (done < 1000) {
    graph g;
    switch (rng() % 3) {
      case 0: {
        int r = 2 + static_cast<int>(rng() % 6);
        int n = r + 1 + static_cast<int>(rng() % 30);
        if (n * r % 2) ++n;
        g = gen::random_regular(n, r, rng());
        break;
      }
      case 1:
        g = gen::random_sparse(5 + static_cast<int>(rng() % 60), rational(2 + static_cast<int>(rng() % 5)), rng());
        break;
      default:
        g = oracle::random_tree_plus(5 + static_cast<int>(rng() % 40), static_cast<int>(rng() % 40), rng);
        break;
    }
    if (!brooks_instance_ok(g)) continue;
    ++done;
    int k = g.max_degree();
    try {
      auto phi = brooks_proper_color(g, k);
      bool in_range = true;
      for (vertex v : g.vertices()) in_range = in_range && phi.has(v) && phi[v] >= 1 && phi[v] <= k;
      if (!in_range || !oracle::proper(g, phi.assignment())) o.fail("improper:\n" + emit_graph(g));
    } catch (const std::exception& e) {
      o.fail(std::string(e.what()) + "\n" + emit_graph(g));
    }
  }
  for (int k = 2; k <= 7; ++k) {
    try {
      brooks_proper_color(gen::complete(k + 1), k);
      o.fail("K_" + std::to_string(k + 1) + " accepted");
    } catch (const error& e) {
      if (e.code() != errc::brooks_precondition) o.fail(e.what());
    }
  }
  o.detail = "1000 instances with k = max degree; K_{k+1} rejected for k = 2..7";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<outcome()>>> criteria = {
      {"threshold identity", threshold_identity},
      {"oracle landmarks", oracle_landmarks},
      {"c=4 constructive vs exact", small_graphs_c4},
      {"c=5,6,7 constructive coloring", sparse_palettes},
      {"exception behavior", exception_behavior},
      {"discharging ledger", discharge_ledger},
      {"planar 7-coloring", planar_seven},
      {"charge conservation", conservation},
      {"tree 3-coloring", trees},
      {"Brooks coloring", brooks},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("uncaught: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " " << criteria[i].first << ": "
              << o.detail << " [" << timing << "]" << std::endl;
    for (const auto& f : o.failures) std::cout << "  " << f << std::endl;
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
