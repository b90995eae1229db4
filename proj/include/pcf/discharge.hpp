#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "pcf/config.hpp"
#include "pcf/graph.hpp"
#include "pcf/planar.hpp"
#include "pcf/plane_graph.hpp"
#include "pcf/rational.hpp"
#include "pcf/structure.hpp"

namespace pcf {

struct rule_set {
  enum class family { c4, c5, c6plus, planar5 };
  family id = family::c4;
  int c = 4;  // palette the rules serve

  static rule_set c4() { return {family::c4, 4}; }
  static rule_set c5() { return {family::c5, 5}; }
  static rule_set c6plus(int c) {
    if (c < 6) throw error(errc::precondition, "c6 rules need c >= 6");
    return {family::c6plus, c};
  }
  static rule_set planar5() { return {family::planar5, 7}; }

  /// "c4", "c5", "c6:<c>" or "planar5".
  static rule_set parse(const std::string& text) {
    if (text == "c4") return c4();
    if (text == "c5") return c5();
    if (text == "planar5") return planar5();
    if (text.rfind("c6:", 0) == 0) {
      try {
        std::size_t used = 0;
        int c = std::stoi(text.substr(3), &used);
        if (used == text.size() - 3) return c6plus(c);
      } catch (const std::logic_error&) {
      }
    }
    throw error(errc::precondition, "unknown rule set '" + text + "'");
  }

  std::string name() const {
    switch (id) {
      case family::c4: return "c4";
      case family::c5: return "c5";
      case family::c6plus: return "c6:" + std::to_string(c);
      case family::planar5: return "planar5";
    }
    return "?";
  }

  bool planar() const { return id == family::planar5; }

  /// The final charge every element reaches in a counterexample.
  rational bound() const {
    switch (id) {
      case family::c4: return four_color_threshold();
      case family::c5:
      case family::c6plus: return kstar_threshold(c);
      case family::planar5: return rational(0);
    }
    return rational(0);
  }
};

/// A vertex or a face (faces are indexed as in plane_graph::faces()).
struct element {
  bool is_face = false;
  std::int64_t id = 0;

  static element v(vertex x) { return {false, x}; }
  static element f(std::size_t i) { return {true, static_cast<std::int64_t>(i)}; }

  std::string str() const { return (is_face ? "f" : "v") + std::to_string(id); }

  friend bool operator<(const element& a, const element& b) {
    return std::tie(a.is_face, a.id) < std::tie(b.is_face, b.id);
  }
  friend bool operator==(const element& a, const element& b) {
    return a.is_face == b.is_face && a.id == b.id;
  }
};

struct transfer {
  std::string rule;
  element from;
  element to;
  rational amount;
};

struct charge_ledger {
  std::map<element, rational> initial;
  std::vector<transfer> transfers;
  std::map<element, rational> final;

  rational total_initial() const {
    rational s(0);
    for (const auto& [_, q] : initial) s += q;
    return s;
  }

  rational total_final() const {
    rational s(0);
    for (const auto& [_, q] : final) s += q;
    return s;
  }

  /// Line format: "initial <elem> <p/q>", "transfer <rule> <from> <to> <p/q>",
  /// "final <elem> <p/q>". Elements are v<id> or f<index>.
  std::string to_lines() const {
    std::string out;
    for (const auto& [e, q] : initial) out += "initial " + e.str() + " " + to_string(q) + "\n";
    for (const auto& t : transfers) {
      out += "transfer " + t.rule + " " + t.from.str() + " " + t.to.str() + " " +
             to_string(t.amount) + "\n";
    }
    for (const auto& [e, q] : final) out += "final " + e.str() + " " + to_string(q) + "\n";
    return out;
  }
};

namespace detail {

inline void require_kind(const rule_set& rs, bool planar_input) {
  if (rs.planar() && !planar_input) {
    throw error(errc::precondition, "planar5 rules need a plane graph");
  }
}

inline void require_girth5(const plane_graph& pg) {
  if (auto gi = girth(pg.underlying()); gi && *gi < 5) {
    throw error(errc::precondition, "planar5 rules need girth at least 5, got " + std::to_string(*gi));
  }
}

inline std::map<element, rational> degree_charges(const graph& g) {
  std::map<element, rational> out;
  for (vertex v : g.vertices()) out[element::v(v)] = rational(g.degree(v));
  return out;
}

inline std::map<element, rational> planar_charges(const plane_graph& pg) {
  const graph& g = pg.underlying();
  std::map<element, rational> out;
  for (vertex v : g.vertices()) out[element::v(v)] = rational(2 * g.degree(v) - 6);
  const auto& faces = pg.faces();
  for (std::size_t i = 0; i < faces.size(); ++i) out[element::f(i)] = rational(faces[i].length() - 6);
  return out;
}

class transfer_log {
 public:
  void send(const std::string& rule, element from, element to, const rational& q) {
    if (q == rational(0)) return;
    amounts_[{rule, from, to}] += q;
  }

  std::vector<transfer> sorted() const {
    std::vector<transfer> out;
    for (const auto& [key, q] : amounts_) {
      out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), q});
    }
    return out;
  }

 private:
  std::map<std::tuple<std::string, element, element>, rational> amounts_;
};

inline void rules_c4(const graph& g, transfer_log& log) {
  // One transfer per thread end: a thread with both ends at v receives 1/5
  // from each end.
  thread_index threads(g);
  for (vertex v : g.vertices()) {
    if (g.degree(v) < 3) continue;
    for (auto inc : threads.ends_at(v)) {
      for (vertex w : threads.threads()[inc.thread].path) {
        log.send("R1", element::v(v), element::v(w), rational(1, 5));
      }
    }
  }
}

inline void rules_c5(const graph& g, transfer_log& log) {
  for (vertex v : g.vertices()) {
    const int d = g.degree(v);
    if (d < 3) continue;
    for (vertex w : g.neighbors(v)) {
      const int dw = g.degree(w);
      if (dw == 2) log.send("R1", element::v(v), element::v(w), rational(3, 7));
      if (d < 4) continue;
      const int n2w = count_neighbors_of_degree(g, w, 2);
      if ((dw == 3 && n2w >= 1) || (dw == 4 && n2w >= 3)) {
        log.send("R2", element::v(v), element::v(w), rational(1, 7));
      }
    }
  }
}

inline void rules_c6plus(const graph& g, int c, transfer_log& log) {
  for (vertex v : g.vertices()) {
    if (g.degree(v) < 4) continue;
    for (vertex w : g.neighbors(v)) {
      if (g.degree(w) == 2) log.send("R1", element::v(v), element::v(w), rational(c - 2, c + 2));
      if (g.degree(w) == 3) {
        log.send("R2", element::v(v), element::v(w), rational(c - 6, 3 * (c + 2)));
      }
    }
  }
}

inline void rules_planar5(const plane_graph& pg, const planar_classification& pc,
                          transfer_log& log) {
  const graph& g = pg.underlying();
  const auto& faces = pg.faces();
  for (vertex v : g.vertices()) {
    const int d = g.degree(v);
    if (d < 4) continue;
    const auto& vc = pc.vertices.at(v);
    for (vertex w : g.neighbors(v)) {
      if (g.degree(w) == 2) log.send("R1", element::v(v), element::v(w), rational(1));
    }
    for (std::size_t f : vc.fstar5) {
      if (vc.good) {
        log.send("R2", element::v(v), element::f(f), rational(1, 2));
      } else if (pc.faces[f].terrible) {
        log.send("R3", element::v(v), element::f(f), rational(1, 2));
      } else if (d == 5 && vc.n2 == 2) {
        log.send("R3A", element::v(v), element::f(f), rational(1, 3));
      } else {
        log.send("R3B", element::v(v), element::f(f), rational(1, 4));
      }
    }
    if (d >= 9) {
      for (std::size_t f = 0; f < faces.size(); ++f) {
        const auto& w = faces[f].walk;
        if (faces[f].length() == 5 && std::find(w.begin(), w.end(), v) != w.end()) {
          log.send("R4", element::v(v), element::f(f), rational(1, 3));
        }
      }
    }
  }
}

inline charge_ledger settle(std::map<element, rational> initial, const transfer_log& log) {
  charge_ledger out;
  out.initial = std::move(initial);
  out.transfers = log.sorted();
  out.final = out.initial;
  for (const auto& t : out.transfers) {
    out.final[t.from] -= t.amount;
    out.final[t.to] += t.amount;
  }
  return out;
}

}  // namespace detail

/// Initial charges: degree for the c4, c5 and c6 rules.
inline std::map<element, rational> initial_charges(const graph& g, const rule_set& rs) {
  detail::require_kind(rs, false);
  return detail::degree_charges(g);
}

/// Initial charges on a plane graph: 2d(v) - 6 and d(f) - 6 for planar5,
/// degrees otherwise.
inline std::map<element, rational> initial_charges(const plane_graph& pg, const rule_set& rs) {
  if (!rs.planar()) return detail::degree_charges(pg.underlying());
  detail::require_girth5(pg);
  return detail::planar_charges(pg);
}

inline charge_ledger run(const graph& g, const rule_set& rs) {
  detail::require_kind(rs, false);
  detail::transfer_log log;
  switch (rs.id) {
    case rule_set::family::c4: detail::rules_c4(g, log); break;
    case rule_set::family::c5: detail::rules_c5(g, log); break;
    case rule_set::family::c6plus: detail::rules_c6plus(g, rs.c, log); break;
    case rule_set::family::planar5: break;
  }
  auto ledger = detail::settle(detail::degree_charges(g), log);
  if (ledger.total_initial() != ledger.total_final()) {
    throw error(errc::validity, "charge not conserved");
  }
  return ledger;
}

inline charge_ledger run(const plane_graph& pg, const rule_set& rs) {
  if (!rs.planar()) return run(pg.underlying(), rs);
  detail::require_girth5(pg);
  detail::transfer_log log;
  detail::rules_planar5(pg, classify(pg), log);
  auto ledger = detail::settle(detail::planar_charges(pg), log);
  if (ledger.total_initial() != ledger.total_final()) {
    throw error(errc::validity, "charge not conserved");
  }
  return ledger;
}

struct deficiency {
  element at;
  rational charge;
  std::optional<config> nearby;  // a configuration anchored within distance 2
};

struct audit_report {
  rule_set rules;
  rational total_initial;
  rational total_final;
  bool conserved = false;
  rational bound;
  std::optional<element> argmin;
  rational min_charge;
  std::vector<deficiency> deficient;
  std::vector<vertex_set> cycle_components;
  /// Every vertex ends exactly at the bound (c5 and c6 rules only).
  bool all_at_bound = false;
  std::optional<std::pair<graph, int>> tight_structure;

  /// True when the report is consistent with the discharging argument: every
  /// deficient element has a configuration nearby or lies on a cycle
  /// component, or the graph has the tight regular-subdivision structure.
  bool explained() const {
    for (const auto& d : deficient) {
      if (d.nearby) continue;
      bool on_cycle = false;
      for (const auto& comp : cycle_components) {
        on_cycle = on_cycle || (!d.at.is_face && comp.count(d.at.id));
      }
      if (!on_cycle) return false;
    }
    return true;
  }

  std::string to_lines() const {
    std::string out;
    out += "audit rules " + rules.name() + "\n";
    out += "audit conservation " + std::string(conserved ? "ok" : "FAILED") + " initial " +
           to_string(total_initial) + " final " + to_string(total_final) + "\n";
    if (argmin) {
      out += "audit min " + argmin->str() + " " + to_string(min_charge) + " bound " +
             to_string(bound) + "\n";
    }
    for (const auto& d : deficient) {
      out += "audit deficient " + d.at.str() + " " + to_string(d.charge) + " ";
      out += d.nearby ? d.nearby->describe() : std::string("NONE");
      out += "\n";
    }
    for (const auto& comp : cycle_components) {
      out += "audit cycle-component";
      for (vertex v : comp) out += " " + std::to_string(v);
      out += "\n";
    }
    if (all_at_bound) {
      out += "audit tight ";
      if (tight_structure) {
        out += "regular-subdivision r=" + std::to_string(tight_structure->second) + " base-vertices " +
               std::to_string(tight_structure->first.vertex_count()) + " base-edges " +
               std::to_string(tight_structure->first.edge_count()) + "\n";
      } else {
        out += "unrecognized\n";
      }
    }
    out += "audit verdict " + std::string(explained() ? "explained" : "UNEXPLAINED") + "\n";
    return out;
  }
};

namespace detail {

inline audit_report audit_ledger(const graph& g, const rule_set& rs, const charge_ledger& ledger,
                                 const plane_graph* pg) {
  audit_report rep;
  rep.rules = rs;
  rep.total_initial = ledger.total_initial();
  rep.total_final = ledger.total_final();
  rep.conserved = rep.total_initial == rep.total_final;
  rep.bound = rs.bound();
  for (const auto& [e, q] : ledger.final) {
    if (!rep.argmin || q < rep.min_charge) {
      rep.argmin = e;
      rep.min_charge = q;
    }
  }
  std::vector<config> configs;
  if (!g.empty()) {
    configs = rs.planar() ? find_configs(g, 7, reduce_mode::planar7, pg)
                          : find_configs(g, rs.c, reduce_mode::sparse, nullptr);
  }
  for (const auto& comp : g.components()) {
    if (is_cycle_graph(g.induced(comp))) rep.cycle_components.push_back(comp);
  }
  for (const auto& [e, q] : ledger.final) {
    if (q >= rep.bound) continue;
    vertex_set centre;
    if (e.is_face) {
      const auto& w = pg->faces()[static_cast<std::size_t>(e.id)].walk;
      centre.insert(w.begin(), w.end());
    } else {
      centre.insert(e.id);
    }
    auto near = ball(g, centre, 2);
    deficiency d{e, q, std::nullopt};
    for (const auto& c : configs) {
      if (near.count(c.anchor)) {
        d.nearby = c;
        break;
      }
    }
    rep.deficient.push_back(std::move(d));
  }
  if ((rs.id == rule_set::family::c5 || rs.id == rule_set::family::c6plus) && !g.empty()) {
    rep.all_at_bound = true;
    for (const auto& [e, q] : ledger.final) rep.all_at_bound = rep.all_at_bound && q == rep.bound;
    if (rep.all_at_bound) rep.tight_structure = recognize_one_subdivision_of_regular(g);
  }
  return rep;
}

}  // namespace detail

inline audit_report audit(const graph& g, const rule_set& rs) {
  return detail::audit_ledger(g, rs, run(g, rs), nullptr);
}

inline audit_report audit(const plane_graph& pg, const rule_set& rs) {
  if (!rs.planar()) return audit(pg.underlying(), rs);
  return detail::audit_ledger(pg.underlying(), rs, run(pg, rs), &pg);
}

}  // namespace pcf
