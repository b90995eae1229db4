#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pcf/brooks.hpp"
#include "pcf/coloring.hpp"
#include "pcf/config.hpp"
#include "pcf/exact.hpp"
#include "pcf/extend.hpp"
#include "pcf/graph.hpp"
#include "pcf/io.hpp"
#include "pcf/mad.hpp"
#include "pcf/plane_graph.hpp"
#include "pcf/rational.hpp"
#include "pcf/structure.hpp"

namespace pcf {

/// No configuration applies and no terminal case fits. Carries what was left.
class stuck_error : public error {
 public:
  explicit stuck_error(graph residual)
      : error(errc::stuck, "no reducible configuration in a residual graph with " +
                               std::to_string(residual.vertex_count()) + " vertices"),
        residual_(std::move(residual)) {}

  const graph& residual() const noexcept { return residual_; }

 private:
  graph residual_;
};

enum class terminal_kind { empty, single_vertex, cycle, regular_subdivision, exact_fallback };

inline const char* to_string(terminal_kind k) {
  switch (k) {
    case terminal_kind::empty: return "empty";
    case terminal_kind::single_vertex: return "single-vertex";
    case terminal_kind::cycle: return "cycle-component";
    case terminal_kind::regular_subdivision: return "regular-subdivision+Brooks";
    case terminal_kind::exact_fallback: return "exact-fallback";
  }
  return "?";
}

struct reduction_step {
  config cfg;
  std::size_t size_before = 0;
};

struct terminal_case {
  terminal_kind kind{};
  vertex_set vertices;
  int regularity = 0;  // r for regular-subdivision
};

struct reduction_trace {
  std::vector<reduction_step> steps;
  std::vector<terminal_case> terminals;

  /// One JSON object per line: reductions first, in the order they were
  /// made, then the terminal cases.
  std::string to_json_lines() const {
    std::string out;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const auto& s = steps[i];
      nlohmann::json actors = nlohmann::json::object();
      for (const auto& [name, ids] : s.cfg.actors) actors[name] = ids;
      nlohmann::json j = {{"step", i},
                          {"kind", to_string(s.cfg.kind)},
                          {"size", s.size_before},
                          {"actors", actors},
                          {"deletion_set", std::vector<vertex>(s.cfg.deletion.begin(),
                                                               s.cfg.deletion.end())}};
      out += j.dump() + "\n";
    }
    for (const auto& t : terminals) {
      nlohmann::json j = {{"terminal", to_string(t.kind)},
                          {"size", t.vertices.size()},
                          {"vertices", std::vector<vertex>(t.vertices.begin(), t.vertices.end())}};
      if (t.kind == terminal_kind::regular_subdivision) j["r"] = t.regularity;
      out += j.dump() + "\n";
    }
    return out;
  }
};

struct color_result {
  coloring phi;
  reduction_trace trace;
};

struct color_options {
  bool check_hypotheses = false;
  /// Color a stuck component with the exact solver instead of failing.
  bool exact_fallback = false;
  exact_options exact{};
};

/// Throws errc::hypothesis unless g meets the coloring theorem for c colors:
/// mad(G) <= 4c/(c+2) and no K*_{c+1} for c >= 5; mad(G) < 12/5 and no
/// induced 5-cycle for c = 4. The K*_{c+1} search runs for c = 4 as well so
/// that K*_5 is named when present.
inline void check_hypotheses(const graph& g, int colors) {
  if (colors < 4) throw error(errc::precondition, "the coloring theorems need c >= 4");
  if (g.empty()) return;
  if (auto w = find_kstar_subgraph(g, colors + 1)) {
    std::string branch;
    for (vertex b : w->branch) branch += (branch.empty() ? "" : ",") + std::to_string(b);
    throw error(errc::hypothesis, "contains K*_" + std::to_string(colors + 1) +
                                      " with branch vertices " + branch);
  }
  auto m = mad_exact(g);
  if (colors == 4) {
    if (m.value >= four_color_threshold()) {
      throw error(errc::hypothesis, "mad = " + to_string(m.value) + " is not below 12/5");
    }
    if (auto c5 = find_induced_c5(g)) {
      std::string ids;
      for (vertex v : *c5) ids += (ids.empty() ? "" : ",") + std::to_string(v);
      throw error(errc::hypothesis, "induced 5-cycle " + ids);
    }
  } else if (m.value > kstar_threshold(colors)) {
    throw error(errc::hypothesis, "mad = " + to_string(m.value) + " exceeds " +
                                      to_string(kstar_threshold(colors)));
  }
}

namespace detail {

// Cycle colorings: 123... when 3 | n; otherwise one 1234 block (n = 1 mod 3)
// or two (n = 2 mod 3) followed by 123 blocks; C5 gets 12345.
inline std::optional<std::vector<int>> cycle_pattern(int n, int colors) {
  if (n == 5) {
    if (colors < 5) return std::nullopt;
    return std::vector<int>{1, 2, 3, 4, 5};
  }
  std::vector<int> out;
  int fours = n % 3 == 0 ? 0 : (n % 3 == 1 ? 1 : 2);
  if (fours > 0 && colors < 4) return std::nullopt;
  for (int i = 0; i < fours; ++i) {
    for (int c = 1; c <= 4; ++c) out.push_back(c);
  }
  while (static_cast<int>(out.size()) < n) {
    for (int c = 1; c <= 3; ++c) out.push_back(c);
  }
  return out;
}

inline void color_regular_subdivision(const graph& comp, const graph& base, int colors,
                                      coloring& phi) {
  phi.merge(brooks_proper_color(base, colors));
  for (vertex v : comp.vertices()) {
    if (comp.degree(v) != 2) continue;
    painter p(comp, phi, colors, "terminal");
    p.greedy(v, "2-vertex");
  }
}

class reducer {
 public:
  reducer(const graph& g, int colors, reduce_mode mode, std::optional<plane_graph> pg,
          const color_options& opt)
      : colors_(colors), mode_(mode), cur_(g), pg_(std::move(pg)), opt_(opt), phi_(colors) {}

  color_result run() {
    if (cur_.empty()) trace_.terminals.push_back({terminal_kind::empty, {}, 0});
    while (!cur_.empty()) {
      if (strip_terminals()) continue;
      const plane_graph* pg = pg_ ? &*pg_ : nullptr;
      if (auto cfg = find_config(cur_, colors_, mode_, pg)) {
        trace_.steps.push_back({*cfg, cur_.vertex_count()});
        stack_.push_back(cur_);
        remove(cfg->deletion);
        continue;
      }
      finish_residual();
    }
    for (std::size_t i = trace_.steps.size(); i-- > 0;) {
      phi_ = extend(trace_.steps[i].cfg, stack_[i], colors_, phi_);
    }
    return {phi_, trace_};
  }

 private:
  void remove(const vertex_set& s) {
    cur_ = cur_.without(s);
    if (pg_) pg_ = pg_->without(s);
  }

  // Colors isolated vertices and cycle components directly.
  bool strip_terminals() {
    vertex_set done;
    for (const auto& comp : cur_.components()) {
      if (comp.size() == 1) {
        phi_.set(*comp.begin(), 1);
        trace_.terminals.push_back({terminal_kind::single_vertex, comp, 0});
        done.insert(comp.begin(), comp.end());
        continue;
      }
      graph h = cur_.induced(comp);
      if (!is_cycle_graph(h)) continue;
      auto order = cycle_order(h);
      auto pattern = cycle_pattern(static_cast<int>(order.size()), colors_);
      if (!pattern) continue;
      for (std::size_t i = 0; i < order.size(); ++i) phi_.set(order[i], (*pattern)[i]);
      trace_.terminals.push_back({terminal_kind::cycle, comp, 0});
      done.insert(comp.begin(), comp.end());
    }
    if (done.empty()) return false;
    remove(done);
    return true;
  }

  // No configuration anywhere: every component must be a terminal case.
  void finish_residual() {
    for (const auto& comp : cur_.components()) {
      graph h = cur_.induced(comp);
      auto rec = recognize_one_subdivision_of_regular(h);
      if (rec && rec->second <= colors_) {
        color_regular_subdivision(h, rec->first, colors_, phi_);
        trace_.terminals.push_back({terminal_kind::regular_subdivision, comp, rec->second});
      } else if (opt_.exact_fallback) {
        auto sol = pcf_color_exact(h, colors_, opt_.exact);
        if (!sol) throw stuck_error(h);
        phi_.merge(*sol);
        trace_.terminals.push_back({terminal_kind::exact_fallback, comp, 0});
      } else {
        throw stuck_error(h);
      }
    }
    remove([&] {
      vertex_set all;
      for (vertex v : cur_.vertices()) all.insert(v);
      return all;
    }());
  }

  int colors_;
  reduce_mode mode_;
  graph cur_;
  std::optional<plane_graph> pg_;
  color_options opt_;
  coloring phi_;
  reduction_trace trace_;
  std::vector<graph> stack_;
};

}  // namespace detail

/// PCF c-coloring by reducible configurations (c >= 4). The result is
/// verified before it is returned.
inline color_result color(const graph& g, int colors, const color_options& opt = {}) {
  if (colors < 4) throw error(errc::precondition, "color needs c >= 4");
  if (opt.check_hypotheses) check_hypotheses(g, colors);
  auto out = detail::reducer(g, colors, reduce_mode::sparse, std::nullopt, opt).run();
  if (auto bad = verify_pcf(g, out.phi)) throw extension_failed("color/verify", bad->describe());
  return out;
}

/// PCF 7-coloring of a plane graph of girth at least 5.
inline color_result color_planar7(const plane_graph& pg, const color_options& opt = {}) {
  const graph& g = pg.underlying();
  if (auto gi = girth(g); gi && *gi < 5) {
    throw error(errc::precondition, "girth " + std::to_string(*gi) + " is below 5");
  }
  auto out = detail::reducer(g, 7, reduce_mode::planar7, pg, opt).run();
  if (auto bad = verify_pcf(g, out.phi)) throw extension_failed("color/verify", bad->describe());
  return out;
}

}  // namespace pcf
