#pragma once

#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "pcf/coloring.hpp"
#include "pcf/config.hpp"
#include "pcf/errors.hpp"
#include "pcf/graph.hpp"

namespace pcf {

namespace detail {

// Shared primitives of the extension procedures. Every value of phi and
// phi* is read from the live partial coloring at the moment it is needed.
class painter {
 public:
  painter(const graph& g, coloring& phi, int colors, std::string kind)
      : g_(g), phi_(phi), colors_(colors), kind_(std::move(kind)) {}

  int phi(vertex v) const { return g_.has_vertex(v) ? phi_[v] : 0; }
  bool colored(vertex v) const { return phi(v) != 0; }
  int star(vertex v) const { return g_.has_vertex(v) ? unique_color(g_, phi_, v) : 0; }

  std::set<int> phis(const std::vector<vertex>& vs) const {
    std::set<int> out;
    for (vertex v : vs) {
      if (int c = phi(v)) out.insert(c);
    }
    return out;
  }

  std::set<int> stars(const std::vector<vertex>& vs) const {
    std::set<int> out;
    for (vertex v : vs) {
      if (int c = star(v)) out.insert(c);
    }
    return out;
  }

  std::vector<vertex> nbrs(vertex v) const {
    return std::vector<vertex>(g_.neighbors(v).begin(), g_.neighbors(v).end());
  }

  /// phi(N(w)) and phi*(N(w)): the set a deleted vertex avoids when it is
  /// colored "greedily".
  std::set<int> around(vertex w) const {
    auto out = phis(nbrs(w));
    auto s = stars(nbrs(w));
    out.insert(s.begin(), s.end());
    return out;
  }

  /// Colors w with a color outside `avoid`. Among the admissible colors, one
  /// that also keeps the current unique color of every neighbor (and gives a
  /// neighbor without one a unique color) is preferred; then the smallest.
  void paint(vertex w, std::set<int> avoid, const std::string& step,
             const std::set<int>& prefer_avoid = {}) {
    for (vertex x : g_.neighbors(w)) {
      if (int c = phi(x)) avoid.insert(c);
    }
    avoid.erase(0);
    std::set<int> keep;
    std::set<int> rescue;
    for (vertex x : g_.neighbors(w)) {
      if (int s = star(x)) {
        keep.insert(s);
      } else {
        auto seen = phis(nbrs(x));
        rescue.insert(seen.begin(), seen.end());
      }
    }
    std::vector<std::set<int>> tiers;
    auto with = [&](std::initializer_list<const std::set<int>*> parts) {
      std::set<int> t = avoid;
      for (auto* p : parts) t.insert(p->begin(), p->end());
      tiers.push_back(std::move(t));
    };
    with({&prefer_avoid, &keep, &rescue});
    with({&prefer_avoid, &keep});
    with({&keep, &rescue});
    with({&keep});
    with({});
    for (const auto& t : tiers) {
      for (int c = 1; c <= colors_; ++c) {
        if (!t.count(c)) {
          phi_.set(w, c);
          return;
        }
      }
    }
    throw extension_failed(kind_ + "/" + step, "no color left for vertex " + std::to_string(w));
  }

  /// Colors w outside phi(N(w)), phi*(N(w)) and `extra`.
  void greedy(vertex w, const std::string& step, std::set<int> extra = {},
              const std::set<int>& prefer_avoid = {}) {
    auto a = around(w);
    a.insert(extra.begin(), extra.end());
    a.erase(0);
    paint(w, a, step, prefer_avoid);
  }

  void assign(vertex w, int c, const std::string& step) {
    if (c < 1 || c > colors_) {
      throw extension_failed(kind_ + "/" + step, "color out of range at " + std::to_string(w));
    }
    for (vertex x : g_.neighbors(w)) {
      if (phi(x) == c) {
        throw extension_failed(kind_ + "/" + step,
                               "color " + std::to_string(c) + " clashes at " + std::to_string(w));
      }
    }
    phi_.set(w, c);
  }

  void erase(vertex w) { phi_.erase(w); }

  coloring snapshot() const { return phi_; }
  void restore(const coloring& saved) { phi_ = saved; }

  int colors() const { return colors_; }
  const graph& g() const { return g_; }

 private:
  const graph& g_;
  coloring& phi_;
  int colors_;
  std::string kind_;
};

inline std::set<int> operator|(std::set<int> a, const std::set<int>& b) {
  a.insert(b.begin(), b.end());
  return a;
}

inline std::vector<vertex> minus(const std::vector<vertex>& a, const vertex_set& b) {
  std::vector<vertex> out;
  for (vertex v : a) {
    if (!b.count(v)) out.push_back(v);
  }
  return out;
}

inline void extend_deg1(const config& c, painter& p) {
  vertex u = c.role("u");
  p.paint(c.role("v"), {p.phi(u), p.star(u)}, "v");
}

inline void extend_three_vx_two_thread(const config& c, painter& p) {
  vertex u1 = c.role("u1");
  vertex v1 = c.role("v1");
  vertex v2 = c.role("v2");
  vertex u2 = c.role("u2");
  p.paint(v2, {p.phi(u2), p.star(u2), p.phi(u1)}, "v2");
  p.paint(v1, {p.phi(v2), p.phi(u2), p.phi(u1)}, "v1");
}

inline void extend_four_thread(const config& c, painter& p) {
  vertex u1 = c.role("u1");
  vertex u2 = c.role("u2");
  vertex v1 = c.role("v1");
  vertex v4 = c.role("v4");
  std::set<int> a{p.phi(u1), p.star(u1)};
  std::set<int> b{p.phi(u2), p.star(u2)};
  a.erase(0);
  b.erase(0);
  bool meet = false;
  for (int x : a) meet = meet || b.count(x);
  if (meet) {
    p.paint(v1, a | b, "common");
    p.assign(v4, p.phi(v1), "common");
  } else {
    p.assign(v1, p.phi(u2), "swap");
    p.assign(v4, p.phi(u1), "swap");
  }
  p.greedy(c.role("v2"), "v2");
  p.greedy(c.role("v3"), "v3");
}

// Threads of T other than the 3-thread, colored from the far end towards v.
inline void color_thread_runs(painter& p, vertex v, const vertex_set& skip) {
  const graph& g = p.g();
  for (vertex w : neighbors_of_degree(g, v, 2)) {
    if (skip.count(w) || p.colored(w)) continue;
    std::vector<vertex> run{w};
    vertex next = other_neighbor(g, w, v);
    if (g.degree(next) == 2) {
      if (skip.count(next)) continue;
      run.push_back(next);
      next = other_neighbor(g, next, w);
    }
    for (std::size_t i = run.size(); i-- > 0;) {
      vertex after = i + 1 < run.size() ? run[i + 1] : next;
      p.paint(run[i], {p.phi(after), p.star(after), p.phi(v)}, "thread");
    }
  }
}

inline void extend_thread_lemma(const config& c, painter& p) {
  const graph& g = p.g();
  vertex v = c.role("v");
  const int d = static_cast<int>(c.role("d"));
  vertex u = c.role("u");
  vertex x = c.role("x");
  vertex y = c.role("y");
  vertex z = c.role("z");
  auto n3p = neighbors_of_degree_at_least(g, v, 3);
  std::vector<vertex> t1_out;
  for (vertex w : c.roles("T1")) {
    for (vertex q : g.neighbors(w)) {
      if (q != v) t1_out.push_back(q);
    }
  }
  auto big_c = [&] { return p.phis(n3p) | p.phis(t1_out) | p.stars(n3p); };

  if (z == v) {
    // The thread closes on v: v u x y v.
    p.paint(v, big_c(), "loop-v");
    color_thread_runs(p, v, {u, x, y});
    auto others = minus(p.nbrs(v), {u, y});
    std::set<int> alpha = p.star(v) ? std::set<int>{p.star(v)} : p.phis(others);
    p.paint(u, alpha | std::set<int>{p.phi(v)}, "loop-u");
    p.paint(y, alpha | std::set<int>{p.phi(v), p.phi(u)}, "loop-y");
    p.paint(x, {p.phi(v), p.phi(u), p.phi(y)}, "loop-x");
    return;
  }

  int mode = d == 5 ? 1 : (p.star(z) ? 2 : 3);
  if (mode == 1) {
    if (p.colored(z)) {
      p.assign(v, p.phi(z), "case1-v");
    } else {
      p.paint(v, {}, "case1-v");
    }
  } else if (mode == 2) {
    p.assign(x, p.star(z), "case2-x");
    p.paint(v, big_c() | std::set<int>{p.phi(x)}, "case2-v");
  } else {
    p.paint(v, big_c() | std::set<int>{p.phi(z)}, "case3-v");
    p.assign(y, p.phi(v), "case3-y");
  }

  color_thread_runs(p, v, {u, x, y});

  auto others = minus(p.nbrs(v), {u});
  std::set<int> alpha = p.star(v) ? std::set<int>{p.star(v)} : p.phis(others);
  if (mode == 1) {
    p.paint(u, alpha | std::set<int>{p.phi(v)}, "case1-u");
    p.paint(y, {p.phi(z), p.star(z), p.phi(u)}, "case1-y");
    p.paint(x, {p.phi(v), p.phi(u), p.phi(y)}, "case1-x");
  } else if (mode == 2) {
    p.paint(u, alpha | std::set<int>{p.phi(v), p.phi(x)}, "case2-u");
    p.paint(y, {p.phi(z), p.star(z), p.phi(u)}, "case2-y");
  } else {
    p.paint(u, alpha | std::set<int>{p.phi(v)}, "case3-u");
    p.paint(x, {p.phi(v), p.phi(u), p.phi(z)}, "case3-x");
  }
}

// Colors the still uncolored 2-vertices of S one by one; each sees at most
// four colors to avoid.
inline void claim_step(const config& c, painter& p, const std::string& step) {
  for (vertex w : c.deletion) {
    if (p.colored(w)) continue;
    auto a = p.around(w);
    a.erase(0);
    if (static_cast<int>(a.size()) > 4 && p.g().degree(w) == 2) {
      throw extension_failed(std::string(to_string(c.kind)) + "/" + step,
                             "more than four colors around " + std::to_string(w));
    }
    p.greedy(w, step);
  }
}

inline void combine_by_cases(const config& c, painter& p) {
  const graph& g = p.g();
  const vertex v[3] = {-1, c.role("v1"), c.role("v2")};
  std::vector<vertex> n3p[3];
  std::vector<vertex> n2[3];
  for (int i = 1; i <= 2; ++i) {
    n2[i] = neighbors_of_degree(g, v[i], 2);
    n3p[i] = neighbors_of_degree_at_least(g, v[i], 3);
  }
  auto big_c = [&](int i) {
    auto rest = minus(n3p[i], {v[3 - i]});
    auto with_two = rest;
    with_two.insert(with_two.end(), n2[i].begin(), n2[i].end());
    return p.phis(rest) | p.stars(with_two);
  };
  auto c1_star = [&] { return big_c(1) | p.phis(minus(n3p[2], {v[1]})); };

  if (!n2[1].empty() && !n2[2].empty()) {
    p.paint(v[1], big_c(1), "A-v1");
    p.paint(v[2], big_c(2) | std::set<int>{p.phi(v[1])}, "A-v2");
    for (int i = 1; i <= 2; ++i) {
      if (p.star(v[i])) continue;
      vertex ui = -1;
      for (vertex w : n2[i]) {
        if (!p.colored(w)) {
          ui = w;
          break;
        }
      }
      if (ui < 0) continue;
      vertex xi = other_neighbor(g, ui, v[i]);
      p.paint(ui, p.phis(n3p[i]) | std::set<int>{p.phi(v[i]), p.phi(xi), p.star(xi)},
              "A-u" + std::to_string(i));
    }
  } else {
    if (!p.star(v[2])) p.paint(v[1], c1_star(), "B-v1");
    if (!p.star(v[1])) {
      auto common = p.phis(minus(p.nbrs(v[1]), {v[2]}));
      p.erase(v[1]);
      p.paint(v[2], big_c(2) | common, "B-v2");
      p.paint(v[1], c1_star() | std::set<int>{p.phi(v[2])}, "B-recolor-v1");
    }
    if (!p.colored(v[1])) p.paint(v[1], big_c(1), "B-v1", c1_star());
    if (!p.colored(v[2])) p.paint(v[2], big_c(2) | std::set<int>{p.phi(v[1])}, "B-v2");
  }
  claim_step(c, p, "claim");
}

// The case analysis can run out of colors on v1 when phi*(v2) already
// exists and phi*(v1) does not; the pair search below covers that.
inline void extend_combine(const config& c, painter& p) {
  const coloring start = p.snapshot();
  try {
    combine_by_cases(c, p);
    if (!verify_pcf(p.g(), p.snapshot())) return;
  } catch (const extension_failed&) {
  }
  const vertex v1 = c.role("v1");
  const vertex v2 = c.role("v2");
  for (int a = 1; a <= p.colors(); ++a) {
    for (int b = 1; b <= p.colors(); ++b) {
      if (a == b) continue;
      p.restore(start);
      try {
        p.assign(v1, a, "search-v1");
        p.assign(v2, b, "search-v2");
        claim_step(c, p, "claim");
        if (!verify_pcf(p.g(), p.snapshot())) return;
      } catch (const extension_failed&) {
      }
    }
  }
  p.restore(start);
  throw extension_failed("Combine/search", "no pair of colors on v1 and v2 extends");
}

// N'_i(v): for each i-neighbor, one neighbor other than v, preferring a
// colored one.
inline std::vector<vertex> far_side(const painter& p, vertex v, const std::vector<vertex>& ws) {
  std::vector<vertex> out;
  for (vertex w : ws) {
    vertex pick = -1;
    for (vertex q : p.g().neighbors(w)) {
      if (q == v) continue;
      if (pick < 0 || (p.colored(q) && !p.colored(pick))) pick = q;
    }
    if (pick >= 0) out.push_back(pick);
  }
  return out;
}

// The 2-neighbor part shared by TwoNeighbor and TwoThreeNeighbor: a first
// 2-neighbor u0 becomes a unique color at v, the others avoid it.
inline void color_two_neighbors(painter& p, vertex v, const std::vector<vertex>& n2,
                                const std::vector<vertex>& heavy, const std::string& tag) {
  const graph& g = p.g();
  vertex u0 = n2.front();
  vertex u0f = other_neighbor(g, u0, v);
  p.paint(u0, p.phis(heavy) | std::set<int>{p.phi(v), p.phi(u0f), p.star(u0f)}, tag + "-u0");
  for (std::size_t i = 1; i < n2.size(); ++i) {
    vertex u = n2[i];
    if (p.colored(u)) continue;
    vertex uf = other_neighbor(g, u, v);
    p.paint(u, {p.phi(uf), p.star(uf), p.phi(v), p.phi(u0)}, tag + "-u");
  }
}

inline void extend_two_neighbor(const config& c, painter& p) {
  const graph& g = p.g();
  vertex v = c.role("v");
  auto n2 = neighbors_of_degree(g, v, 2);
  auto n3p = neighbors_of_degree_at_least(g, v, 3);
  auto far2 = far_side(p, v, n2);
  p.paint(v, p.phis(far2) | p.phis(n3p) | p.stars(n3p), "v");
  color_two_neighbors(p, v, n2, n3p, "n2");
}

inline void extend_two_three_neighbor(const config& c, painter& p) {
  const graph& g = p.g();
  vertex v = c.role("v");
  auto n2 = neighbors_of_degree(g, v, 2);
  auto n3 = neighbors_of_degree(g, v, 3);
  auto n4p = neighbors_of_degree_at_least(g, v, 4);
  auto far2 = far_side(p, v, n2);
  auto far3 = far_side(p, v, n3);
  p.paint(v, p.phis(far2) | p.phis(far3) | p.phis(n4p) | p.stars(n4p), "v");
  if (!n2.empty()) {
    color_two_neighbors(p, v, n2, n4p, "n2");
  } else {
    p.greedy(n3.front(), "w0", {}, p.phis(n4p));
  }
  for (vertex w : n3) {
    if (!p.colored(w)) p.greedy(w, "n3");
  }
}

inline void extend_bad_vertex_terrible(const config& c, painter& p) {
  const graph& g = p.g();
  vertex v = c.role("v");
  auto n2 = neighbors_of_degree(g, v, 2);
  auto n3 = neighbors_of_degree(g, v, 3);
  auto n4p = neighbors_of_degree_at_least(g, v, 4);
  const auto& xs = c.roles("X");
  auto far2 = far_side(p, v, n2);
  auto far3 = far_side(p, v, n3);
  p.paint(v, p.phis(far2) | p.phis(far3) | p.phis(n4p) | p.stars(minus(n4p, detail::as_set(xs))),
          "v");
  for (vertex x : xs) {
    const auto& walk = c.roles("face:" + std::to_string(x));
    if (walk.size() != 5) continue;
    vertex u1 = walk[1];
    vertex u2 = walk[2];
    vertex u3 = walk[3];
    if (g.degree(u1) != 2 || g.degree(u3) != 2) continue;
    p.erase(u3);
    if (!p.colored(u1)) {
      auto extra = p.star(v) ? std::set<int>{} : p.phis(p.nbrs(v));
      if (!p.star(u2)) extra = extra | p.phis(p.nbrs(u2));
      p.greedy(u1, "u1", extra);
    }
    p.greedy(u3, "u3", p.star(x) ? std::set<int>{} : p.phis(p.nbrs(x)));
  }
  for (vertex w : c.deletion) {
    if (!p.colored(w)) p.greedy(w, "rest");
  }
}

}  // namespace detail

/// Extends a PCF coloring of g - S to all of g by the procedure that proves
/// the configuration reducible. The result is re-verified before returning.
inline coloring extend(const config& cfg, const graph& g, int colors, const coloring& phi) {
  coloring out = phi;
  out.set_palette(colors);
  for (vertex v : cfg.deletion) out.erase(v);
  detail::painter p(g, out, colors, to_string(cfg.kind));
  switch (cfg.kind) {
    case config_kind::deg1: detail::extend_deg1(cfg, p); break;
    case config_kind::three_vx_two_thread: detail::extend_three_vx_two_thread(cfg, p); break;
    case config_kind::four_thread: detail::extend_four_thread(cfg, p); break;
    case config_kind::thread_lemma: detail::extend_thread_lemma(cfg, p); break;
    case config_kind::combine: detail::extend_combine(cfg, p); break;
    case config_kind::two_neighbor: detail::extend_two_neighbor(cfg, p); break;
    case config_kind::two_three_neighbor: detail::extend_two_three_neighbor(cfg, p); break;
    case config_kind::bad_vertex_terrible: detail::extend_bad_vertex_terrible(cfg, p); break;
  }
  for (vertex v : cfg.deletion) {
    if (!out.has(v)) {
      throw extension_failed(std::string(to_string(cfg.kind)) + "/complete",
                             "vertex " + std::to_string(v) + " left uncolored");
    }
  }
  if (auto bad = verify_pcf(g, out)) {
    throw extension_failed(std::string(to_string(cfg.kind)) + "/verify", bad->describe());
  }
  return out;
}

}  // namespace pcf
