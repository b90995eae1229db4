#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pcf/errors.hpp"
#include "pcf/graph.hpp"
#include "pcf/planar.hpp"
#include "pcf/plane_graph.hpp"
#include "pcf/structure.hpp"

namespace pcf {

enum class config_kind {
  deg1,
  three_vx_two_thread,
  four_thread,
  thread_lemma,
  combine,
  two_neighbor,
  two_three_neighbor,
  bad_vertex_terrible,
};

inline const char* to_string(config_kind k) {
  switch (k) {
    case config_kind::deg1: return "Deg1";
    case config_kind::three_vx_two_thread: return "ThreeVxTwoThread";
    case config_kind::four_thread: return "FourThread";
    case config_kind::thread_lemma: return "ThreadLemma";
    case config_kind::combine: return "Combine";
    case config_kind::two_neighbor: return "TwoNeighbor";
    case config_kind::two_three_neighbor: return "TwoThreeNeighbor";
    case config_kind::bad_vertex_terrible: return "BadVertexTerrible";
  }
  return "?";
}

enum class reduce_mode { sparse, planar7 };

/// One reducible configuration found in a graph.
///
/// Roles by kind:
///   Deg1               v, u
///   ThreeVxTwoThread   u1, v1, v2, u2
///   FourThread         u1, v1, v2, v3, v4, u2
///   ThreadLemma        v, d, u, x, y, z, T1 (2-neighbors off 2-threads), T2
///   Combine            v1, v2
///   TwoNeighbor        v
///   TwoThreeNeighbor   v
///   BadVertexTerrible  v, X, and face:<x> = v u1 u2 u3 x for each x in X
struct config {
  config_kind kind{};
  vertex anchor = -1;
  std::map<std::string, std::vector<vertex>> actors;
  vertex_set deletion;

  vertex role(const std::string& name) const {
    auto it = actors.find(name);
    if (it == actors.end() || it->second.empty()) {
      throw error(errc::precondition, std::string(to_string(kind)) + " has no role " + name);
    }
    return it->second.front();
  }

  const std::vector<vertex>& roles(const std::string& name) const {
    static const std::vector<vertex> none;
    auto it = actors.find(name);
    return it == actors.end() ? none : it->second;
  }

  std::string describe() const {
    std::string out = to_string(kind);
    for (const auto& [name, ids] : actors) {
      out += " " + name + "=";
      for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? "," : "") + std::to_string(ids[i]);
    }
    out += " S=";
    bool first = true;
    for (vertex v : deletion) {
      out += (first ? "" : ",") + std::to_string(v);
      first = false;
    }
    return out;
  }
};

namespace detail {

inline int n_deg(const graph& g, vertex v, int d) { return count_neighbors_of_degree(g, v, d); }

inline vertex_set as_set(const std::vector<vertex>& vs) { return vertex_set(vs.begin(), vs.end()); }

// Candidates within one kind are ranked by their role ids in role order.
inline std::vector<vertex> rank_key(const config& c, const std::vector<std::string>& order) {
  std::vector<vertex> key{c.anchor};
  for (const auto& r : order) {
    for (vertex v : c.roles(r)) key.push_back(v);
  }
  return key;
}

using sink = std::function<bool(config&&)>;  // returns true to stop

inline bool emit_ranked(std::vector<config>& found, const std::vector<std::string>& order,
                        const sink& out) {
  std::stable_sort(found.begin(), found.end(), [&](const config& a, const config& b) {
    return rank_key(a, order) < rank_key(b, order);
  });
  for (auto& c : found) {
    if (out(std::move(c))) return true;
  }
  return false;
}

inline bool find_deg1(const graph& g, const sink& out) {
  for (vertex v : g.vertices()) {
    if (g.degree(v) != 1) continue;
    config c{config_kind::deg1, v, {{"v", {v}}, {"u", {*g.neighbors(v).begin()}}}, {v}};
    if (out(std::move(c))) return true;
  }
  return false;
}

inline bool find_three_vx_two_thread(const graph& g, const sink& out) {
  std::vector<config> found;
  for (vertex u1 : g.vertices()) {
    if (g.degree(u1) != 3) continue;
    for (vertex v1 : g.neighbors(u1)) {
      if (g.degree(v1) != 2) continue;
      vertex v2 = other_neighbor(g, v1, u1);
      if (g.degree(v2) != 2 || v2 == u1) continue;
      vertex u2 = other_neighbor(g, v2, v1);
      found.push_back({config_kind::three_vx_two_thread, u1,
                       {{"u1", {u1}}, {"v1", {v1}}, {"v2", {v2}}, {"u2", {u2}}},
                       {v1, v2}});
    }
  }
  return emit_ranked(found, {"v1", "v2"}, out);
}

inline bool find_four_thread(const graph& g, const sink& out) {
  std::vector<config> found;
  for (const auto& t : enumerate_threads(g)) {
    const auto& p = t.path;
    const int n = t.length();
    if (n < 4) continue;
    std::vector<std::array<vertex, 6>> windows;
    if (t.is_cycle()) {
      if (n < 6) continue;
      for (int i = 0; i < n; ++i) {
        windows.push_back({p[(i + n - 1) % n], p[i], p[(i + 1) % n], p[(i + 2) % n],
                           p[(i + 3) % n], p[(i + 4) % n]});
      }
    } else {
      // Walk the thread with its ends attached.
      std::vector<vertex> ext{t.ends->first};
      ext.insert(ext.end(), p.begin(), p.end());
      ext.push_back(t.ends->second);
      for (std::size_t i = 0; i + 5 < ext.size(); ++i) {
        windows.push_back({ext[i], ext[i + 1], ext[i + 2], ext[i + 3], ext[i + 4], ext[i + 5]});
      }
    }
    for (auto w : windows) {
      if (w[0] == w[5]) continue;
      if (w[1] > w[4]) std::reverse(w.begin(), w.end());
      vertex_set s{w[1], w[2], w[3], w[4]};
      found.push_back({config_kind::four_thread, w[1],
                       {{"u1", {w[0]}}, {"v1", {w[1]}}, {"v2", {w[2]}}, {"v3", {w[3]}},
                        {"v4", {w[4]}}, {"u2", {w[5]}}},
                       s});
    }
  }
  return emit_ranked(found, {"v2", "v3", "v4"}, out);
}

inline bool find_thread_lemma(const graph& g, const sink& out) {
  for (vertex v : g.vertices()) {
    const int d = g.degree(v);
    if (d != 4 && d != 5) continue;
    int n3p = count_neighbors_of_degree_at_least(g, v, 3);
    std::vector<vertex> t1;
    vertex_set t2;
    int two_threads = 0;
    for (vertex w : neighbors_of_degree(g, v, 2)) {
      vertex w2 = other_neighbor(g, w, v);
      if (g.degree(w2) == 2) {
        ++two_threads;
        t2.insert(w);
        t2.insert(w2);
      } else {
        t1.push_back(w);
      }
    }
    if (two_threads < 3 * d + n3p - 10) continue;
    for (vertex u : neighbors_of_degree(g, v, 2)) {
      vertex x = other_neighbor(g, u, v);
      if (g.degree(x) != 2) continue;
      vertex y = other_neighbor(g, x, u);
      if (g.degree(y) != 2 || y == v) continue;
      vertex z = other_neighbor(g, y, x);
      if (g.degree(z) == 2) continue;
      vertex_set s(t1.begin(), t1.end());
      s.insert(t2.begin(), t2.end());
      s.insert(v);
      s.insert(y);
      config c{config_kind::thread_lemma, v,
               {{"v", {v}}, {"d", {d}}, {"u", {u}}, {"x", {x}}, {"y", {y}}, {"z", {z}},
                {"T1", t1}, {"T2", std::vector<vertex>(t2.begin(), t2.end())}},
               s};
      if (out(std::move(c))) return true;
    }
  }
  return false;
}

inline bool find_two_neighbor(const graph& g, int colors, const sink& out) {
  for (vertex v : g.vertices()) {
    auto n2 = neighbors_of_degree(g, v, 2);
    if (n2.empty() || 2 * g.degree(v) > static_cast<int>(n2.size()) + colors - 1) continue;
    vertex_set s = as_set(n2);
    s.insert(v);
    if (out({config_kind::two_neighbor, v, {{"v", {v}}}, s})) return true;
  }
  return false;
}

inline bool find_two_three_neighbor(const graph& g, int colors, const sink& out) {
  for (vertex v : g.vertices()) {
    auto n2 = neighbors_of_degree(g, v, 2);
    auto n3 = neighbors_of_degree(g, v, 3);
    int k = static_cast<int>(n2.size() + n3.size());
    if (k == 0 || 2 * g.degree(v) > k + colors - 1) continue;
    vertex_set s = as_set(n2);
    s.insert(n3.begin(), n3.end());
    s.insert(v);
    if (out({config_kind::two_three_neighbor, v, {{"v", {v}}}, s})) return true;
  }
  return false;
}

inline bool find_combine(const graph& g, int colors, const sink& out) {
  for (vertex v1 : g.vertices()) {
    const int d1 = g.degree(v1);
    if (d1 < 3) continue;
    const int a1 = n_deg(g, v1, 2);
    if (2 * d1 - a1 - 2 > colors - 1) continue;
    for (vertex v2 : g.neighbors(v1)) {
      const int d2 = g.degree(v2);
      if (d2 < 3) continue;
      const int a2 = n_deg(g, v2, 2);
      if (2 * d2 - a2 - 2 > colors - 2) continue;
      if (d1 != 3 && !(a1 >= 1 && a2 >= 1)) continue;
      vertex_set s{v1, v2};
      for (vertex w : neighbors_of_degree(g, v1, 2)) s.insert(w);
      for (vertex w : neighbors_of_degree(g, v2, 2)) s.insert(w);
      if (out({config_kind::combine, v1, {{"v1", {v1}}, {"v2", {v2}}}, s})) return true;
    }
  }
  return false;
}

// The face v u1 u2 u3 x of a terrible face with v and x consecutive.
inline std::optional<std::vector<vertex>> terrible_walk(const plane_graph& pg,
                                                        const planar_classification& pc,
                                                        vertex v, vertex x) {
  const auto& faces = pg.faces();
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (!pc.faces[i].terrible) continue;
    const auto& w = faces[i].walk;
    for (std::size_t j = 0; j < 5; ++j) {
      if (w[j] != v) continue;
      if (w[(j + 4) % 5] == x) {
        return std::vector<vertex>{v, w[(j + 1) % 5], w[(j + 2) % 5], w[(j + 3) % 5], x};
      }
      if (w[(j + 1) % 5] == x) {
        return std::vector<vertex>{v, w[(j + 4) % 5], w[(j + 3) % 5], w[(j + 2) % 5], x};
      }
    }
  }
  return std::nullopt;
}

inline bool find_bad_vertex_terrible(const plane_graph& pg, const planar_classification& pc,
                                     const sink& out) {
  const graph& g = pg.underlying();
  for (vertex v : g.vertices()) {
    const auto& vc = pc.vertices.at(v);
    if (!vc.bad || 2 * g.degree(v) - vc.n2 - vc.n3 - vc.t() > 6) continue;
    vertex_set s{v};
    for (vertex w : g.neighbors(v)) {
      if (g.degree(w) == 2 || g.degree(w) == 3) s.insert(w);
    }
    config c{config_kind::bad_vertex_terrible, v,
             {{"v", {v}}, {"X", std::vector<vertex>(vc.x.begin(), vc.x.end())}},
             s};
    for (vertex x : vc.x) {
      if (auto walk = terrible_walk(pg, pc, v, x)) c.actors["face:" + std::to_string(x)] = *walk;
    }
    if (out(std::move(c))) return true;
  }
  return false;
}

inline void scan_configs(const graph& g, int colors, reduce_mode mode, const plane_graph* pg,
                         const sink& out) {
  if (find_deg1(g, out)) return;
  if (mode == reduce_mode::planar7) {
    if (find_two_three_neighbor(g, colors, out)) return;
    if (find_combine(g, colors, out)) return;
    auto pc = classify(*pg);
    find_bad_vertex_terrible(*pg, pc, out);
    return;
  }
  if (colors == 4) {
    if (find_three_vx_two_thread(g, out)) return;
    if (find_four_thread(g, out)) return;
    find_thread_lemma(g, out);
    return;
  }
  if (find_two_neighbor(g, colors, out)) return;
  if (colors >= 7 && find_two_three_neighbor(g, colors, out)) return;
  find_combine(g, colors, out);
}

inline void check_mode(const graph& g, int colors, reduce_mode mode, const plane_graph* pg) {
  if (colors < 4) throw error(errc::precondition, "configurations need at least 4 colors");
  if (mode == reduce_mode::planar7) {
    if (!pg) throw error(errc::precondition, "planar mode needs an embedding");
    if (colors != 7) throw error(errc::precondition, "planar mode works with 7 colors");
    if (!(pg->underlying() == g)) throw error(errc::precondition, "embedding does not match graph");
  } else if (pg) {
    throw error(errc::precondition, "an embedding is only used in planar mode");
  }
}

}  // namespace detail

/// The first reducible configuration of g in priority order: kinds in the
/// listed order, then smallest actor ids.
inline std::optional<config> find_config(const graph& g, int colors,
                                         reduce_mode mode = reduce_mode::sparse,
                                         const plane_graph* pg = nullptr) {
  detail::check_mode(g, colors, mode, pg);
  std::optional<config> first;
  detail::scan_configs(g, colors, mode, pg, [&](config&& c) {
    first = std::move(c);
    return true;
  });
  return first;
}

/// Every applicable configuration, in priority order.
inline std::vector<config> find_configs(const graph& g, int colors,
                                        reduce_mode mode = reduce_mode::sparse,
                                        const plane_graph* pg = nullptr) {
  detail::check_mode(g, colors, mode, pg);
  std::vector<config> all;
  auto collect = [&](config&& c) {
    all.push_back(std::move(c));
    return false;
  };
  detail::scan_configs(g, colors, mode, pg, collect);
  return all;
}

}  // namespace pcf
