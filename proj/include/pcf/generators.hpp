#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "pcf/graph.hpp"
#include "pcf/mad.hpp"
#include "pcf/plane_graph.hpp"
#include "pcf/rational.hpp"
#include "pcf/structure.hpp"

// Test-corpus generators. Unless noted, vertices are numbered 0..n-1.

namespace pcf::gen {

namespace detail {

inline void require(bool ok, const char* what) {
  if (!ok) throw error(errc::precondition, what);
}

inline std::map<vertex, std::pair<double, double>> on_circle(int n, double radius,
                                                             double phase = 0.0) {
  std::map<vertex, std::pair<double, double>> at;
  for (int i = 0; i < n; ++i) {
    double a = phase + 2.0 * std::numbers::pi * i / n;
    at[i] = {radius * std::cos(a), radius * std::sin(a)};
  }
  return at;
}

}  // namespace detail

/// C_n, edges i ~ i+1 mod n.
inline graph cycle(int n) {
  detail::require(n >= 3, "cycle needs n >= 3");
  graph g;
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

/// P_n on n vertices, edges i ~ i+1.
inline graph path(int n) {
  detail::require(n >= 1, "path needs n >= 1");
  graph g;
  g.add_vertex(0);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline graph complete(int n) {
  detail::require(n >= 1, "complete graph needs n >= 1");
  graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(i);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

/// Replaces every edge uv by a path u-m-v. Existing ids are kept; middles are
/// numbered max_id+1, ... in sorted edge order.
inline graph one_subdivision(const graph& g) {
  graph out;
  for (vertex v : g.vertices()) out.add_vertex(v);
  vertex next = g.max_id() + 1;
  for (auto [u, v] : g.edges()) {
    out.add_edge(u, next);
    out.add_edge(next, v);
    ++next;
  }
  return out;
}

/// K*_k: branch vertices 0..k-1, then one middle per pair (i, j), i < j, in
/// lexicographic order starting at k.
inline graph kstar(int k) {
  detail::require(k >= 2, "kstar needs k >= 2");
  return one_subdivision(complete(k));
}

/// Uniform random recursive tree: vertex i > 0 attaches to a uniform j < i.
inline graph random_tree(int n, std::uint64_t seed) {
  detail::require(n >= 1, "random_tree needs n >= 1");
  std::mt19937_64 rng(seed);
  graph g;
  g.add_vertex(0);
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    g.add_edge(pick(rng), i);
  }
  return g;
}

/// Dodecahedron as a plane graph: outer pentagon 0..4, middle 10-cycle
/// 5..14, inner pentagon 15..19 (Schlegel drawing).
inline plane_graph dodecahedron_plane() {
  graph g;
  std::map<vertex, std::pair<double, double>> at;
  auto put = [&](vertex v, double r, double turns) {
    double a = 2.0 * std::numbers::pi * turns;
    at[v] = {r * std::cos(a), r * std::sin(a)};
  };
  for (int i = 0; i < 5; ++i) {
    put(i, 3.0, i / 5.0);
    put(15 + i, 1.0, (2 * i + 1) / 10.0);
  }
  for (int j = 0; j < 10; ++j) put(5 + j, 2.0, j / 10.0);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, 5 + 2 * i);
    g.add_edge(5 + 2 * i + 1, 15 + i);
    g.add_edge(15 + i, 15 + (i + 1) % 5);
  }
  for (int j = 0; j < 10; ++j) g.add_edge(5 + j, 5 + (j + 1) % 10);
  return embed_from_coordinates(g, at);
}

inline graph dodecahedron() { return dodecahedron_plane().underlying(); }

/// C_n drawn as a convex polygon.
inline plane_graph cycle_plane(int n) {
  return embed_from_coordinates(cycle(n), detail::on_circle(n, 1.0));
}

/// 1-subdivision of a plane graph, numbered as one_subdivision().
inline plane_graph one_subdivision(const plane_graph& pg) {
  const graph& g = pg.underlying();
  std::map<std::pair<vertex, vertex>, vertex> middle;
  vertex next = g.max_id() + 1;
  for (auto [u, v] : g.edges()) {
    middle[{u, v}] = next;
    middle[{v, u}] = next;
    ++next;
  }
  std::map<vertex, std::vector<vertex>> rot;
  for (const auto& [v, order] : pg.rotations()) {
    auto& r = rot[v];
    for (vertex w : order) r.push_back(middle.at({v, w}));
  }
  for (auto [u, v] : g.edges()) rot[middle.at({u, v})] = {u, v};
  return plane_graph(std::move(rot));
}

/// G(n, m) thinned until mad <= cap: while the bound fails, a uniformly
/// chosen edge of a densest subgraph is removed.
inline graph random_sparse(int n, const rational& mad_cap, std::uint64_t seed,
                           std::optional<std::size_t> edges = std::nullopt) {
  detail::require(n >= 1, "random_sparse needs n >= 1");
  detail::require(mad_cap >= rational(0), "random_sparse needs a non-negative mad cap");
  std::mt19937_64 rng(seed);
  std::size_t max_edges = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t m = edges.value_or(static_cast<std::size_t>(
      boost::rational_cast<double>(mad_cap) * n / 2.0 + 0.5));
  m = std::min(m, max_edges);
  std::set<edge> chosen;
  std::uniform_int_distribution<int> pick(0, n - 1);
  while (chosen.size() < m) {
    int a = pick(rng);
    int b = pick(rng);
    if (a == b) continue;
    chosen.insert({std::min(a, b), std::max(a, b)});
  }
  auto build = [&] {
    graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(i);
    for (auto [a, b] : chosen) g.add_edge(a, b);
    return g;
  };
  graph g = build();
  while (!mad_at_most(g, mad_cap)) {
    auto dense = mad_exact(g).witness;
    std::vector<edge> inside;
    for (auto e : chosen) {
      if (dense.count(e.first) && dense.count(e.second)) inside.push_back(e);
    }
    std::uniform_int_distribution<std::size_t> which(0, inside.size() - 1);
    chosen.erase(inside[which(rng)]);
    g = build();
  }
  return g;
}

/// Random simple r-regular graph by sequential stub pairing: each step joins
/// two random open stubs whose vertices are distinct and not yet adjacent,
/// restarting when no such pair is left.
inline graph random_regular(int n, int r, std::uint64_t seed) {
  detail::require(n > r && r >= 0 && (static_cast<long>(n) * r) % 2 == 0,
                  "random_regular needs n > r and n*r even");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<int> stubs;
    for (int v = 0; v < n; ++v) {
      for (int k = 0; k < r; ++k) stubs.push_back(v);
    }
    graph g;
    for (int v = 0; v < n; ++v) g.add_vertex(v);
    bool ok = true;
    while (!stubs.empty() && ok) {
      std::uniform_int_distribution<std::size_t> pick(0, stubs.size() - 1);
      ok = false;
      for (int tries = 0; tries < 64 && !ok; ++tries) {
        std::size_t i = pick(rng);
        std::size_t j = pick(rng);
        int a = stubs[i];
        int b = stubs[j];
        if (i == j || a == b || g.has_edge(a, b)) continue;
        g.add_edge(a, b);
        if (i < j) std::swap(i, j);
        stubs.erase(stubs.begin() + static_cast<std::ptrdiff_t>(i));
        stubs.erase(stubs.begin() + static_cast<std::ptrdiff_t>(j));
        ok = true;
      }
    }
    if (ok) return g;
  }
  throw error(errc::precondition, "random_regular failed to find a simple graph");
}

/// Random outerplanar plane graph with every bounded face of length at least
/// `min_face` (hence girth >= min_face): a convex polygon on `outer` vertices
/// is dissected by random non-crossing chords, then `leaves` pendant vertices
/// are attached outside the polygon. Polygon vertices are 0..outer-1.
inline plane_graph random_outerplanar(int outer, int leaves, std::uint64_t seed, int min_face = 5) {
  detail::require(outer >= min_face && min_face >= 3, "polygon smaller than the minimum face");
  std::mt19937_64 rng(seed);
  graph g;
  for (int i = 0; i < outer; ++i) g.add_edge(i, (i + 1) % outer);
  std::vector<std::vector<int>> pending{{}};
  for (int i = 0; i < outer; ++i) pending.front().push_back(i);
  std::bernoulli_distribution split(0.8);
  while (!pending.empty()) {
    auto f = std::move(pending.back());
    pending.pop_back();
    int len = static_cast<int>(f.size());
    if (len < 2 * min_face - 2 || !split(rng)) continue;
    // Chord f[a]-f[b] gives faces of b-a+1 and len-(b-a)+1 vertices.
    std::vector<std::pair<int, int>> options;
    for (int a = 0; a < len; ++a) {
      for (int b = a + 1; b < len; ++b) {
        if (b - a + 1 >= min_face && len - (b - a) + 1 >= min_face) options.emplace_back(a, b);
      }
    }
    std::uniform_int_distribution<std::size_t> which(0, options.size() - 1);
    auto [a, b] = options[which(rng)];
    g.add_edge(f[a], f[b]);
    std::vector<int> left(f.begin() + a, f.begin() + b + 1);
    std::vector<int> right(f.begin() + b, f.end());
    right.insert(right.end(), f.begin(), f.begin() + a + 1);
    pending.push_back(std::move(left));
    pending.push_back(std::move(right));
  }
  auto at = detail::on_circle(outer, 1.0);
  std::uniform_int_distribution<int> host(0, outer - 1);
  std::map<int, int> per_host;
  for (int k = 0; k < leaves; ++k) {
    int h = host(rng);
    int slot = per_host[h]++;
    vertex leaf = outer + k;
    double a = 2.0 * std::numbers::pi * h / outer + (slot - 2) * 0.05 / outer;
    at[leaf] = {1.5 * std::cos(a), 1.5 * std::sin(a)};
    g.add_edge(h, leaf);
  }
  return embed_from_coordinates(g, at);
}

/// Adds `ears` random paths inside faces of pg. Each ear joins two vertices
/// of one face by a path of 1..3 new vertices, chosen so that both resulting
/// faces have length at least `min_face`; ears that would shorten the girth
/// below `min_face` are rejected and redrawn. New ids follow the old ones.
inline plane_graph grow_ears(const plane_graph& pg, int ears, std::uint64_t seed, int min_face = 5) {
  std::mt19937_64 rng(seed);
  plane_graph cur = pg;
  int rejected = 0;
  for (int added = 0; added < ears;) {
    detail::require(rejected < 1000 * (ears + 1), "grow_ears found no admissible ear");
    const auto& faces = cur.faces();
    if (faces.empty()) break;
    const auto& walk = faces[std::uniform_int_distribution<std::size_t>(0, faces.size() - 1)(rng)].walk;
    const int len = static_cast<int>(walk.size());
    std::uniform_int_distribution<int> pos(0, len - 1);
    int i = pos(rng);
    int j = pos(rng);
    if (i > j) std::swap(i, j);
    int inner = std::uniform_int_distribution<int>(1, 3)(rng);
    vertex a = walk[i];
    vertex b = walk[j];
    if (a == b || (j - i) + inner + 1 < min_face || (len - (j - i)) + inner + 1 < min_face) {
      ++rejected;
      continue;
    }
    auto rot = cur.rotations();
    std::vector<vertex> path{a};
    vertex next = cur.underlying().max_id() + 1;
    for (int k = 0; k < inner; ++k) path.push_back(next++);
    path.push_back(b);
    auto insert_after = [&](vertex at, vertex after, vertex added_nbr) {
      auto& r = rot[at];
      r.insert(std::find(r.begin(), r.end(), after) + 1, added_nbr);
    };
    insert_after(a, walk[(i + len - 1) % len], path[1]);
    insert_after(b, walk[(j + len - 1) % len], path[path.size() - 2]);
    for (std::size_t k = 1; k + 1 < path.size(); ++k) rot[path[k]] = {path[k - 1], path[k + 1]};
    plane_graph grown(std::move(rot));
    if (auto gi = girth(grown.underlying()); gi && *gi < min_face) {
      ++rejected;
      continue;
    }
    cur = std::move(grown);
    ++added;
  }
  return cur;
}

}  // namespace pcf::gen
