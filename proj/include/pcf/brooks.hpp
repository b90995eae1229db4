#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "pcf/coloring.hpp"
#include "pcf/graph.hpp"

namespace pcf {

namespace detail {

// BFS order of `comp` from root.
inline std::vector<vertex> bfs_order(const graph& g, vertex root, const vertex_set& skip = {}) {
  std::vector<vertex> order{root};
  vertex_set seen{root};
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (vertex w : g.neighbors(order[i])) {
      if (!skip.count(w) && seen.insert(w).second) order.push_back(w);
    }
  }
  return order;
}

inline void greedy_in_order(const graph& g, const std::vector<vertex>& order, coloring& phi) {
  for (vertex v : order) {
    std::set<int> used;
    for (vertex w : g.neighbors(v)) {
      if (phi.has(w)) used.insert(phi[w]);
    }
    int c = 1;
    while (used.count(c)) ++c;
    phi.set(v, c);
  }
}

// Greedy in reverse BFS order from root: every vertex but the root still has
// an uncolored neighbor (its BFS parent) when colored.
inline void color_towards(const graph& g, vertex root, coloring& phi, const vertex_set& skip = {}) {
  auto order = bfs_order(g, root, skip);
  std::reverse(order.begin(), order.end());
  greedy_in_order(g, order, phi);
}

inline std::optional<vertex> find_cut_vertex(const graph& g) {
  auto vs = g.vertices();
  if (vs.size() < 3) return std::nullopt;
  std::map<vertex, int> disc;
  std::map<vertex, int> low;
  int timer = 0;
  std::optional<vertex> found;
  auto dfs = [&](auto&& self, vertex v, vertex parent) -> void {
    disc[v] = low[v] = ++timer;
    int children = 0;
    for (vertex w : g.neighbors(v)) {
      if (w == parent) continue;
      if (disc.count(w)) {
        low[v] = std::min(low[v], disc[w]);
        continue;
      }
      ++children;
      self(self, w, v);
      low[v] = std::min(low[v], low[w]);
      if (parent != -1 && low[w] >= disc[v] && !found) found = v;
    }
    if (parent == -1 && children > 1 && !found) found = v;
  };
  dfs(dfs, vs.front(), -1);
  return found;
}

inline bool connected_without(const graph& g, const vertex_set& removed) {
  vertex start = -1;
  for (vertex v : g.vertices()) {
    if (!removed.count(v)) {
      start = v;
      break;
    }
  }
  if (start < 0) return true;
  auto order = bfs_order(g, start, removed);
  return order.size() + removed.size() == g.vertex_count();
}

// Proper k-coloring of one connected component with max degree <= k that is
// neither K_{k+1} nor (for k = 2) an odd cycle.
inline coloring brooks_component(const graph& h, int k) {
  coloring phi(k);
  auto vs = h.vertices();
  for (vertex v : vs) {
    if (h.degree(v) < k) {
      color_towards(h, v, phi);
      return phi;
    }
  }
  // k-regular from here on.
  if (k <= 2) {
    // Even cycle (k = 2); k = 1 and k = 0 are complete and rejected earlier.
    auto order = bfs_order(h, vs.front());
    std::map<vertex, int> depth{{vs.front(), 0}};
    for (vertex v : order) {
      for (vertex w : h.neighbors(v)) {
        if (!depth.count(w)) depth[w] = depth[v] + 1;
      }
    }
    for (vertex v : vs) phi.set(v, depth[v] % 2 + 1);
    return phi;
  }
  if (auto cut = find_cut_vertex(h)) {
    // Each side plus the cut vertex has the cut vertex at degree < k; color
    // the pieces independently and align the cut vertex's color.
    vertex x = *cut;
    graph rest = h.without({x});
    for (const auto& side : rest.components()) {
      vertex_set piece = side;
      piece.insert(x);
      graph sub = h.induced(piece);
      coloring part(k);
      color_towards(sub, x, part);
      int want = phi.has(x) ? phi[x] : part[x];
      int have = part[x];
      for (const auto& [v, c] : part.assignment()) {
        int mapped = c == have ? want : (c == want ? have : c);
        phi.set(v, mapped);
      }
    }
    return phi;
  }
  // 2-connected, k-regular, k >= 3, not complete: some y has non-adjacent
  // neighbors x, z with h - {x, z} connected. Color x and z alike, then go
  // greedily towards y.
  for (vertex y : vs) {
    const auto& ny = h.neighbors(y);
    for (auto ix = ny.begin(); ix != ny.end(); ++ix) {
      for (auto iz = std::next(ix); iz != ny.end(); ++iz) {
        vertex x = *ix;
        vertex z = *iz;
        if (h.has_edge(x, z) || !connected_without(h, {x, z})) continue;
        phi.set(x, 1);
        phi.set(z, 1);
        color_towards(h, y, phi, {x, z});
        return phi;
      }
    }
  }
  throw error(errc::brooks_precondition, "no Brooks triple found");
}

}  // namespace detail

/// Proper k-coloring of g by the constructive proof of Brooks' theorem.
inline coloring brooks_proper_color(const graph& g, int k) {
  coloring phi(k);
  if (g.max_degree() > k) {
    throw error(errc::brooks_precondition,
                "maximum degree " + std::to_string(g.max_degree()) + " exceeds " + std::to_string(k));
  }
  for (const auto& comp : g.components()) {
    graph h = g.induced(comp);
    std::string name = "component of vertex " + std::to_string(*comp.begin());
    bool regular = true;
    for (vertex v : comp) regular = regular && h.degree(v) == k;
    if (regular && static_cast<int>(comp.size()) == k + 1) {
      throw error(errc::brooks_precondition, name + " is K_" + std::to_string(k + 1));
    }
    if (regular && k == 2 && comp.size() % 2 == 1) {
      throw error(errc::brooks_precondition, name + " is an odd cycle");
    }
    phi.merge(detail::brooks_component(h, k));
  }
  return phi;
}

}  // namespace pcf
