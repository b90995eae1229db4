#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pcf/errors.hpp"

namespace pcf {

using vertex = std::int64_t;
using vertex_set = std::set<vertex>;
using edge = std::pair<vertex, vertex>;

/// Simple undirected graph over arbitrary non-negative integer ids.
///
/// Adjacency is kept in ordered sets, so every iteration order in the library
/// (and therefore every tie-break) is by increasing vertex id.
class graph {
 public:
  graph() = default;

  void add_vertex(vertex v) {
    if (v < 0) throw error(errc::validity, "negative vertex id " + std::to_string(v));
    adjacency_.try_emplace(v);
  }

  /// Rejects self-loops and parallel edges.
  void add_edge(vertex u, vertex v) {
    if (u == v) throw error(errc::validity, "self-loop at " + std::to_string(u));
    add_vertex(u);
    add_vertex(v);
    if (!adjacency_[u].insert(v).second) {
      throw error(errc::validity,
                  "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    adjacency_[v].insert(u);
    ++edge_count_;
  }

  bool has_vertex(vertex v) const { return adjacency_.count(v) != 0; }

  bool has_edge(vertex u, vertex v) const {
    auto it = adjacency_.find(u);
    return it != adjacency_.end() && it->second.count(v) != 0;
  }

  const vertex_set& neighbors(vertex v) const {
    auto it = adjacency_.find(v);
    if (it == adjacency_.end()) {
      throw error(errc::precondition, "unknown vertex " + std::to_string(v));
    }
    return it->second;
  }

  int degree(vertex v) const { return static_cast<int>(neighbors(v).size()); }

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return adjacency_.empty(); }

  std::vector<vertex> vertices() const {
    std::vector<vertex> out;
    out.reserve(adjacency_.size());
    for (const auto& [v, _] : adjacency_) out.push_back(v);
    return out;
  }

  /// Edges as (u, v) with u < v, sorted.
  std::vector<edge> edges() const {
    std::vector<edge> out;
    out.reserve(edge_count_);
    for (const auto& [u, nbrs] : adjacency_) {
      for (vertex v : nbrs) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  int max_degree() const {
    int best = 0;
    for (const auto& [_, nbrs] : adjacency_) best = std::max(best, static_cast<int>(nbrs.size()));
    return best;
  }

  vertex max_id() const { return adjacency_.empty() ? -1 : adjacency_.rbegin()->first; }

  /// The graph with `removed` deleted.
  graph without(const vertex_set& removed) const {
    graph out;
    for (const auto& [v, nbrs] : adjacency_) {
      if (removed.count(v)) continue;
      out.add_vertex(v);
      for (vertex w : nbrs) {
        if (v < w && !removed.count(w)) out.add_edge(v, w);
      }
    }
    return out;
  }

  graph induced(const vertex_set& keep) const {
    graph out;
    for (vertex v : keep) {
      if (!has_vertex(v)) continue;
      out.add_vertex(v);
      for (vertex w : neighbors(v)) {
        if (v < w && keep.count(w)) out.add_edge(v, w);
      }
    }
    return out;
  }

  /// Connected components, each as a vertex set, ordered by smallest member.
  std::vector<vertex_set> components() const {
    std::vector<vertex_set> out;
    vertex_set seen;
    for (const auto& [start, _] : adjacency_) {
      if (seen.count(start)) continue;
      vertex_set comp;
      std::queue<vertex> frontier;
      frontier.push(start);
      seen.insert(start);
      while (!frontier.empty()) {
        vertex v = frontier.front();
        frontier.pop();
        comp.insert(v);
        for (vertex w : neighbors(v)) {
          if (seen.insert(w).second) frontier.push(w);
        }
      }
      out.push_back(std::move(comp));
    }
    return out;
  }

  bool connected() const { return components().size() <= 1; }

  friend bool operator==(const graph& a, const graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::map<vertex, vertex_set> adjacency_;
  std::size_t edge_count_ = 0;
};

inline graph graph_from_edges(const std::vector<edge>& edges) {
  graph g;
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

// Neighborhood bookkeeping: N_d(v), n_d(v), n_{d+}(v), n_{d-}(v).

inline std::vector<vertex> neighbors_of_degree(const graph& g, vertex v, int d) {
  std::vector<vertex> out;
  for (vertex w : g.neighbors(v)) {
    if (g.degree(w) == d) out.push_back(w);
  }
  return out;
}

inline std::vector<vertex> neighbors_of_degree_at_least(const graph& g, vertex v, int d) {
  std::vector<vertex> out;
  for (vertex w : g.neighbors(v)) {
    if (g.degree(w) >= d) out.push_back(w);
  }
  return out;
}

inline int count_neighbors_of_degree(const graph& g, vertex v, int d) {
  int n = 0;
  for (vertex w : g.neighbors(v)) n += g.degree(w) == d;
  return n;
}

inline int count_neighbors_of_degree_at_least(const graph& g, vertex v, int d) {
  int n = 0;
  for (vertex w : g.neighbors(v)) n += g.degree(w) >= d;
  return n;
}

/// The neighbor of a 2-vertex `v` other than `from`.
inline vertex other_neighbor(const graph& g, vertex v, vertex from) {
  for (vertex w : g.neighbors(v)) {
    if (w != from) return w;
  }
  throw error(errc::precondition, "vertex " + std::to_string(v) + " has no second neighbor");
}

/// Vertices within distance `radius` of any vertex in `sources`.
inline vertex_set ball(const graph& g, const vertex_set& sources, int radius) {
  vertex_set seen;
  std::vector<vertex> layer;
  for (vertex s : sources) {
    if (g.has_vertex(s) && seen.insert(s).second) layer.push_back(s);
  }
  for (int r = 0; r < radius; ++r) {
    std::vector<vertex> next;
    for (vertex v : layer) {
      for (vertex w : g.neighbors(v)) {
        if (seen.insert(w).second) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  return seen;
}

}  // namespace pcf
