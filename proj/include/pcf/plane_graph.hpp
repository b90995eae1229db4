#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pcf/graph.hpp"

namespace pcf {

/// A face as the closed walk of vertices met along its boundary. The walk
/// v0 v1 ... v(k-1) uses darts (v0,v1), ..., (v(k-1),v0); its length is k.
struct face {
  std::vector<vertex> walk;

  int length() const { return static_cast<int>(walk.size()); }
};

/// A graph with a rotation system.
///
/// `rotation(v)` lists the neighbors of v in clockwise order. Faces are traced
/// with the rule: the dart following (u, v) is (v, w) where w is the neighbor
/// that follows u in rotation(v), cyclically. Every dart lies on exactly one
/// face, so the face lengths sum to 2|E|.
class plane_graph {
 public:
  plane_graph() = default;

  /// Validates the rotation system against edge symmetry, traces faces and
  /// checks Euler's formula on every component that has an edge.
  explicit plane_graph(std::map<vertex, std::vector<vertex>> rotation)
      : rotation_(std::move(rotation)) {
    for (const auto& [v, order] : rotation_) {
      graph_.add_vertex(v);
      std::set<vertex> distinct(order.begin(), order.end());
      if (distinct.size() != order.size()) {
        throw error(errc::validity, "rotation of " + std::to_string(v) + " repeats a neighbor");
      }
      for (vertex w : order) {
        if (w == v) throw error(errc::validity, "self-loop at " + std::to_string(v));
        auto it = rotation_.find(w);
        if (it == rotation_.end() ||
            std::find(it->second.begin(), it->second.end(), v) == it->second.end()) {
          throw error(errc::validity, "rotation of " + std::to_string(v) + " names " +
                                          std::to_string(w) + ", which does not list it back");
        }
        if (v < w) graph_.add_edge(v, w);
      }
    }
    trace_faces();
    check_euler();
  }

  const graph& underlying() const { return graph_; }
  const std::map<vertex, std::vector<vertex>>& rotations() const { return rotation_; }
  const std::vector<vertex>& rotation(vertex v) const { return rotation_.at(v); }
  const std::vector<face>& faces() const { return faces_; }

  /// Index of the face containing dart (u, v).
  std::size_t face_of_dart(vertex u, vertex v) const { return dart_face_.at({u, v}); }

  /// Deleting vertices from an embedding leaves an embedding of the rest.
  plane_graph without(const vertex_set& removed) const {
    std::map<vertex, std::vector<vertex>> rot;
    for (const auto& [v, order] : rotation_) {
      if (removed.count(v)) continue;
      auto& kept = rot[v];
      for (vertex w : order) {
        if (!removed.count(w)) kept.push_back(w);
      }
    }
    return plane_graph(std::move(rot));
  }

  /// Restriction to one vertex set (typically a component).
  plane_graph induced(const vertex_set& keep) const {
    vertex_set removed;
    for (const auto& [v, _] : rotation_) {
      if (!keep.count(v)) removed.insert(v);
    }
    return without(removed);
  }

 private:
  vertex next_in_rotation(vertex v, vertex after) const {
    const auto& order = rotation_.at(v);
    auto it = std::find(order.begin(), order.end(), after);
    ++it;
    return it == order.end() ? order.front() : *it;
  }

  void trace_faces() {
    for (const auto& [u, order] : rotation_) {
      for (vertex v : order) {
        if (dart_face_.count({u, v})) continue;
        face f;
        std::size_t index = faces_.size();
        vertex a = u;
        vertex b = v;
        while (!dart_face_.count({a, b})) {
          dart_face_[{a, b}] = index;
          f.walk.push_back(a);
          vertex next = next_in_rotation(b, a);
          a = b;
          b = next;
        }
        faces_.push_back(std::move(f));
      }
    }
  }

  void check_euler() const {
    std::map<vertex, std::size_t> comp_of;
    auto comps = graph_.components();
    for (std::size_t i = 0; i < comps.size(); ++i) {
      for (vertex v : comps[i]) comp_of[v] = i;
    }
    std::vector<long> face_count(comps.size(), 0);
    for (const auto& f : faces_) ++face_count[comp_of.at(f.walk.front())];
    std::vector<long> edges(comps.size(), 0);
    for (auto [u, _] : graph_.edges()) ++edges[comp_of.at(u)];
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (edges[i] == 0) continue;
      long chi = static_cast<long>(comps[i].size()) - edges[i] + face_count[i];
      if (chi != 2) {
        throw error(errc::non_planar_embedding,
                    "component of vertex " + std::to_string(*comps[i].begin()) +
                        " has V - E + F = " + std::to_string(chi));
      }
    }
  }

  graph graph_;
  std::map<vertex, std::vector<vertex>> rotation_;
  std::vector<face> faces_;
  std::map<std::pair<vertex, vertex>, std::size_t> dart_face_;
};

/// Rotation system of a straight-line drawing: neighbors sorted clockwise by
/// angle around each vertex.
inline plane_graph embed_from_coordinates(const graph& g,
                                          const std::map<vertex, std::pair<double, double>>& at) {
  std::map<vertex, std::vector<vertex>> rot;
  for (vertex v : g.vertices()) {
    auto [x0, y0] = at.at(v);
    std::vector<std::pair<double, vertex>> by_angle;
    for (vertex w : g.neighbors(v)) {
      auto [x1, y1] = at.at(w);
      // Negated angle: increasing order is clockwise.
      by_angle.emplace_back(-std::atan2(y1 - y0, x1 - x0), w);
    }
    std::sort(by_angle.begin(), by_angle.end());
    auto& order = rot[v];
    for (auto& [_, w] : by_angle) order.push_back(w);
  }
  return plane_graph(std::move(rot));
}

}  // namespace pcf
