#pragma once

#include <map>
#include <set>
#include <vector>

#include "pcf/graph.hpp"
#include "pcf/plane_graph.hpp"

namespace pcf {

struct face_class {
  bool five = false;
  bool terrible = false;
  vertex_set giving;  // 4+-vertices with a boundary 3+-neighbor on the face
};

struct vertex_class {
  int n2 = 0;
  int n3 = 0;
  bool bad = false;
  bool good = false;
  std::set<std::size_t> fstar5;  // F*5(v)
  vertex_set x;                  // boundary 3+-neighbors on incident terrible faces
  int t() const { return static_cast<int>(x.size()); }
};

struct planar_classification {
  std::vector<face_class> faces;
  std::map<vertex, vertex_class> vertices;
};

/// Boundary neighbors of v on face f, one pair per occurrence of v in the walk.
inline std::vector<std::pair<vertex, vertex>> boundary_neighbors(const face& f, vertex v) {
  std::vector<std::pair<vertex, vertex>> out;
  const auto& w = f.walk;
  const std::size_t k = w.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (w[i] == v) out.emplace_back(w[(i + k - 1) % k], w[(i + 1) % k]);
  }
  return out;
}

inline planar_classification classify(const plane_graph& pg) {
  const graph& g = pg.underlying();
  planar_classification out;
  const auto& faces = pg.faces();
  out.faces.resize(faces.size());
  std::map<vertex, std::set<std::size_t>> incident;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const auto& f = faces[i];
    auto& fc = out.faces[i];
    fc.five = f.length() == 5;
    vertex_set on(f.walk.begin(), f.walk.end());
    for (vertex v : on) incident[v].insert(i);
    if (fc.five && on.size() == 5) {
      int twos = 0;
      int small = 0;
      for (vertex v : on) {
        twos += g.degree(v) == 2;
        small += g.degree(v) >= 3 && g.degree(v) <= 8;
      }
      fc.terrible = twos == 2 && small == 3;
    }
    for (vertex v : on) {
      if (g.degree(v) < 4) continue;
      for (auto [a, b] : boundary_neighbors(f, v)) {
        if (g.degree(a) >= 3 || g.degree(b) >= 3) fc.giving.insert(v);
      }
    }
  }
  for (vertex v : g.vertices()) {
    auto& vc = out.vertices[v];
    vc.n2 = count_neighbors_of_degree(g, v, 2);
    vc.n3 = count_neighbors_of_degree(g, v, 3);
    for (std::size_t i : incident[v]) {
      if (out.faces[i].five && out.faces[i].giving.count(v)) vc.fstar5.insert(i);
      if (!out.faces[i].terrible) continue;
      for (auto [a, b] : boundary_neighbors(faces[i], v)) {
        if (g.degree(a) >= 3) vc.x.insert(a);
        if (g.degree(b) >= 3) vc.x.insert(b);
      }
    }
    int d = g.degree(v);
    int f5 = static_cast<int>(vc.fstar5.size());
    vc.bad = (d == 4 && vc.n2 == 1) || (d == 5 && vc.n2 == 2 && f5 == 5) || (d == 5 && vc.n2 == 3);
    vc.good = d >= 4 && !vc.bad;
  }
  return out;
}

}  // namespace pcf
