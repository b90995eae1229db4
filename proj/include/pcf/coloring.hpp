#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pcf/graph.hpp"

namespace pcf {

/// Partial assignment vertex -> color in 1..palette.
class coloring {
 public:
  coloring() = default;
  explicit coloring(int palette) : palette_(palette) {}

  int palette() const { return palette_; }
  void set_palette(int c) { palette_ = c; }

  /// 0 when v is uncolored.
  int operator[](vertex v) const {
    auto it = colors_.find(v);
    return it == colors_.end() ? 0 : it->second;
  }

  bool has(vertex v) const { return colors_.count(v) != 0; }
  void set(vertex v, int color) { colors_[v] = color; }
  void erase(vertex v) { colors_.erase(v); }

  bool complete_on(const graph& g) const {
    for (vertex v : g.vertices()) {
      if (!has(v)) return false;
    }
    return true;
  }

  const std::map<vertex, int>& assignment() const { return colors_; }
  std::size_t size() const { return colors_.size(); }

  /// Copies every assignment of `other` into this coloring.
  void merge(const coloring& other) {
    for (const auto& [v, c] : other.colors_) colors_[v] = c;
  }

  friend bool operator==(const coloring& a, const coloring& b) {
    return a.palette_ == b.palette_ && a.colors_ == b.colors_;
  }

 private:
  int palette_ = 0;
  std::map<vertex, int> colors_;
};

/// Colors that occur exactly once among the colored neighbors of v, ascending.
inline std::vector<int> singleton_colors(const graph& g, const coloring& phi, vertex v) {
  std::map<int, int> count;
  for (vertex w : g.neighbors(v)) {
    if (int c = phi[w]) ++count[c];
  }
  std::vector<int> out;
  for (auto [c, n] : count) {
    if (n == 1) out.push_back(c);
  }
  return out;
}

/// The designated unique color of v: the smallest singleton color, or 0 when
/// no color occurs exactly once on the colored part of N(v).
inline int unique_color(const graph& g, const coloring& phi, vertex v) {
  auto s = singleton_colors(g, phi, v);
  return s.empty() ? 0 : s.front();
}

/// Per-vertex singleton sets. A vertex is absent when its set is empty.
using unique_color_map = std::map<vertex, std::vector<int>>;

inline unique_color_map unique_colors(const graph& g, const coloring& phi) {
  unique_color_map out;
  for (vertex v : g.vertices()) {
    auto s = singleton_colors(g, phi, v);
    if (!s.empty()) out.emplace(v, std::move(s));
  }
  return out;
}

struct violation {
  enum class kind { improper_edge, no_unique_color, color_out_of_range };

  kind what;
  vertex at;
  std::optional<vertex> other;  // second endpoint for improper_edge

  std::string describe() const {
    switch (what) {
      case kind::improper_edge:
        return "improper-edge " + std::to_string(at) + " " + std::to_string(*other);
      case kind::no_unique_color:
        return "no-unique-color " + std::to_string(at);
      case kind::color_out_of_range:
        return "color-out-of-range " + std::to_string(at);
    }
    return "unknown";
  }
};

/// nullopt when phi is a PCF coloring of g with colors in 1..palette; else the
/// first violation by vertex id. Isolated vertices are exempt from the unique
/// color condition.
inline std::optional<violation> verify_pcf(const graph& g, const coloring& phi) {
  for (vertex v : g.vertices()) {
    if (!phi.has(v)) {
      throw error(errc::incomplete_coloring, "vertex " + std::to_string(v) + " is uncolored");
    }
  }
  for (vertex v : g.vertices()) {
    if (phi[v] < 1 || phi[v] > phi.palette()) {
      return violation{violation::kind::color_out_of_range, v, std::nullopt};
    }
  }
  for (auto [u, v] : g.edges()) {
    if (phi[u] == phi[v]) return violation{violation::kind::improper_edge, u, v};
  }
  for (vertex v : g.vertices()) {
    if (g.degree(v) == 0) continue;
    if (unique_color(g, phi, v) == 0) return violation{violation::kind::no_unique_color, v, {}};
  }
  return std::nullopt;
}

/// Plain properness of a complete coloring.
inline bool is_proper(const graph& g, const coloring& phi) {
  for (auto [u, v] : g.edges()) {
    if (!phi.has(u) || !phi.has(v) || phi[u] == phi[v]) return false;
  }
  return true;
}

}  // namespace pcf
