#pragma once

#include <charconv>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pcf/coloring.hpp"
#include "pcf/graph.hpp"
#include "pcf/plane_graph.hpp"

// Text formats.
//
// Edge list:      "u v" per line; a single id "v" declares an isolated vertex;
//                 an optional header "p <n> <m>" creates vertices 0..n-1 and
//                 requires every id to be below n and exactly m edges.
// Rotation:       "v: a b c" per vertex, neighbors in clockwise order.
// Coloring:       "v color" per line.
// Everywhere, blank lines and lines starting with '#' are ignored.

namespace pcf {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline bool skippable(std::string_view line) {
  auto fields = split_ws(line);
  return fields.empty() || fields.front().front() == '#';
}

inline long long parse_count(std::string_view tok, std::size_t line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0) {
    throw parse_error(line_no, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return value;
}

template <typename F>
void for_each_line(std::string_view text, F&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto line = text.substr(pos, end - pos);
    if (!skippable(line)) fn(line, line_no);
    pos = end + 1;
  }
}

// Re-raise validity errors with the offending line attached.
template <typename F>
void at_line(std::size_t line_no, F&& fn) {
  try {
    fn();
  } catch (const parse_error&) {
    throw;
  } catch (const error& e) {
    if (e.code() != errc::validity) throw;
    throw error(errc::validity, "line " + std::to_string(line_no) + ": " + e.what());
  }
}

}  // namespace detail

inline graph parse_graph(std::string_view text) {
  graph g;
  std::optional<std::pair<long long, long long>> header;
  detail::for_each_line(text, [&](std::string_view line, std::size_t no) {
    auto f = detail::split_ws(line);
    if (f.front() == "p") {
      if (header) throw parse_error(no, "second header line");
      if (f.size() != 3) throw parse_error(no, "header must be 'p <n> <m>'");
      header = std::make_pair(detail::parse_count(f[1], no), detail::parse_count(f[2], no));
      return;
    }
    if (f.size() == 1) {
      auto v = detail::parse_count(f[0], no);
      detail::at_line(no, [&] { g.add_vertex(v); });
      return;
    }
    if (f.size() != 2) throw parse_error(no, "expected 'u v'");
    auto u = detail::parse_count(f[0], no);
    auto v = detail::parse_count(f[1], no);
    detail::at_line(no, [&] { g.add_edge(u, v); });
  });
  if (header) {
    auto [n, m] = *header;
    if (g.max_id() >= n) {
      throw error(errc::validity, "vertex id " + std::to_string(g.max_id()) +
                                      " exceeds header count " + std::to_string(n));
    }
    if (static_cast<long long>(g.edge_count()) != m) {
      throw error(errc::validity, "header declares " + std::to_string(m) + " edges, found " +
                                      std::to_string(g.edge_count()));
    }
    for (long long v = 0; v < n; ++v) g.add_vertex(v);
  }
  return g;
}

/// Writes the header when ids are exactly 0..n-1, else explicit isolated ids.
inline std::string emit_graph(const graph& g) {
  std::ostringstream out;
  bool dense_ids = g.empty() || g.max_id() + 1 == static_cast<vertex>(g.vertex_count());
  if (dense_ids) {
    out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  } else {
    for (vertex v : g.vertices()) {
      if (g.degree(v) == 0) out << v << '\n';
    }
  }
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

inline plane_graph parse_plane_graph(std::string_view text) {
  std::map<vertex, std::vector<vertex>> rot;
  detail::for_each_line(text, [&](std::string_view line, std::size_t no) {
    auto colon = line.find(':');
    if (colon == std::string_view::npos) throw parse_error(no, "expected 'v: neighbors...'");
    auto head = detail::split_ws(line.substr(0, colon));
    if (head.size() != 1) throw parse_error(no, "expected a single vertex before ':'");
    auto v = detail::parse_count(head[0], no);
    if (rot.count(v)) throw parse_error(no, "vertex " + std::to_string(v) + " listed twice");
    auto& order = rot[v];
    for (auto tok : detail::split_ws(line.substr(colon + 1))) {
      order.push_back(detail::parse_count(tok, no));
    }
  });
  return plane_graph(std::move(rot));
}

inline std::string emit_plane_graph(const plane_graph& pg) {
  std::ostringstream out;
  for (const auto& [v, order] : pg.rotations()) {
    out << v << ':';
    for (vertex w : order) out << ' ' << w;
    out << '\n';
  }
  return out.str();
}

inline coloring parse_coloring(std::string_view text, int palette) {
  coloring phi(palette);
  detail::for_each_line(text, [&](std::string_view line, std::size_t no) {
    auto f = detail::split_ws(line);
    if (f.size() != 2) throw parse_error(no, "expected 'v color'");
    auto v = detail::parse_count(f[0], no);
    auto c = detail::parse_count(f[1], no);
    if (phi.has(v)) throw parse_error(no, "vertex " + std::to_string(v) + " colored twice");
    phi.set(v, static_cast<int>(c));
  });
  return phi;
}

inline std::string emit_coloring(const coloring& phi) {
  std::ostringstream out;
  for (const auto& [v, c] : phi.assignment()) out << v << ' ' << c << '\n';
  return out.str();
}

inline std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace pcf
