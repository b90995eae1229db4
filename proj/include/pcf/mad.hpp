#pragma once

#include <map>
#include <vector>

#include "pcf/graph.hpp"
#include "pcf/max_flow.hpp"
#include "pcf/rational.hpp"

namespace pcf {

struct mad_result {
  rational value;      // mad(G)
  vertex_set witness;  // induces a subgraph of average degree `value`
};

namespace detail {

struct density_probe {
  std::int64_t excess;  // max over H of q|E(H)| - p|V(H)|, H possibly empty
  vertex_set best;      // a maximizer
};

// Network: source -> edge node (q), edge node -> both endpoints (inf),
// vertex node -> sink (p). Max flow = q|E| - excess.
inline density_probe probe_density(const graph& g, const rational& density) {
  auto vs = g.vertices();
  auto es = g.edges();
  std::map<vertex, std::size_t> index;
  for (std::size_t i = 0; i < vs.size(); ++i) index[vs[i]] = i;
  const std::size_t source = 0;
  const std::size_t sink = 1;
  const std::size_t edge_base = 2;
  const std::size_t vertex_base = edge_base + es.size();
  max_flow net(vertex_base + vs.size());
  const auto p = density.numerator();
  const auto q = density.denominator();
  for (std::size_t i = 0; i < es.size(); ++i) {
    net.add_arc(source, edge_base + i, q);
    net.add_arc(edge_base + i, vertex_base + index[es[i].first], max_flow::infinite);
    net.add_arc(edge_base + i, vertex_base + index[es[i].second], max_flow::infinite);
  }
  for (std::size_t i = 0; i < vs.size(); ++i) net.add_arc(vertex_base + i, sink, p);
  auto flow = net.run(source, sink);
  density_probe out{q * static_cast<std::int64_t>(es.size()) - flow, {}};
  auto side = net.source_side(source);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (side[vertex_base + i]) out.best.insert(vs[i]);
  }
  return out;
}

inline std::int64_t induced_edges(const graph& g, const vertex_set& s) {
  std::int64_t m = 0;
  for (vertex v : s) {
    for (vertex w : g.neighbors(v)) m += v < w && s.count(w);
  }
  return m;
}

}  // namespace detail

/// Exact maximum average degree with a witness subgraph.
///
/// Dinkelbach iteration on the edge density |E(H)|/|V(H)|: starting from the
/// whole graph, one min-cut either certifies that no subgraph is denser than
/// the current candidate or returns a strictly denser one. Densities take
/// finitely many values, so the loop terminates at the exact optimum.
inline mad_result mad_exact(const graph& g) {
  if (g.empty()) throw error(errc::precondition, "mad of the null graph is undefined");
  vertex_set current;
  for (vertex v : g.vertices()) current.insert(v);
  rational density(static_cast<std::int64_t>(g.edge_count()),
                   static_cast<std::int64_t>(g.vertex_count()));
  if (g.edge_count() == 0) return {rational(0), {*current.begin()}};
  for (;;) {
    auto probe = detail::probe_density(g, density);
    if (probe.excess == 0) break;
    current = std::move(probe.best);
    density = rational(detail::induced_edges(g, current), static_cast<std::int64_t>(current.size()));
  }
  return {rational(2) * density, current};
}

/// mad(G) <= bound, by a single min-cut at density bound/2.
inline bool mad_at_most(const graph& g, const rational& bound) {
  if (bound < rational(0)) throw error(errc::precondition, "mad bound must be non-negative");
  if (g.edge_count() == 0) return true;
  return detail::probe_density(g, bound / rational(2)).excess == 0;
}

/// mad(G) < bound.
inline bool mad_below(const graph& g, const rational& bound) {
  if (g.empty()) return bound > rational(0);
  return mad_exact(g).value < bound;
}

}  // namespace pcf
