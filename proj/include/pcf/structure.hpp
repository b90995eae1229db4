#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <queue>
#include <tuple>
#include <utility>
#include <vector>

#include "pcf/graph.hpp"

namespace pcf {

/// Length of a shortest cycle; nullopt for forests.
inline std::optional<int> girth(const graph& g) {
  std::optional<int> best;
  for (vertex root : g.vertices()) {
    std::map<vertex, int> dist;
    std::map<vertex, vertex> parent;
    std::queue<vertex> frontier;
    dist[root] = 0;
    parent[root] = -1;
    frontier.push(root);
    while (!frontier.empty()) {
      vertex v = frontier.front();
      frontier.pop();
      if (best && 2 * dist[v] + 1 >= *best) break;
      for (vertex w : g.neighbors(v)) {
        auto it = dist.find(w);
        if (it == dist.end()) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          frontier.push(w);
        } else if (parent[v] != w) {
          int len = dist[v] + it->second + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

/// A maximal path of 2-vertices. `ends` are the non-2 vertices next to the
/// first and last path vertex; a thread that is a whole cycle component of
/// 2-vertices has no ends.
struct thread {
  std::vector<vertex> path;
  std::optional<std::pair<vertex, vertex>> ends;

  bool is_cycle() const { return !ends.has_value(); }
  int length() const { return static_cast<int>(path.size()); }
};

/// All maximal threads, ordered by their smallest 2-vertex.
inline std::vector<thread> enumerate_threads(const graph& g) {
  std::vector<thread> out;
  vertex_set seen;
  for (vertex s : g.vertices()) {
    if (g.degree(s) != 2 || seen.count(s)) continue;
    // Walk from s away from `from` while staying on 2-vertices.
    auto walk = [&](vertex from, std::vector<vertex>& acc) -> std::optional<vertex> {
      vertex prev = s;
      vertex cur = from;
      while (g.degree(cur) == 2) {
        if (cur == s) return std::nullopt;  // closed up: all-2 cycle
        acc.push_back(cur);
        vertex next = other_neighbor(g, cur, prev);
        prev = cur;
        cur = next;
      }
      return cur;
    };
    const auto& nbrs = g.neighbors(s);
    vertex left = *nbrs.begin();
    vertex right = *std::next(nbrs.begin());
    std::vector<vertex> left_part;
    std::vector<vertex> right_part;
    auto left_end = walk(left, left_part);
    thread t;
    if (!left_end) {
      t.path.push_back(s);
      t.path.insert(t.path.end(), left_part.begin(), left_part.end());
    } else {
      auto right_end = walk(right, right_part);
      std::reverse(left_part.begin(), left_part.end());
      t.path = left_part;
      t.path.push_back(s);
      t.path.insert(t.path.end(), right_part.begin(), right_part.end());
      vertex a = *left_end;
      vertex b = *right_end;
      if (a > b || (a == b && t.path.front() > t.path.back())) {
        std::reverse(t.path.begin(), t.path.end());
        std::swap(a, b);
      }
      t.ends = std::make_pair(a, b);
    }
    seen.insert(t.path.begin(), t.path.end());
    out.push_back(std::move(t));
  }
  return out;
}

/// Per-vertex thread queries on top of enumerate_threads.
class thread_index {
 public:
  explicit thread_index(const graph& g) : threads_(enumerate_threads(g)) {
    for (std::size_t i = 0; i < threads_.size(); ++i) {
      const auto& t = threads_[i];
      for (vertex v : t.path) thread_of_[v] = i;
      if (t.ends) {
        ends_at_[t.ends->first].push_back({i, true});
        ends_at_[t.ends->second].push_back({i, false});
      }
    }
  }

  struct incidence {
    std::size_t thread;
    bool at_front;  // the end sits next to path.front()
  };

  const std::vector<thread>& threads() const { return threads_; }

  std::optional<std::size_t> thread_of(vertex v) const {
    auto it = thread_of_.find(v);
    if (it == thread_of_.end()) return std::nullopt;
    return it->second;
  }

  /// Thread ends at v. A thread with both ends at v appears twice.
  std::vector<incidence> ends_at(vertex v) const {
    auto it = ends_at_.find(v);
    return it == ends_at_.end() ? std::vector<incidence>{} : it->second;
  }

  /// Number of maximal k-threads with an end at v (counted per end).
  int count_adjacent(vertex v, int k) const {
    int n = 0;
    for (auto inc : ends_at(v)) n += threads_[inc.thread].length() == k;
    return n;
  }

  /// 2-vertices lying on threads that end at v.
  vertex_set close_neighbors(vertex v) const {
    vertex_set out;
    for (auto inc : ends_at(v)) {
      const auto& p = threads_[inc.thread].path;
      out.insert(p.begin(), p.end());
    }
    return out;
  }

 private:
  std::vector<thread> threads_;
  std::map<vertex, std::size_t> thread_of_;
  std::map<vertex, std::vector<incidence>> ends_at_;
};

/// Some chordless 5-cycle, listed in cyclic order starting at its smallest id.
inline std::optional<std::array<vertex, 5>> find_induced_c5(const graph& g) {
  for (vertex a : g.vertices()) {
    for (vertex b : g.neighbors(a)) {
      if (b <= a) continue;
      for (vertex c : g.neighbors(b)) {
        if (c <= a || g.has_edge(a, c)) continue;
        for (vertex d : g.neighbors(c)) {
          if (d <= a || d == b || g.has_edge(a, d) || g.has_edge(b, d)) continue;
          for (vertex e : g.neighbors(d)) {
            if (e <= b || e == c || !g.has_edge(a, e)) continue;
            if (g.has_edge(b, e) || g.has_edge(c, e)) continue;
            return std::array<vertex, 5>{a, b, c, d, e};
          }
        }
      }
    }
  }
  return std::nullopt;
}

/// Branch vertices of a K*_k plus one middle vertex per branch pair.
struct kstar_witness {
  std::vector<vertex> branch;
  std::vector<std::tuple<vertex, vertex, vertex>> middles;  // (a, b, middle), a < b
};

namespace detail {

// Kuhn's augmenting paths: pair i may use any middle in options[i].
inline bool assign_middles(const std::vector<std::vector<vertex>>& options,
                           std::vector<vertex>& chosen) {
  std::map<vertex, std::size_t> owner;
  std::vector<vertex> pick(options.size(), -1);
  for (std::size_t i = 0; i < options.size(); ++i) {
    vertex_set visited;
    auto augment = [&](auto&& self, std::size_t p) -> bool {
      for (vertex m : options[p]) {
        if (!visited.insert(m).second) continue;
        auto it = owner.find(m);
        if (it == owner.end() || self(self, it->second)) {
          owner[m] = p;
          pick[p] = m;
          return true;
        }
      }
      return false;
    };
    if (!augment(augment, i)) return false;
  }
  chosen = pick;
  return true;
}

}  // namespace detail

/// Exhaustive backtracking search for a K*_k subgraph (not necessarily
/// induced). Branch vertices are chosen in increasing id order with degree
/// pruning; middles are matched to branch pairs by bipartite matching.
inline std::optional<kstar_witness> find_kstar_subgraph(const graph& g, int k) {
  if (k < 3) throw error(errc::precondition, "find_kstar_subgraph needs k >= 3");
  std::vector<vertex> candidates;
  for (vertex v : g.vertices()) {
    if (g.degree(v) >= k - 1) candidates.push_back(v);
  }
  if (static_cast<int>(candidates.size()) < k) return std::nullopt;

  auto common = [&](vertex a, vertex b) {
    std::vector<vertex> out;
    for (vertex m : g.neighbors(a)) {
      if (g.has_edge(b, m)) out.push_back(m);
    }
    return out;
  };

  std::vector<vertex> chosen;
  std::optional<kstar_witness> found;

  auto matchable = [&](std::vector<std::tuple<vertex, vertex>>& pairs,
                       std::vector<vertex>& picks) {
    vertex_set branch(chosen.begin(), chosen.end());
    std::vector<std::vector<vertex>> options;
    pairs.clear();
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      for (std::size_t j = i + 1; j < chosen.size(); ++j) {
        std::vector<vertex> opts;
        for (vertex m : common(chosen[i], chosen[j])) {
          if (!branch.count(m)) opts.push_back(m);
        }
        if (opts.empty()) return false;
        pairs.emplace_back(chosen[i], chosen[j]);
        options.push_back(std::move(opts));
      }
    }
    return detail::assign_middles(options, picks);
  };

  auto search = [&](auto&& self, std::size_t from) -> bool {
    std::vector<std::tuple<vertex, vertex>> pairs;
    std::vector<vertex> picks;
    if (!chosen.empty() && !matchable(pairs, picks)) return false;
    if (static_cast<int>(chosen.size()) == k) {
      kstar_witness w;
      w.branch = chosen;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        w.middles.emplace_back(std::get<0>(pairs[i]), std::get<1>(pairs[i]), picks[i]);
      }
      found = std::move(w);
      return true;
    }
    std::size_t need = static_cast<std::size_t>(k) - chosen.size();
    for (std::size_t i = from; i + need <= candidates.size(); ++i) {
      vertex v = candidates[i];
      bool ok = true;
      for (vertex b : chosen) {
        // A middle for (b, v) must exist outside the branch set.
        bool any = false;
        for (vertex m : common(b, v)) {
          if (m != v && std::find(chosen.begin(), chosen.end(), m) == chosen.end()) {
            any = true;
            break;
          }
        }
        if (!any) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(v);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  search(search, 0);
  return found;
}

/// Recognizes the 1-subdivision of a simple r-regular graph, r >= 3. Returns
/// the contracted graph (branch vertices keep their ids) and r.
inline std::optional<std::pair<graph, int>> recognize_one_subdivision_of_regular(const graph& g) {
  if (g.empty()) throw error(errc::precondition, "recognition needs a nonempty graph");
  int r = -1;
  for (vertex v : g.vertices()) {
    if (g.degree(v) != 2) {
      r = g.degree(v);
      break;
    }
  }
  if (r < 3) return std::nullopt;
  graph base;
  for (vertex v : g.vertices()) {
    int d = g.degree(v);
    if (d == 2) {
      vertex a = *g.neighbors(v).begin();
      vertex b = *std::next(g.neighbors(v).begin());
      if (g.degree(a) != r || g.degree(b) != r) return std::nullopt;
      if (base.has_edge(a, b)) return std::nullopt;
      base.add_edge(a, b);
    } else if (d == r) {
      for (vertex w : g.neighbors(v)) {
        if (g.degree(w) != 2) return std::nullopt;
      }
      base.add_vertex(v);
    } else {
      return std::nullopt;
    }
  }
  return std::make_pair(std::move(base), r);
}

/// True when the graph is one cycle (connected, every vertex of degree 2).
inline bool is_cycle_graph(const graph& g) {
  if (g.vertex_count() < 3) return false;
  for (vertex v : g.vertices()) {
    if (g.degree(v) != 2) return false;
  }
  return g.connected();
}

/// Vertices of a cycle graph in cyclic order, starting at the smallest id and
/// continuing towards its smaller neighbor.
inline std::vector<vertex> cycle_order(const graph& g) {
  std::vector<vertex> order;
  vertex start = g.vertices().front();
  vertex prev = start;
  vertex cur = *g.neighbors(start).begin();
  order.push_back(start);
  while (cur != start) {
    order.push_back(cur);
    vertex next = other_neighbor(g, cur, prev);
    prev = cur;
    cur = next;
  }
  return order;
}

inline bool is_forest(const graph& g) {
  return g.edge_count() + g.components().size() == g.vertex_count();
}

}  // namespace pcf
