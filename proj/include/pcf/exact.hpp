#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <future>
#include <map>
#include <optional>
#include <queue>
#include <thread>
#include <vector>

#include "pcf/coloring.hpp"
#include "pcf/graph.hpp"
#include "pcf/structure.hpp"

namespace pcf {

struct exact_options {
  std::size_t max_vertices = 24;
  /// Worker threads for branch exploration; results match the sequential run.
  unsigned threads = 1;
};

/// Smallest-last (degeneracy) order reversed: the vertex removed last is
/// colored first, so dense cores come early and neighborhoods close quickly.
inline std::vector<vertex> degeneracy_order(const graph& g) {
  std::map<vertex, int> deg;
  for (vertex v : g.vertices()) deg[v] = g.degree(v);
  std::set<std::pair<int, vertex>> queue;
  for (auto [v, d] : deg) queue.insert({d, v});
  std::vector<vertex> removal;
  vertex_set removed;
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removal.push_back(v);
    removed.insert(v);
    for (vertex w : g.neighbors(v)) {
      if (removed.count(w)) continue;
      queue.erase({deg[w], w});
      queue.insert({--deg[w], w});
    }
  }
  std::reverse(removal.begin(), removal.end());
  return removal;
}

namespace detail {

// Backtracking PCF colorer over compact indices.
//
// Colors are tried smallest first and a new color is opened only as
// (largest used + 1), which keeps the first solution found lexicographically
// first in the coloring order. A vertex whose neighbors are all colored must
// already see some color exactly once.
class pcf_search {
 public:
  pcf_search(const graph& g, int colors) : colors_(colors) {
    order_ = degeneracy_order(g);
    for (std::size_t i = 0; i < order_.size(); ++i) pos_[order_[i]] = i;
    n_ = order_.size();
    adj_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (vertex w : g.neighbors(order_[i])) adj_[i].push_back(pos_[w]);
    }
    reset();
  }

  std::size_t size() const { return n_; }

  void reset() {
    color_.assign(n_, 0);
    count_.assign(n_ * (colors_ + 1), 0);
    singles_.assign(n_, 0);
    open_.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) open_[i] = static_cast<int>(adj_[i].size());
  }

  /// Applies a fixed prefix of the coloring order; false if it already fails.
  bool apply_prefix(const std::vector<int>& prefix) {
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (!admissible(i, prefix[i])) return false;
      assign(i, prefix[i]);
      if (!closed_ok(i)) return false;
    }
    return true;
  }

  /// All admissible prefixes of the given depth, in lexicographic order.
  std::vector<std::vector<int>> prefixes(std::size_t depth) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, std::size_t i, int used) -> void {
      if (i == depth || i == n_) {
        out.push_back(cur);
        return;
      }
      for (int c = 1; c <= std::min(colors_, used + 1); ++c) {
        if (!admissible(i, c)) continue;
        assign(i, c);
        if (closed_ok(i)) {
          cur.push_back(c);
          self(self, i + 1, std::max(used, c));
          cur.pop_back();
        }
        unassign(i, c);
      }
    };
    rec(rec, 0, 0);
    return out;
  }

  /// Continues from the current state at position `start`.
  bool solve(std::size_t start, const std::atomic<bool>* cancel = nullptr) {
    int used = 0;
    for (std::size_t i = 0; i < start; ++i) used = std::max(used, color_[i]);
    return descend(start, used, cancel);
  }

  coloring result() const {
    coloring phi(colors_);
    for (std::size_t i = 0; i < n_; ++i) phi.set(order_[i], color_[i]);
    return phi;
  }

 private:
  int& count(std::size_t v, int c) { return count_[v * (colors_ + 1) + c]; }

  bool admissible(std::size_t v, int c) {
    for (auto w : adj_[v]) {
      if (color_[w] == c) return false;
    }
    return true;
  }

  void assign(std::size_t v, int c) {
    color_[v] = c;
    for (auto w : adj_[v]) {
      int& k = count(w, c);
      ++k;
      if (k == 1) ++singles_[w];
      if (k == 2) --singles_[w];
      --open_[w];
    }
  }

  void unassign(std::size_t v, int c) {
    for (auto w : adj_[v]) {
      int& k = count(w, c);
      if (k == 1) --singles_[w];
      if (k == 2) ++singles_[w];
      --k;
      ++open_[w];
    }
    color_[v] = 0;
  }

  bool closed_ok(std::size_t v) const {
    for (auto w : adj_[v]) {
      if (open_[w] == 0 && singles_[w] == 0) return false;
    }
    return true;
  }

  bool descend(std::size_t i, int used, const std::atomic<bool>* cancel) {
    if (i == n_) return true;
    if (cancel && cancel->load(std::memory_order_relaxed)) return false;
    for (int c = 1; c <= std::min(colors_, used + 1); ++c) {
      if (!admissible(i, c)) continue;
      assign(i, c);
      if (closed_ok(i) && descend(i + 1, std::max(used, c), cancel)) return true;
      unassign(i, c);
    }
    return false;
  }

  int colors_;
  std::size_t n_ = 0;
  std::vector<vertex> order_;
  std::map<vertex, std::size_t> pos_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> color_;
  std::vector<int> count_;
  std::vector<int> singles_;
  std::vector<int> open_;
};

inline void guard_size(const graph& g, const exact_options& opt) {
  if (g.vertex_count() > opt.max_vertices) {
    throw error(errc::too_large, std::to_string(g.vertex_count()) + " vertices exceed the limit of " +
                                     std::to_string(opt.max_vertices));
  }
}

}  // namespace detail

/// Some PCF c-coloring of g (the lexicographically first one in degeneracy
/// order), or nullopt when none exists. Exhaustive.
inline std::optional<coloring> pcf_color_exact(const graph& g, int colors,
                                               const exact_options& opt = {}) {
  detail::guard_size(g, opt);
  if (colors < 0) throw error(errc::precondition, "negative palette");
  if (g.empty()) return coloring(colors);
  if (colors == 0) return std::nullopt;

  if (opt.threads <= 1) {
    detail::pcf_search s(g, colors);
    if (!s.solve(0)) return std::nullopt;
    return s.result();
  }

  // Split on a prefix of the order and take the first successful prefix.
  detail::pcf_search root(g, colors);
  std::size_t depth = 0;
  std::vector<std::vector<int>> jobs{{}};
  while (depth < root.size() && jobs.size() < 8 * static_cast<std::size_t>(opt.threads)) {
    ++depth;
    root.reset();
    jobs = root.prefixes(depth);
    if (jobs.empty()) return std::nullopt;
  }
  std::vector<std::optional<coloring>> found(jobs.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{jobs.size()};
  std::atomic<bool> never{false};
  auto worker = [&] {
    detail::pcf_search s(g, colors);
    for (;;) {
      auto i = next.fetch_add(1);
      if (i >= jobs.size() || i > best.load()) return;
      s.reset();
      if (!s.apply_prefix(jobs[i])) continue;
      if (s.solve(jobs[i].size(), &never)) {
        found[i] = s.result();
        auto cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < opt.threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (auto& f : found) {
    if (f) return f;
  }
  return std::nullopt;
}

/// The proper conflict-free chromatic number by upward search over c.
inline int chi_pcf_exact(const graph& g, const exact_options& opt = {}) {
  detail::guard_size(g, opt);
  if (g.empty()) return 0;
  int c = g.edge_count() == 0 ? 1 : 2;
  while (!pcf_color_exact(g, c, opt)) ++c;
  return c;
}

/// Colors each tree component by depth mod 3 from its smallest leaf.
inline coloring tree_pcf3(const graph& t) {
  if (!is_forest(t)) throw error(errc::not_a_forest, "input contains a cycle");
  coloring phi(3);
  for (const auto& comp : t.components()) {
    vertex root = *comp.begin();
    for (vertex v : comp) {
      if (t.degree(v) <= 1) {
        root = v;
        break;
      }
    }
    std::map<vertex, int> depth{{root, 0}};
    std::queue<vertex> q;
    q.push(root);
    while (!q.empty()) {
      vertex v = q.front();
      q.pop();
      phi.set(v, depth[v] % 3 + 1);
      for (vertex w : t.neighbors(v)) {
        if (!depth.count(w)) {
          depth[w] = depth[v] + 1;
          q.push(w);
        }
      }
    }
  }
  return phi;
}

}  // namespace pcf
