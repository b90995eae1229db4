#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace pcf {

/// Dinic's algorithm on integer capacities.
class max_flow {
 public:
  using capacity = std::int64_t;
  static constexpr capacity infinite = std::numeric_limits<capacity>::max() / 4;

  explicit max_flow(std::size_t nodes) : adj_(nodes), level_(nodes), cursor_(nodes) {}

  void add_arc(std::size_t from, std::size_t to, capacity cap) {
    adj_[from].push_back(arcs_.size());
    arcs_.push_back({to, cap});
    adj_[to].push_back(arcs_.size());
    arcs_.push_back({from, 0});
  }

  capacity run(std::size_t source, std::size_t sink) {
    capacity total = 0;
    while (build_levels(source, sink)) {
      std::fill(cursor_.begin(), cursor_.end(), 0);
      while (capacity pushed = push(source, sink, infinite)) total += pushed;
    }
    return total;
  }

  /// Nodes reachable from `source` in the residual network (source side of a
  /// minimum cut once run() has finished).
  std::vector<bool> source_side(std::size_t source) const {
    std::vector<bool> seen(adj_.size(), false);
    std::vector<std::size_t> stack{source};
    seen[source] = true;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto id : adj_[v]) {
        const auto& a = arcs_[id];
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = true;
          stack.push_back(a.to);
        }
      }
    }
    return seen;
  }

 private:
  struct arc {
    std::size_t to;
    capacity cap;
  };

  bool build_levels(std::size_t source, std::size_t sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[source] = 0;
    q.push(source);
    while (!q.empty()) {
      auto v = q.front();
      q.pop();
      for (auto id : adj_[v]) {
        const auto& a = arcs_[id];
        if (a.cap > 0 && level_[a.to] < 0) {
          level_[a.to] = level_[v] + 1;
          q.push(a.to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  capacity push(std::size_t v, std::size_t sink, capacity limit) {
    if (v == sink) return limit;
    for (auto& i = cursor_[v]; i < adj_[v].size(); ++i) {
      auto id = adj_[v][i];
      auto& a = arcs_[id];
      if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
      if (capacity got = push(a.to, sink, std::min(limit, a.cap))) {
        a.cap -= got;
        arcs_[id ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<arc> arcs_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace pcf
