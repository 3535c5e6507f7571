/*
Copyright 2026 The metricdim Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "metricdim/error.hpp"
#include "metricdim/graph.hpp"

namespace metricdim {

/// Distance between vertices in different components. Large, but far enough
/// from INT_MAX that adding small constants cannot overflow.
inline constexpr int unreachable = std::numeric_limits<int>::max() / 4;

/// All-pairs hop distances.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int n)
      : n_(n), d_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), unreachable) {}

  int order() const noexcept { return n_; }
  int operator()(int u, int v) const { return d_[index(u, v)]; }
  int& at(int u, int v) { return d_[index(u, v)]; }

  /// Largest finite entry, or `unreachable` if any pair is disconnected.
  int max_entry() const {
    int best = 0;
    for (int x : d_) best = std::max(best, x);
    return best;
  }

  bool operator==(const DistanceMatrix&) const = default;

 private:
  std::size_t index(int u, int v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }

  int n_ = 0;
  std::vector<int> d_;
};

/// Distance layers from `source`: result[v] = d(source, v).
inline std::vector<int> bfs_from(const Graph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), unreachable);
  VertexSet seen = VertexSet::single(source);
  VertexSet frontier = seen;
  for (int level = 0; !frontier.empty(); ++level) {
    VertexSet next;
    for (int v : frontier) {
      dist[v] = level;
      next |= g.neighbors(v);
    }
    frontier = next - seen;
    seen |= frontier;
  }
  return dist;
}

/// Checks symmetry, zero diagonal, d = 1 exactly on edges and the triangle
/// inequality over reachable pairs.
inline bool distance_invariants_hold(const Graph& g, const DistanceMatrix& d) {
  const int n = g.order();
  if (d.order() != n) return false;
  for (int u = 0; u < n; ++u) {
    if (d(u, u) != 0) return false;
    for (int v = 0; v < n; ++v) {
      if (d(u, v) != d(v, u)) return false;
      if ((d(u, v) == 1) != g.adjacent(u, v)) return false;
      if (d(u, v) == unreachable) continue;
      for (int w = 0; w < n; ++w)
        if (d(u, w) != unreachable && d(w, v) != unreachable && d(u, v) > d(u, w) + d(w, v))
          return false;
    }
  }
  return true;
}

inline DistanceMatrix bfs_all_pairs(const Graph& g) {
  DistanceMatrix d(g.order());
  for (int s = 0; s < g.order(); ++s) {
    const std::vector<int> row = bfs_from(g, s);
    for (int v = 0; v < g.order(); ++v) d.at(s, v) = row[v];
  }
#ifdef METRICDIM_CHECK_INVARIANTS
  if (!distance_invariants_hold(g, d)) throw error("bfs_all_pairs: distance invariants violated");
#endif
  return d;
}

inline void require_connected(const Graph& g, const char* what) {
  if (!g.connected()) throw disconnected_graph(std::string(what) + ": graph is disconnected");
}

inline int diameter(const Graph& g, const DistanceMatrix& d) {
  require_connected(g, "diameter");
  return d.max_entry();
}

inline int diameter(const Graph& g) { return diameter(g, bfs_all_pairs(g)); }

/// d(e, v) = min(d(x, v), d(y, v)) for e = {x, y}.
inline int edge_vertex_distance(const DistanceMatrix& d, const Edge& e, int v) {
  return std::min(d(e.u, v), d(e.v, v));
}

}  // namespace metricdim
