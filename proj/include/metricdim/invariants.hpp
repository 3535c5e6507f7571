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

// Classical invariants: clique, star and balanced biclique sizes,
// degeneracy, greedy and exact colouring.

#include <algorithm>
#include <bit>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "metricdim/error.hpp"
#include "metricdim/graph.hpp"

namespace metricdim {

namespace detail {

inline void check_limit(const Graph& g, int limit, const char* what) {
  if (g.order() > limit)
    throw limit_exceeded(std::string(what) + ": n = " + std::to_string(g.order()) +
                         " exceeds limit " + std::to_string(limit));
}

// Branch and bound with a greedy colouring bound over bitsets.
class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  VertexSet run() {
    expand(VertexSet{}, g_.vertices());
    return best_;
  }

 private:
  void expand(VertexSet current, VertexSet candidates) {
    if (candidates.empty()) {
      if (current.size() > best_.size()) best_ = current;
      return;
    }
    // Colour classes in ascending vertex order; colours nondecreasing along `order`.
    std::vector<std::pair<int, int>> order;
    VertexSet uncoloured = candidates;
    for (int colour = 1; !uncoloured.empty(); ++colour) {
      VertexSet open = uncoloured;
      while (!open.empty()) {
        const int v = open.front();
        open -= g_.neighbors(v) | VertexSet::single(v);
        uncoloured.erase(v);
        order.emplace_back(v, colour);
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const auto [v, colour] = *it;
      if (current.size() + colour <= best_.size()) return;
      VertexSet with = current;
      with.insert(v);
      expand(with, candidates & g_.neighbors(v));
      candidates.erase(v);
    }
  }

  const Graph& g_;
  VertexSet best_;
};

}  // namespace detail

/// A maximum clique, certified by exhausted branch and bound.
inline VertexSet max_clique(const Graph& g, int limit = 64) {
  detail::check_limit(g, limit, "max_clique");
  return detail::CliqueSearch(g).run();
}

/// Largest n with K_{1,n} as a subgraph, i.e. the maximum degree.
inline int max_star(const Graph& g) { return g.max_degree(); }

namespace detail {

inline bool has_balanced_biclique(const Graph& g, int m, VertexSet pool, VertexSet chosen,
                                  VertexSet common) {
  if (chosen.size() == m) return true;
  for (int v : pool) {
    pool.erase(v);
    const VertexSet next_common = common & g.neighbors(v);
    if (next_common.size() < m) continue;
    // not enough vertices left to complete the side
    if (chosen.size() + 1 + pool.size() < m) return false;
    VertexSet next = chosen;
    next.insert(v);
    if (has_balanced_biclique(g, m, pool, next, next_common)) return true;
  }
  return false;
}

}  // namespace detail

/// Largest m <= cap such that K_{m,m} is a (not necessarily induced) subgraph.
/// Exhaustive; meant for small graphs.
inline int max_balanced_biclique(const Graph& g, int cap, int limit = 24) {
  detail::check_limit(g, limit, "max_balanced_biclique");
  int best = 0;
  for (int m = 1; m <= cap; ++m) {
    VertexSet pool;
    for (int v = 0; v < g.order(); ++v)
      if (g.degree(v) >= m) pool.insert(v);
    // B = common neighbourhood of A, disjoint from A since the graph has no loops
    if (!detail::has_balanced_biclique(g, m, pool, VertexSet{}, g.vertices())) break;
    best = m;
  }
  return best;
}

/// Iterated minimum-degree removal; returns the largest degree seen at removal.
inline int degeneracy(const Graph& g) {
  VertexSet alive = g.vertices();
  int result = 0;
  while (!alive.empty()) {
    int pick = -1;
    int pick_degree = Graph::max_order + 1;
    for (int v : alive) {
      const int d = (g.neighbors(v) & alive).size();
      if (d < pick_degree) {
        pick = v;
        pick_degree = d;
      }
    }
    result = std::max(result, pick_degree);
    alive.erase(pick);
  }
  return result;
}

/// First-fit colours along `order` (colours 0, 1, ...).
inline std::vector<int> greedy_colors(const Graph& g, std::span<const int> order) {
  std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
  for (int v : order) {
    std::uint64_t used = 0;
    for (int w : g.neighbors(v))
      if (colour[w] >= 0) used |= std::uint64_t{1} << colour[w];
    colour[v] = std::countr_one(used);
  }
  return colour;
}

/// Number of colours first-fit uses along `order`.
inline int greedy_coloring(const Graph& g, std::span<const int> order) {
  const std::vector<int> colour = greedy_colors(g, order);
  int count = 0;
  for (int c : colour) count = std::max(count, c + 1);
  return count;
}

inline int greedy_coloring(const Graph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  return greedy_coloring(g, order);
}

namespace detail {

inline bool colourable(const Graph& g, const std::vector<int>& order, std::size_t at,
                       std::vector<int>& colour, int colours, int used) {
  if (at == order.size()) return true;
  const int v = order[at];
  std::uint64_t blocked = 0;
  for (int w : g.neighbors(v))
    if (colour[w] >= 0) blocked |= std::uint64_t{1} << colour[w];
  // a fresh colour is interchangeable with any other fresh colour
  const int limit = std::min(colours, used + 1);
  for (int c = 0; c < limit; ++c) {
    if ((blocked >> c) & 1U) continue;
    colour[v] = c;
    if (colourable(g, order, at + 1, colour, colours, std::max(used, c + 1))) return true;
  }
  colour[v] = -1;
  return false;
}

}  // namespace detail

/// Exact chromatic number by backtracking between the clique and greedy bounds.
inline int chromatic_number(const Graph& g, int limit = 16) {
  detail::check_limit(g, limit, "chromatic_number");
  if (g.order() == 0) return 0;
  const int lower = max_clique(g).size();
  const int upper = greedy_coloring(g);
  std::vector<int> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  for (int c = lower; c < upper; ++c) {
    std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
    if (detail::colourable(g, order, 0, colour, c, 0)) return c;
  }
  return upper;
}

}  // namespace metricdim
