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

// Exact metric dimension and edge metric dimension.
//
// A landmark set S resolves a family of objects iff for every pair (a, b) it
// contains a vertex x with d(x, a) != d(x, b). Collecting those distinguisher
// sets turns the problem into minimum hitting set, solved here by branch and
// bound: branch on the unhit set with the fewest admissible members (sets of
// size <= 2 force the choice among twins), excluding earlier siblings in later
// branches, and prune with a packing of pairwise disjoint sets.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "metricdim/distance.hpp"
#include "metricdim/error.hpp"
#include "metricdim/graph.hpp"
#include "metricdim/metric.hpp"

namespace metricdim {

struct DistinguisherFamily {
  int first = 0;  // object indices, first < second
  int second = 0;
  VertexSet set;  // vertices whose distances to the two objects differ
};

struct DistinguisherInstance {
  ObjectKind kind = ObjectKind::vertex;
  int universe_size = 0;
  std::vector<Edge> edges;  // object list for the edge kind
  std::vector<DistinguisherFamily> families;
};

struct SolveOptions {
  /// Maximum number of search nodes; unset means unbounded.
  std::optional<std::uint64_t> node_budget;
};

/// Orders at or below this size are solved without an explicit budget.
inline constexpr int unbudgeted_order_limit = 20;

struct DimensionCertificate {
  int value = 0;        // size of `basis`; the optimum when `optimal`
  LandmarkSet basis;    // lexicographically smallest optimal basis when `optimal`
  bool optimal = false; // every hitting set smaller than `value` was ruled out
  int lower_bound = 0;  // proven lower bound (== value when optimal)
  std::uint64_t nodes = 0;

  /// Optimum when the empty landmark set is disallowed.
  int nonempty_value(int universe_size) const {
    return value == 0 && universe_size > 0 ? 1 : value;
  }
};

inline DistinguisherInstance build_vertex_instance(const Graph& g, const DistanceMatrix& d) {
  require_connected(g, "build_vertex_instance");
  DistinguisherInstance inst;
  inst.kind = ObjectKind::vertex;
  inst.universe_size = g.order();
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      DistinguisherFamily f{a, b, {}};
      for (int x = 0; x < n; ++x)
        if (d(x, a) != d(x, b)) f.set.insert(x);
      inst.families.push_back(f);
    }
  return inst;
}

inline DistinguisherInstance build_vertex_instance(const Graph& g) {
  return build_vertex_instance(g, bfs_all_pairs(g));
}

inline DistinguisherInstance build_edge_instance(const Graph& g, const DistanceMatrix& d) {
  require_connected(g, "build_edge_instance");
  DistinguisherInstance inst;
  inst.kind = ObjectKind::edge;
  inst.universe_size = g.order();
  inst.edges = g.edges();
  const int n = g.order();
  const int m = static_cast<int>(inst.edges.size());
  std::vector<int> table(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
  for (int e = 0; e < m; ++e)
    for (int x = 0; x < n; ++x) table[e * n + x] = edge_vertex_distance(d, inst.edges[e], x);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      DistinguisherFamily f{a, b, {}};
      for (int x = 0; x < n; ++x)
        if (table[a * n + x] != table[b * n + x]) f.set.insert(x);
      inst.families.push_back(f);
    }
  return inst;
}

inline DistinguisherInstance build_edge_instance(const Graph& g) {
  return build_edge_instance(g, bfs_all_pairs(g));
}

namespace detail {

inline void require_nonempty_families(const DistinguisherInstance& inst) {
  for (const auto& f : inst.families)
    if (f.set.empty())
      throw inconsistent_instance("objects " + std::to_string(f.first) + " and " +
                                  std::to_string(f.second) +
                                  " cannot be distinguished by any landmark");
}

/// Distinct sets with supersets removed, ordered by (size, bits).
inline std::vector<VertexSet> minimal_sets(const DistinguisherInstance& inst) {
  std::vector<VertexSet> sets;
  sets.reserve(inst.families.size());
  for (const auto& f : inst.families) sets.push_back(f.set);
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (VertexSet s : sets) {
    const bool dominated = std::any_of(kept.begin(), kept.end(),
                                       [&](VertexSet k) { return k.subset_of(s); });
    if (!dominated) kept.push_back(s);
  }
  return kept;
}

/// Greedy packing of pairwise disjoint (restricted) sets, in the given order.
inline int disjoint_packing(const std::vector<VertexSet>& sets, VertexSet allowed, int stop_above) {
  VertexSet used;
  int count = 0;
  for (VertexSet s : sets) {
    const VertexSet r = s & allowed;
    if (r.intersects(used)) continue;
    used |= r;
    if (++count > stop_above) break;
  }
  return count;
}

struct budget_hit {};

class HittingSetSearch {
 public:
  HittingSetSearch(std::vector<VertexSet> sets, std::optional<std::uint64_t> budget)
      : sets_(std::move(sets)),
        budget_(budget.value_or(std::numeric_limits<std::uint64_t>::max())) {}

  std::uint64_t nodes() const noexcept { return nodes_; }
  const std::vector<VertexSet>& sets() const noexcept { return sets_; }

  /// Is there a hitting set of size <= r for `open` using only `allowed`?
  /// On success `picked` holds the chosen vertices.
  bool feasible(const std::vector<VertexSet>& open, VertexSet allowed, int r, VertexSet& picked) {
    if (++nodes_ > budget_) throw budget_hit{};
    if (open.empty()) return true;
    if (r <= 0) return false;
    std::size_t branch_at = 0;
    int branch_size = VertexSet::capacity + 1;
    for (std::size_t i = 0; i < open.size(); ++i) {
      const int size = (open[i] & allowed).size();
      if (size == 0) return false;
      if (size < branch_size) {
        branch_size = size;
        branch_at = i;
      }
    }
    if (disjoint_packing(open, allowed, r) > r) return false;

    const VertexSet branch = open[branch_at] & allowed;
    std::vector<VertexSet> rest;
    rest.reserve(open.size());
    for (int v : branch) {
      rest.clear();
      for (VertexSet s : open)
        if (!s.contains(v)) rest.push_back(s);
      picked.insert(v);
      if (feasible(rest, allowed - VertexSet::single(v), r - 1, picked)) return true;
      picked.erase(v);
      allowed.erase(v);
    }
    return false;
  }

 private:
  std::vector<VertexSet> sets_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Max-coverage greedy hitting set; ties go to the smallest vertex id.
inline LandmarkSet greedy_upper_bound(const DistinguisherInstance& inst) {
  detail::require_nonempty_families(inst);
  std::vector<VertexSet> open;
  for (const auto& f : inst.families) open.push_back(f.set);
  VertexSet chosen;
  while (!open.empty()) {
    int best = -1;
    int best_cover = 0;
    for (int v = 0; v < inst.universe_size; ++v) {
      int cover = 0;
      for (VertexSet s : open) cover += s.contains(v) ? 1 : 0;
      if (cover > best_cover) {
        best = v;
        best_cover = cover;
      }
    }
    chosen.insert(best);
    std::erase_if(open, [&](VertexSet s) { return s.contains(best); });
  }
  return LandmarkSet(chosen);
}

/// Number of pairwise disjoint distinguisher sets picked greedily, smallest
/// first. Any hitting set needs a distinct element for each of them.
inline int disjoint_pairs_lower_bound(const DistinguisherInstance& inst) {
  const std::vector<VertexSet> sets = detail::minimal_sets(inst);
  return detail::disjoint_packing(sets, VertexSet::range(inst.universe_size),
                                  std::numeric_limits<int>::max());
}

/// Certified minimum hitting set. If the node budget runs out the result
/// carries `optimal == false`, the best basis found and the proven lower bound.
inline DimensionCertificate min_hitting_set(const DistinguisherInstance& inst,
                                            std::optional<std::uint64_t> node_budget = {}) {
  detail::require_nonempty_families(inst);
  DimensionCertificate cert;
  const VertexSet universe = VertexSet::range(inst.universe_size);
  detail::HittingSetSearch search(detail::minimal_sets(inst), node_budget);
  const std::vector<VertexSet>& all = search.sets();

  const LandmarkSet greedy = greedy_upper_bound(inst);
  const int lower = detail::disjoint_packing(all, universe, std::numeric_limits<int>::max());
  const int upper = static_cast<int>(greedy.size());

  cert.lower_bound = lower;
  cert.value = upper;
  cert.basis = greedy;
  int optimum = upper;
  try {
    for (int r = lower; r < upper; ++r) {
      VertexSet picked;
      if (search.feasible(all, universe, r, picked)) {
        optimum = r;
        cert.value = picked.size();
        cert.basis = LandmarkSet(picked);
        break;
      }
      cert.lower_bound = r + 1;
    }
  } catch (const detail::budget_hit&) {
    cert.nodes = search.nodes();
    return cert;
  }
  cert.optimal = true;
  cert.value = optimum;
  cert.lower_bound = optimum;

  // Lexicographically smallest basis of size `optimum`, one position at a time.
  try {
    VertexSet prefix;
    std::vector<VertexSet> open = all;
    int floor = 0;
    for (int slot = 0; slot < optimum; ++slot) {
      bool placed = false;
      for (int v = floor; v < inst.universe_size && !placed; ++v) {
        std::vector<VertexSet> rest;
        for (VertexSet s : open)
          if (!s.contains(v)) rest.push_back(s);
        VertexSet scratch;
        if (search.feasible(rest, universe - VertexSet::range(v + 1), optimum - slot - 1,
                            scratch)) {
          prefix.insert(v);
          open = std::move(rest);
          floor = v + 1;
          placed = true;
        }
      }
      if (!placed) throw inconsistent_instance("basis reconstruction failed");
    }
    cert.basis = LandmarkSet(prefix);
  } catch (const detail::budget_hit&) {
    // keep the optimal basis found above; only the tie-break is lost
  }
  cert.nodes = search.nodes();
  return cert;
}

namespace detail {

inline std::optional<std::uint64_t> effective_budget(const Graph& g, const SolveOptions& opts) {
  if (!opts.node_budget && g.order() > unbudgeted_order_limit)
    throw domain_error("graphs with more than " + std::to_string(unbudgeted_order_limit) +
                       " vertices need an explicit node budget");
  return opts.node_budget;
}

}  // namespace detail

inline DimensionCertificate metric_dimension(const Graph& g, const SolveOptions& opts = {}) {
  const auto budget = detail::effective_budget(g, opts);
  return min_hitting_set(build_vertex_instance(g), budget);
}

inline DimensionCertificate edge_metric_dimension(const Graph& g, const SolveOptions& opts = {}) {
  const auto budget = detail::effective_budget(g, opts);
  return min_hitting_set(build_edge_instance(g), budget);
}

}  // namespace metricdim
