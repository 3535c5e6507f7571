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

// Canonical forms and isomorph-free enumeration of small graphs.
//
// The adjacency code of a labeled graph is the upper triangle read column by
// column, x(0,1) x(0,2) x(1,2) x(0,3) ..., as one bit string with x(0,1) most
// significant. The canonical form is the minimum code over all relabelings.
// The first C(n-1, 2) bits describe the subgraph induced by vertices
// 0..n-2, so the canonical code of a graph begins with the canonical code of
// that subgraph. Orderly generation exploits this: extend every canonical
// graph on n-1 vertices by one vertex in all 2^(n-1) ways and keep the
// extensions that are canonical. Each isomorphism class appears exactly once.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "metricdim/error.hpp"
#include "metricdim/graph.hpp"

namespace metricdim {

inline constexpr int canonical_max_order = 10;

struct CanonicalForm {
  int n = 0;
  std::uint64_t bits = 0;

  auto operator<=>(const CanonicalForm&) const = default;
};

namespace detail {

inline constexpr int pair_bits(int n) { return n * (n - 1) / 2; }

inline std::uint64_t adjacency_code(const Graph& g) {
  const int n = g.order();
  const int total = pair_bits(n);
  std::uint64_t code = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (g.adjacent(i, j)) code |= std::uint64_t{1} << (total - 1 - (pair_bits(j) + i));
  return code;
}

inline Graph graph_from_code(int n, std::uint64_t code) {
  const int total = pair_bits(n);
  std::vector<VertexSet> rows(static_cast<std::size_t>(n));
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((code >> (total - 1 - (pair_bits(j) + i))) & 1U) {
        rows[i].insert(j);
        rows[j].insert(i);
      }
  return Graph::from_rows(std::move(rows));
}

// Depth-first search over relabelings, placing one vertex per position and
// comparing column by column against the best code so far. Twins (vertices
// with equal neighborhoods apart from each other) are interchangeable, so only
// one of them is tried at each position.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g)
      : g_(g), n_(g.order()), total_(pair_bits(g.order())), twins_(static_cast<std::size_t>(n_)) {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (a != b && (g.neighbors(a) - VertexSet::single(b)) == (g.neighbors(b) - VertexSet::single(a)))
          twins_[a].insert(b);
    perm_.resize(static_cast<std::size_t>(n_));
  }

  std::uint64_t minimum() {
    best_ = adjacency_code(g_);
    stop_on_improvement_ = false;
    place(0, VertexSet{}, 0);
    return best_;
  }

  /// True when the identity labeling already attains the minimum.
  bool identity_is_minimal() {
    best_ = adjacency_code(g_);
    stop_on_improvement_ = true;
    improved_ = false;
    place(0, VertexSet{}, 0);
    return !improved_;
  }

 private:
  void place(int pos, VertexSet used, std::uint64_t code) {
    if (improved_ && stop_on_improvement_) return;
    if (pos == n_) {
      if (code < best_) {
        best_ = code;
        improved_ = true;
      }
      return;
    }
    const int shift = total_ - pair_bits(pos + 1);  // bits below the current prefix
    VertexSet tried;
    for (int v : g_.vertices() - used) {
      if (twins_[v].intersects(tried)) continue;
      tried.insert(v);
      std::uint64_t next = code;
      const VertexSet nb = g_.neighbors(v);
      for (int i = 0; i < pos; ++i)
        if (nb.contains(perm_[i])) next |= std::uint64_t{1} << (total_ - 1 - (pair_bits(pos) + i));
      const std::uint64_t mine = shift >= 64 ? 0 : next >> shift;
      const std::uint64_t theirs = shift >= 64 ? 0 : best_ >> shift;
      if (mine > theirs) continue;
      if (mine < theirs && stop_on_improvement_) {
        improved_ = true;
        return;
      }
      perm_[pos] = v;
      VertexSet now = used;
      now.insert(v);
      place(pos + 1, now, next);
      if (improved_ && stop_on_improvement_) return;
    }
  }

  const Graph& g_;
  int n_;
  int total_;
  std::vector<VertexSet> twins_;
  std::vector<int> perm_;
  std::uint64_t best_ = 0;
  bool stop_on_improvement_ = false;
  bool improved_ = false;
};

inline void check_canonical_limit(const Graph& g) {
  if (g.order() > canonical_max_order)
    throw limit_exceeded("canonical_form: n = " + std::to_string(g.order()) + " exceeds " +
                         std::to_string(canonical_max_order));
}

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) {
  detail::check_canonical_limit(g);
  return {g.order(), detail::CanonicalSearch(g).minimum()};
}

inline bool is_canonical(const Graph& g) {
  detail::check_canonical_limit(g);
  return detail::CanonicalSearch(g).identity_is_minimal();
}

/// The canonically labeled representative.
inline Graph canonical_graph(const Graph& g) {
  const CanonicalForm f = canonical_form(g);
  return detail::graph_from_code(f.n, f.bits);
}

inline Graph graph_from_canonical(const CanonicalForm& f) { return detail::graph_from_code(f.n, f.bits); }

/// Canonical codes of all graphs (connected or not) on 0..n vertices, one
/// vector per order, each sorted ascending.
inline std::vector<std::vector<std::uint64_t>> enumerate_all_codes(int n) {
  if (n < 0 || n > 9) throw limit_exceeded("enumeration supports n <= 9");
  std::vector<std::vector<std::uint64_t>> levels{{0}};
  for (int order = 1; order <= n; ++order) {
    std::vector<std::uint64_t> next;
    const int column = order - 1;
    for (std::uint64_t parent : levels.back()) {
      for (std::uint64_t col = 0; col < (std::uint64_t{1} << column); ++col) {
        const std::uint64_t code = (parent << column) | col;
        if (detail::CanonicalSearch(detail::graph_from_code(order, code)).identity_is_minimal())
          next.push_back(code);
      }
    }
    std::sort(next.begin(), next.end());
    levels.push_back(std::move(next));
  }
  return levels;
}

struct EnumerateOptions {
  bool allow_nine = false;  // n = 9 takes noticeably longer
};

/// One representative per isomorphism class of connected graphs on n
/// vertices, canonically labeled, in canonical-form order.
inline std::vector<Graph> enumerate_connected(int n, const EnumerateOptions& opts = {}) {
  if (n < 1) throw domain_error("enumerate_connected: n must be positive");
  if (n > 9 || (n == 9 && !opts.allow_nine))
    throw limit_exceeded("enumerate_connected: n = " + std::to_string(n) +
                         (n == 9 ? " requires allow_nine" : " exceeds 9"));
  const auto levels = enumerate_all_codes(n);
  std::vector<Graph> out;
  for (std::uint64_t code : levels.back()) {
    Graph g = detail::graph_from_code(n, code);
    if (g.connected()) out.push_back(std::move(g));
  }
  return out;
}

/// Connected classes for every order in [n_min, n_max], grouped by order.
inline std::vector<std::vector<Graph>> enumerate_connected_range(int n_min, int n_max,
                                                                 const EnumerateOptions& opts = {}) {
  if (n_min < 1 || n_max < n_min) throw domain_error("enumerate_connected_range: bad range");
  if (n_max > 9 || (n_max == 9 && !opts.allow_nine))
    throw limit_exceeded("enumerate_connected_range: n_max = " + std::to_string(n_max) +
                         (n_max == 9 ? " requires allow_nine" : " exceeds 9"));
  const auto levels = enumerate_all_codes(n_max);
  std::vector<std::vector<Graph>> out;
  for (int n = n_min; n <= n_max; ++n) {
    std::vector<Graph> level;
    for (std::uint64_t code : levels[n]) {
      Graph g = detail::graph_from_code(n, code);
      if (g.connected()) level.push_back(std::move(g));
    }
    out.push_back(std::move(level));
  }
  return out;
}

}  // namespace metricdim
