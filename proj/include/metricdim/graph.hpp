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
#include <compare>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "metricdim/error.hpp"
#include "metricdim/vertex_set.hpp"

namespace metricdim {

/// Undirected edge, normalized so that u < v.
struct Edge {
  int u = 0;
  int v = 0;

  constexpr Edge() = default;
  constexpr Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

  constexpr bool incident(int x) const { return x == u || x == v; }
  constexpr auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1 with one adjacency bitset per
/// vertex. Immutable once built.
class Graph {
 public:
  static constexpr int max_order = VertexSet::capacity;

  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n) {
    if (n < 0 || n > max_order)
      throw limit_exceeded("graph order " + std::to_string(n) + " outside [0, " +
                           std::to_string(max_order) + "]");
    adj_.resize(static_cast<std::size_t>(n));
  }

  /// Builds from adjacency rows, checking symmetry and the absence of loops.
  static Graph from_rows(std::vector<VertexSet> rows) {
    Graph g(static_cast<int>(rows.size()));
    const int n = g.order();
    for (int v = 0; v < n; ++v) {
      if (rows[v].contains(v)) throw self_loop("self-loop at vertex " + std::to_string(v));
      if (!rows[v].subset_of(VertexSet::range(n)))
        throw vertex_out_of_range("adjacency row " + std::to_string(v) + " names a vertex >= n");
      for (int w : rows[v])
        if (!rows[w].contains(v))
          throw error("adjacency rows are not symmetric at {" + std::to_string(v) + "," +
                      std::to_string(w) + "}");
    }
    g.adj_ = std::move(rows);
    return g;
  }

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  VertexSet vertices() const noexcept { return VertexSet::range(order()); }
  VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }
  int degree(int v) const { return neighbors(v).size(); }

  /// Number of edges.
  int size() const noexcept {
    int twice = 0;
    for (VertexSet row : adj_) twice += row.size();
    return twice / 2;
  }

  /// All edges in lexicographic (u, v) order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u)
      for (int v : adj_[u] - VertexSet::range(u + 1)) out.emplace_back(u, v);
    return out;
  }

  int max_degree() const noexcept {
    int best = 0;
    for (VertexSet row : adj_) best = std::max(best, row.size());
    return best;
  }

  int min_degree() const noexcept {
    if (adj_.empty()) return 0;
    int best = max_order;
    for (VertexSet row : adj_) best = std::min(best, row.size());
    return best;
  }

  /// Vertices reachable from `source`.
  VertexSet component_of(int source) const {
    VertexSet seen = VertexSet::single(source);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= adj_[v];
      frontier = next - seen;
      seen |= frontier;
    }
    return seen;
  }

  /// The empty graph counts as connected.
  bool connected() const { return order() == 0 || component_of(0) == vertices(); }

  /// Subgraph induced by `keep`, renumbered densely in ascending id order.
  Graph induced(VertexSet keep) const {
    std::vector<int> new_id(adj_.size(), -1);
    int next = 0;
    for (int v : keep) new_id[v] = next++;
    std::vector<VertexSet> rows(static_cast<std::size_t>(next));
    for (int v : keep)
      for (int w : adj_[v] & keep) rows[new_id[v]].insert(new_id[w]);
    return from_rows(std::move(rows));
  }

  /// Same graph with vertex v renamed to perm[v].
  Graph relabeled(std::span<const int> perm) const {
    std::vector<VertexSet> rows(adj_.size());
    for (int v = 0; v < order(); ++v)
      for (int w : adj_[v]) rows[perm[v]].insert(perm[w]);
    return from_rows(std::move(rows));
  }

  bool operator==(const Graph&) const = default;

 private:
  std::vector<VertexSet> adj_;
};

/// Builds a graph with exactly the given edges. Rejects endpoints >= n,
/// self-loops and repeated edges, each with its own exception type.
inline Graph from_edge_list(int n, std::span<const Edge> edges) {
  Graph probe(n);  // validates n
  std::vector<VertexSet> rows(static_cast<std::size_t>(n));
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n)
      throw vertex_out_of_range("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                "} has an endpoint outside [0, " + std::to_string(n) + ")");
    if (e.u == e.v) throw self_loop("self-loop at vertex " + std::to_string(e.u));
    if (rows[e.u].contains(e.v))
      throw duplicate_edge("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                           "} listed twice");
    rows[e.u].insert(e.v);
    rows[e.v].insert(e.u);
  }
  return Graph::from_rows(std::move(rows));
}

inline Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
  return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Edge list text: a line "n m" followed by m lines "u v", 0-based.
inline Graph read_edge_list(std::istream& in) {
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m)) throw parse_error("edge list: expected header \"n m\"");
  if (n < 0 || m < 0) throw parse_error("edge list: negative count in header");
  if (n > Graph::max_order)
    throw limit_exceeded("edge list: n = " + std::to_string(n) + " exceeds " +
                         std::to_string(Graph::max_order));
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v))
      throw parse_error("edge list: expected " + std::to_string(m) + " edges, got " +
                        std::to_string(i));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw vertex_out_of_range("edge list: endpoint out of range on edge " + std::to_string(i));
    Edge e;
    e.u = static_cast<int>(std::min(u, v));
    e.v = static_cast<int>(std::max(u, v));
    edges.push_back(e);
  }
  std::string rest;
  if (in >> rest) throw parse_error("edge list: trailing data after " + std::to_string(m) + " edges");
  return from_edge_list(static_cast<int>(n), edges);
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

// Common families, used throughout tests and sweeps.

inline Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return from_edge_list(n, e);
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return from_edge_list(n, e);
}

inline Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return from_edge_list(n, e);
}

/// K_{a,b} with sides {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite_graph(int a, int b) {
  std::vector<Edge> e;
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) e.emplace_back(u, v);
  return from_edge_list(a + b, e);
}

/// K_{1,n} with center 0.
inline Graph star_graph(int leaves) { return complete_bipartite_graph(1, leaves); }

}  // namespace metricdim
