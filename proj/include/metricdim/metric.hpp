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
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "metricdim/distance.hpp"
#include "metricdim/error.hpp"
#include "metricdim/graph.hpp"

namespace metricdim {

/// Sorted, duplicate-free set of landmark vertices. The sorted order fixes the
/// coordinate order of every distance vector.
class LandmarkSet {
 public:
  LandmarkSet() = default;
  explicit LandmarkSet(std::vector<int> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
      throw domain_error("landmark set contains a duplicate vertex");
    if (!ids_.empty() && ids_.front() < 0) throw vertex_out_of_range("negative landmark id");
  }
  LandmarkSet(std::initializer_list<int> ids) : LandmarkSet(std::vector<int>(ids)) {}
  explicit LandmarkSet(VertexSet s) : ids_(s.to_vector()) {}

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  int operator[](std::size_t i) const { return ids_[i]; }
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }
  const std::vector<int>& ids() const noexcept { return ids_; }

  VertexSet as_set() const {
    VertexSet s;
    for (int v : ids_) s.insert(v);
    return s;
  }

  /// Throws vertex_out_of_range unless every id is below n.
  void check_within(int n) const {
    if (!ids_.empty() && ids_.back() >= n)
      throw vertex_out_of_range("landmark " + std::to_string(ids_.back()) +
                                " is not a vertex of a graph on " + std::to_string(n) +
                                " vertices");
  }

  auto operator<=>(const LandmarkSet&) const = default;

 private:
  std::vector<int> ids_;
};

using DistanceVector = std::vector<int>;

enum class ObjectKind { vertex, edge };

/// Two distinct objects with the same distance vector.
struct ResolutionWitness {
  ObjectKind kind = ObjectKind::vertex;
  int first = -1;  // vertex id, or index into the graph's edge list
  int second = -1;
  Edge first_edge{};  // edge kind only
  Edge second_edge{};
  DistanceVector shared_vector;
};

struct ResolutionResult {
  bool resolving = false;
  std::optional<ResolutionWitness> witness;

  explicit operator bool() const noexcept { return resolving; }
};

inline DistanceVector vertex_distance_vector(const DistanceMatrix& d, int v, const LandmarkSet& s) {
  DistanceVector out;
  out.reserve(s.size());
  for (int x : s) out.push_back(d(x, v));
  return out;
}

inline DistanceVector edge_distance_vector(const DistanceMatrix& d, const Edge& e,
                                           const LandmarkSet& s) {
  DistanceVector out;
  out.reserve(s.size());
  for (int x : s) out.push_back(edge_vertex_distance(d, e, x));
  return out;
}

namespace detail {

/// Lexicographically first colliding index pair (a < b), if any.
inline std::optional<std::pair<int, int>> first_collision(const std::vector<DistanceVector>& vecs) {
  std::vector<int> idx(vecs.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return vecs[a] < vecs[b]; });
  std::optional<std::pair<int, int>> best;
  for (std::size_t i = 0; i + 1 < idx.size();) {
    std::size_t j = i + 1;
    while (j < idx.size() && vecs[idx[j]] == vecs[idx[i]]) ++j;
    // stable sort keeps each group in ascending index order
    if (j - i >= 2) {
      const std::pair<int, int> cand{idx[i], idx[i + 1]};
      if (!best || cand < *best) best = cand;
    }
    i = j;
  }
  return best;
}

}  // namespace detail

inline ResolutionResult is_vertex_resolving(const Graph& g, const DistanceMatrix& d,
                                            const LandmarkSet& s) {
  require_connected(g, "is_vertex_resolving");
  s.check_within(g.order());
  std::vector<DistanceVector> vecs;
  vecs.reserve(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) vecs.push_back(vertex_distance_vector(d, v, s));
  const auto hit = detail::first_collision(vecs);
  if (!hit) return {true, std::nullopt};
  ResolutionWitness w;
  w.kind = ObjectKind::vertex;
  w.first = hit->first;
  w.second = hit->second;
  w.shared_vector = vecs[hit->first];
  return {false, w};
}

inline ResolutionResult is_vertex_resolving(const Graph& g, const LandmarkSet& s) {
  return is_vertex_resolving(g, bfs_all_pairs(g), s);
}

inline ResolutionResult is_edge_resolving(const Graph& g, const DistanceMatrix& d,
                                          const LandmarkSet& s) {
  require_connected(g, "is_edge_resolving");
  s.check_within(g.order());
  const std::vector<Edge> edges = g.edges();
  std::vector<DistanceVector> vecs;
  vecs.reserve(edges.size());
  for (const Edge& e : edges) vecs.push_back(edge_distance_vector(d, e, s));
  const auto hit = detail::first_collision(vecs);
  if (!hit) return {true, std::nullopt};
  ResolutionWitness w;
  w.kind = ObjectKind::edge;
  w.first = hit->first;
  w.second = hit->second;
  w.first_edge = edges[hit->first];
  w.second_edge = edges[hit->second];
  w.shared_vector = vecs[hit->first];
  return {false, w};
}

inline ResolutionResult is_edge_resolving(const Graph& g, const LandmarkSet& s) {
  return is_edge_resolving(g, bfs_all_pairs(g), s);
}

inline ResolutionResult is_resolving(const Graph& g, const LandmarkSet& s, ObjectKind kind) {
  return kind == ObjectKind::vertex ? is_vertex_resolving(g, s) : is_edge_resolving(g, s);
}

}  // namespace metricdim
