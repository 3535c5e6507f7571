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

// Extremal constructions with their landmark certificates.
//
// Vertex numbering is fixed: the labeled block (clique, leaves, or left side
// then right side) comes first in label order, then the center if any, then
// u_1..u_k, r_1..r_k, s_1..s_k. Digit i of a label is the coefficient of
// base^(i-1); label strings are written most significant digit first.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "metricdim/distance.hpp"
#include "metricdim/error.hpp"
#include "metricdim/graph.hpp"
#include "metricdim/metric.hpp"

namespace metricdim {

struct DeletedVertex {
  std::string role;
  std::string label;
};

struct ConstructionOutput {
  std::string family;
  Graph graph;
  LandmarkSet landmarks;
  ObjectKind certifies = ObjectKind::vertex;  // which objects the landmarks resolve
  std::vector<std::string> roles;             // per vertex: clique, leaf, center, left, right, u_i, ...
  std::vector<std::string> labels;            // per vertex digit string, empty when unlabeled
  std::vector<DeletedVertex> deleted;

  /// First vertex with the given role, or -1.
  int find_role(const std::string& role) const {
    for (std::size_t v = 0; v < roles.size(); ++v)
      if (roles[v] == role) return static_cast<int>(v);
    return -1;
  }
};

inline int digit(int label, int base, int i) {
  for (int j = 1; j < i; ++j) label /= base;
  return label % base;
}

inline std::string label_string(int label, int base, int digits) {
  std::string out(static_cast<std::size_t>(digits), '0');
  for (int i = 1; i <= digits; ++i) out[digits - i] = static_cast<char>('0' + digit(label, base, i));
  return out;
}

namespace detail {

inline int ipow(int base, int exp) {
  int r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

inline void check_param(const char* family, int k, int lo, int hi) {
  if (k < lo || k > hi)
    throw domain_error(std::string(family) + ": k = " + std::to_string(k) + " outside [" +
                       std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

// Incrementally built graph with role and label bookkeeping.
struct Builder {
  std::vector<std::string> roles;
  std::vector<std::string> labels;
  std::vector<Edge> edges;

  int add(std::string role, std::string label = {}) {
    roles.push_back(std::move(role));
    labels.push_back(std::move(label));
    return static_cast<int>(roles.size()) - 1;
  }
  void link(int a, int b) { edges.emplace_back(a, b); }

  ConstructionOutput finish(std::string family, std::vector<int> landmarks, ObjectKind kind) {
    ConstructionOutput out;
    out.family = std::move(family);
    out.graph = from_edge_list(static_cast<int>(roles.size()), edges);
    out.landmarks = LandmarkSet(std::move(landmarks));
    out.certifies = kind;
    out.roles = std::move(roles);
    out.labels = std::move(labels);
    return out;
  }
};

inline std::string indexed(const char* role, int i) { return std::string(role) + "_" + std::to_string(i); }

/// Removes `drop` from `out`, renumbering the survivors in order.
inline void delete_vertices(ConstructionOutput& out, VertexSet drop) {
  const VertexSet keep = out.graph.vertices() - drop;
  std::vector<int> new_id(out.roles.size(), -1);
  std::vector<std::string> roles;
  std::vector<std::string> labels;
  for (int v : keep) {
    new_id[v] = static_cast<int>(roles.size());
    roles.push_back(out.roles[v]);
    labels.push_back(out.labels[v]);
  }
  for (int v : drop) out.deleted.push_back({out.roles[v], out.labels[v]});
  std::vector<int> landmarks;
  for (int s : out.landmarks) landmarks.push_back(new_id[s]);
  out.graph = out.graph.induced(keep);
  out.landmarks = LandmarkSet(std::move(landmarks));
  out.roles = std::move(roles);
  out.labels = std::move(labels);
}

}  // namespace detail

/// K_{2^k} with binary-labeled vertices plus u_1..u_k; u_i ~ v iff digit i of v is 0.
inline ConstructionOutput md_complete(int k) {
  detail::check_param("md_complete", k, 1, 5);
  const int m = detail::ipow(2, k);
  detail::Builder b;
  for (int label = 0; label < m; ++label) b.add("clique", label_string(label, 2, k));
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y) b.link(x, y);
  std::vector<int> landmarks;
  for (int i = 1; i <= k; ++i) {
    const int u = b.add(detail::indexed("u", i));
    landmarks.push_back(u);
    for (int label = 0; label < m; ++label)
      if (digit(label, 2, i) == 0) b.link(u, label);
  }
  return b.finish("md-complete", landmarks, ObjectKind::vertex);
}

/// K_{1,2^k} with center c and binary-labeled leaves plus u_1..u_k.
inline ConstructionOutput edim_star(int k) {
  detail::check_param("edim_star", k, 1, 5);
  const int m = detail::ipow(2, k);
  detail::Builder b;
  for (int label = 0; label < m; ++label) b.add("leaf", label_string(label, 2, k));
  const int c = b.add("center");
  for (int label = 0; label < m; ++label) b.link(c, label);
  std::vector<int> landmarks;
  for (int i = 1; i <= k; ++i) {
    const int u = b.add(detail::indexed("u", i));
    landmarks.push_back(u);
    for (int label = 0; label < m; ++label)
      if (digit(label, 2, i) == 0) b.link(u, label);
  }
  return b.finish("edim-star", landmarks, ObjectKind::edge);
}

/// K_{1,3^k} with ternary-labeled leaves, r_1..r_k and s_1..s_k:
/// s_i ~ v iff digit i is 0, r_i ~ v iff digit i is 1, r_i ~ s_i. Leaves whose
/// vector over S = {s_i} (measured before deletion) equals that of the center
/// or of some r_i are then deleted. The certificate is not re-checked here;
/// see verify_certificate.
inline ConstructionOutput md_star(int k) {
  detail::check_param("md_star", k, 1, 3);
  const int m = detail::ipow(3, k);
  detail::Builder b;
  for (int label = 0; label < m; ++label) b.add("leaf", label_string(label, 3, k));
  const int c = b.add("center");
  for (int label = 0; label < m; ++label) b.link(c, label);
  std::vector<int> r(static_cast<std::size_t>(k));
  std::vector<int> s(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) r[i - 1] = b.add(detail::indexed("r", i));
  for (int i = 1; i <= k; ++i) s[i - 1] = b.add(detail::indexed("s", i));
  for (int i = 1; i <= k; ++i) {
    b.link(r[i - 1], s[i - 1]);
    for (int label = 0; label < m; ++label) {
      const int dg = digit(label, 3, i);
      if (dg == 0) b.link(s[i - 1], label);
      if (dg == 1) b.link(r[i - 1], label);
    }
  }
  ConstructionOutput out = b.finish("md-star", s, ObjectKind::vertex);

  const DistanceMatrix d = bfs_all_pairs(out.graph);
  std::vector<DistanceVector> reserved{vertex_distance_vector(d, c, out.landmarks)};
  for (int ri : r) reserved.push_back(vertex_distance_vector(d, ri, out.landmarks));
  VertexSet drop;
  for (int leaf = 0; leaf < m; ++leaf) {
    const DistanceVector vec = vertex_distance_vector(d, leaf, out.landmarks);
    if (std::find(reserved.begin(), reserved.end(), vec) != reserved.end()) drop.insert(leaf);
  }
  detail::delete_vertices(out, drop);
  return out;
}

namespace detail {

inline ConstructionOutput biclique_core(const char* family, int k, bool drop_all_ones,
                                        ObjectKind kind) {
  check_param(family, k, 2, 7);
  const int h = k / 2;
  const int m = ipow(2, h);
  Builder b;
  for (int label = 0; label < m; ++label) b.add("left", label_string(label, 2, h));
  for (int label = 0; label < m; ++label) b.add("right", label_string(label, 2, h));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) b.link(x, m + y);
  std::vector<int> landmarks;
  for (int i = 1; i <= h; ++i) {
    const int u = b.add(indexed("u", i));
    landmarks.push_back(u);
    for (int label = 0; label < m; ++label)
      if (digit(label, 2, i) == 0) b.link(u, label);
  }
  for (int i = 1; i <= h; ++i) {
    const int r = b.add(indexed("r", i));
    landmarks.push_back(r);
    for (int label = 0; label < m; ++label)
      if (digit(label, 2, i) == 0) b.link(r, m + label);
  }
  ConstructionOutput out = b.finish(family, landmarks, kind);
  if (drop_all_ones) delete_vertices(out, VertexSet{m - 1, 2 * m - 1});
  return out;
}

}  // namespace detail

/// K_{m,m}, m = 2^{floor(k/2)}, with u_i on the left and r_i on the right;
/// the all-ones vertex of each side is deleted.
inline ConstructionOutput md_biclique(int k) {
  return detail::biclique_core("md-biclique", k, true, ObjectKind::vertex);
}

/// Same graph as md_biclique before the deletion; certifies edges.
inline ConstructionOutput edim_biclique(int k) {
  return detail::biclique_core("edim-biclique", k, false, ObjectKind::edge);
}

inline int grid_order(const std::vector<int>& dims) {
  if (dims.empty()) throw domain_error("grid: need at least one dimension");
  long long n = 1;
  for (int r : dims) {
    if (r < 2) throw domain_error("grid: side lengths must be at least 2");
    n *= r;
    if (n > 62) throw limit_exceeded("grid: more than 62 vertices");
  }
  return static_cast<int>(n);
}

/// Vertex id of a lattice point; the first coordinate varies fastest.
inline int grid_index(const std::vector<int>& dims, const std::vector<int>& point) {
  int id = 0;
  for (std::size_t i = dims.size(); i-- > 0;) id = id * dims[i] + point[i];
  return id;
}

inline std::vector<int> grid_point(const std::vector<int>& dims, int id) {
  std::vector<int> p(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i) {
    p[i] = id % dims[i];
    id /= dims[i];
  }
  return p;
}

/// Product of paths P_{r_1} x ... x P_{r_d}.
inline Graph grid(const std::vector<int>& dims) {
  const int n = grid_order(dims);
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    std::vector<int> p = grid_point(dims, v);
    for (std::size_t i = 0; i < dims.size(); ++i) {
      if (p[i] + 1 < dims[i]) {
        ++p[i];
        edges.emplace_back(v, grid_index(dims, p));
        --p[i];
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  return from_edge_list(n, edges);
}

/// The origin plus (r_i - 1) e_i for i = 1..d-1.
inline LandmarkSet grid_edge_landmarks(const std::vector<int>& dims) {
  grid_order(dims);
  std::vector<int> ids;
  std::vector<int> p(dims.size(), 0);
  ids.push_back(grid_index(dims, p));
  for (std::size_t i = 0; i + 1 < dims.size(); ++i) {
    p[i] = dims[i] - 1;
    ids.push_back(grid_index(dims, p));
    p[i] = 0;
  }
  return LandmarkSet(std::move(ids));
}

inline ConstructionOutput grid_construction(const std::vector<int>& dims) {
  ConstructionOutput out;
  out.family = "grid";
  out.graph = grid(dims);
  out.landmarks = grid_edge_landmarks(dims);
  out.certifies = ObjectKind::edge;
  for (int v = 0; v < out.graph.order(); ++v) {
    std::string coords = "(";
    const std::vector<int> p = grid_point(dims, v);
    for (std::size_t i = 0; i < p.size(); ++i) coords += (i ? "," : "") + std::to_string(p[i]);
    out.roles.push_back("point");
    out.labels.push_back(coords + ")");
  }
  return out;
}

struct CertificateCheck {
  bool ok = false;
  std::string problem;  // empty when ok
  std::optional<ResolutionWitness> witness;
};

/// Re-verifies a construction from scratch: connectivity, landmark range and
/// resolution of the certified objects by fresh BFS on the final graph.
inline CertificateCheck verify_certificate(const ConstructionOutput& out) {
  CertificateCheck check;
  if (!out.graph.connected()) {
    check.problem = out.family + ": graph is disconnected";
    return check;
  }
  const ResolutionResult res = is_resolving(out.graph, out.landmarks, out.certifies);
  if (!res) {
    check.problem = out.family + ": landmark set does not resolve the " +
                    (out.certifies == ObjectKind::vertex ? "vertices" : "edges");
    check.witness = res.witness;
    return check;
  }
  check.ok = true;
  return check;
}

/// Builds a construction by CLI family name: md-complete, edim-star, md-star,
/// md-biclique, edim-biclique (parameter k) or grid (dims).
inline ConstructionOutput construct(const std::string& family, int k, const std::vector<int>& dims) {
  if (family == "md-complete") return md_complete(k);
  if (family == "edim-star") return edim_star(k);
  if (family == "md-star") return md_star(k);
  if (family == "md-biclique") return md_biclique(k);
  if (family == "edim-biclique") return edim_biclique(k);
  if (family == "grid") return grid_construction(dims);
  throw domain_error("unknown construction family '" + family + "'");
}

}  // namespace metricdim
