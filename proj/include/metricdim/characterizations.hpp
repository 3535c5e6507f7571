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

// Structural predicates for edge metric dimension n-1 and >= n-2, the
// (k+1)-tuple distance lemma and the diameter bounds that follow from them.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "metricdim/distance.hpp"
#include "metricdim/error.hpp"
#include "metricdim/graph.hpp"
#include "metricdim/invariants.hpp"
#include "metricdim/solver.hpp"

namespace metricdim {

/// Which vertices count as non-mutual neighbors of an adjacent pair {u, v}.
/// `literal`: every x adjacent to exactly one of u, v, which includes u and v
/// themselves. `exclude_pair`: the same set minus {u, v}.
enum class NeighborReading { literal, exclude_pair };

inline VertexSet non_mutual_neighbors(const Graph& g, int u, int v,
                                      NeighborReading reading = NeighborReading::literal) {
  if (u == v) throw domain_error("non_mutual_neighbors: u and v must differ");
  VertexSet out = g.neighbors(u) ^ g.neighbors(v);
  if (reading == NeighborReading::exclude_pair) out -= VertexSet{u, v};
  return out;
}

namespace detail {

inline void require_characterization_input(const Graph& g, const char* what) {
  require_connected(g, what);
  if (g.order() <= 2)
    throw domain_error(std::string(what) + ": unsupported size n = " + std::to_string(g.order()) +
                       " (needs n >= 3)");
}

}  // namespace detail

struct PairCharacterization {
  bool holds = false;
  std::optional<std::pair<int, int>> failing_pair;
};

/// edim(G) = n - 1 iff every pair v1, v2 has a common neighbor u adjacent to
/// all their non-mutual neighbors.
inline PairCharacterization char_edim_n1(const Graph& g,
                                         NeighborReading reading = NeighborReading::literal) {
  detail::require_characterization_input(g, "char_edim_n1");
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const VertexSet nmn = non_mutual_neighbors(g, a, b, reading);
      bool found = false;
      for (int u : g.neighbors(a) & g.neighbors(b)) {
        // u is never in nmn (adjacent to both), so no self-adjacency is needed
        if (nmn.subset_of(g.neighbors(u))) {
          found = true;
          break;
        }
      }
      if (!found) return {false, std::pair{a, b}};
    }
  return {true, std::nullopt};
}

struct TripleWitness {
  std::array<int, 3> triple{};  // the satisfying ordering v1, v2, v3
  int condition = 0;            // 1 or 2
  std::optional<int> u;         // condition 2 only
};

struct TripleCharacterization {
  bool holds = false;
  /// Witness per triple, triples in lexicographic order; stops at a failure.
  std::vector<std::pair<std::array<int, 3>, TripleWitness>> witnesses;
  std::optional<std::array<int, 3>> failing_triple;
};

namespace detail {

inline bool condition_one(const Graph& g, int v1, int v2, int v3, NeighborReading reading) {
  if (!g.adjacent(v3, v1) || !g.adjacent(v3, v2)) return false;
  return non_mutual_neighbors(g, v1, v2, reading).subset_of(g.neighbors(v3));
}

inline std::optional<int> condition_two(const Graph& g, const DistanceMatrix& d, int v1, int v2,
                                        int v3, NeighborReading reading) {
  const VertexSet outside = g.vertices() - VertexSet{v1, v2, v3};
  const VertexSet nmn = non_mutual_neighbors(g, v1, v2, reading) & outside;
  // vertices x outside the triple at distance exactly 2 from the nearer of v1, v2
  VertexSet at_two;
  for (int x : outside) {
    const int a = d(x, v1);
    const int b = d(x, v2);
    if ((b > a && a == 2) || (a > b && b == 2)) at_two.insert(x);
  }
  for (int u : outside & g.neighbors(v1) & g.neighbors(v2)) {
    if (!nmn.subset_of(g.neighbors(u))) continue;
    bool near = true;
    for (int x : at_two)
      if (d(x, u) > 2) {
        near = false;
        break;
      }
    if (near) return u;
  }
  return std::nullopt;
}

}  // namespace detail

/// Witness search for one triple: condition 1 with apex t0, t1, t2, then
/// condition 2 for the pairs {t0,t1}, {t0,t2}, {t1,t2} with u ascending.
inline std::optional<TripleWitness> triple_witness(const Graph& g, const DistanceMatrix& d,
                                                   std::array<int, 3> t,
                                                   NeighborReading reading = NeighborReading::literal) {
  const std::array<std::array<int, 3>, 3> apex_orders{
      {{t[1], t[2], t[0]}, {t[0], t[2], t[1]}, {t[0], t[1], t[2]}}};
  for (const auto& o : apex_orders)
    if (detail::condition_one(g, o[0], o[1], o[2], reading)) return TripleWitness{o, 1, std::nullopt};
  const std::array<std::array<int, 3>, 3> pair_orders{
      {{t[0], t[1], t[2]}, {t[0], t[2], t[1]}, {t[1], t[2], t[0]}}};
  for (const auto& o : pair_orders)
    if (auto u = detail::condition_two(g, d, o[0], o[1], o[2], reading))
      return TripleWitness{o, 2, u};
  return std::nullopt;
}

/// edim(G) >= n - 2 iff every vertex triple admits an ordering satisfying
/// condition 1 or condition 2.
inline TripleCharacterization char_edim_ge_n2(const Graph& g,
                                              NeighborReading reading = NeighborReading::literal) {
  detail::require_characterization_input(g, "char_edim_ge_n2");
  const DistanceMatrix d = bfs_all_pairs(g);
  TripleCharacterization out;
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        const std::array<int, 3> t{a, b, c};
        auto w = triple_witness(g, d, t, reading);
        if (!w) {
          out.failing_triple = t;
          return out;
        }
        out.witnesses.emplace_back(t, *w);
      }
  out.holds = true;
  return out;
}

/// edim(G) = n - 2 exactly: not (edim = n - 1) and (edim >= n - 2).
inline bool char_edim_eq_n2(const Graph& g, NeighborReading reading = NeighborReading::literal) {
  return !char_edim_n1(g, reading).holds && char_edim_ge_n2(g, reading).holds;
}

struct TupleLemmaResult {
  bool holds = true;
  bool vacuous = false;         // fewer than k + 1 vertices
  std::vector<int> violating;   // k + 1 vertices pairwise at distance >= 3
};

/// Does every (k+1)-subset of vertices contain two vertices at distance <= 2?
/// Equivalent to the "distance >= 3" graph having no clique of size k + 1.
inline TupleLemmaResult tuple_lemma_check(const Graph& g, int k) {
  require_connected(g, "tuple_lemma_check");
  if (k < 1) throw domain_error("tuple_lemma_check: k must be positive");
  TupleLemmaResult out;
  if (g.order() < k + 1) {
    out.vacuous = true;
    return out;
  }
  const DistanceMatrix d = bfs_all_pairs(g);
  std::vector<VertexSet> far(static_cast<std::size_t>(g.order()));
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v)
      if (u != v && d(u, v) >= 3) far[u].insert(v);
  const VertexSet clique = max_clique(Graph::from_rows(std::move(far)));
  if (clique.size() >= k + 1) {
    out.holds = false;
    for (int v : clique) {
      if (static_cast<int>(out.violating.size()) == k + 1) break;
      out.violating.push_back(v);
    }
  }
  return out;
}

struct DiameterCheck {
  int n = 0;
  int edim = 0;
  int k = 0;  // n - edim
  int diameter = 0;
  bool edim_certified = false;
  bool edim_is_n_minus_2 = false;
  bool within_3k_minus_1 = false;
  bool within_5 = true;  // vacuous unless edim = n - 2
  bool tuple_lemma = false;

  bool pass() const { return edim_certified && within_3k_minus_1 && within_5 && tuple_lemma; }
};

/// Solves edim, sets k = n - edim and checks diameter <= 3k - 1, diameter <= 5
/// when edim = n - 2, and the tuple lemma at k.
inline DiameterCheck diameter_theorem_check(const Graph& g, const SolveOptions& opts = {}) {
  require_connected(g, "diameter_theorem_check");
  DiameterCheck out;
  const DimensionCertificate cert = edge_metric_dimension(g, opts);
  if (!cert.optimal)
    throw budget_exhausted("diameter_theorem_check: edim not certified within budget");
  out.n = g.order();
  out.edim = cert.value;
  out.edim_certified = true;
  out.k = out.n - out.edim;
  out.diameter = diameter(g);
  out.within_3k_minus_1 = out.diameter <= 3 * out.k - 1;
  out.edim_is_n_minus_2 = out.edim == out.n - 2;
  if (out.edim_is_n_minus_2) out.within_5 = out.diameter <= 5;
  out.tuple_lemma = tuple_lemma_check(g, out.k).holds;
  return out;
}

}  // namespace metricdim
