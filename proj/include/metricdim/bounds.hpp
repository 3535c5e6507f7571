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

// Closed-form size bounds in terms of (edge) metric dimension k and
// diameter D, evaluated exactly, plus a per-graph audit of every inequality.

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "metricdim/distance.hpp"
#include "metricdim/error.hpp"
#include "metricdim/graph.hpp"
#include "metricdim/invariants.hpp"
#include "metricdim/solver.hpp"

namespace metricdim {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

inline BigInt big_pow(long long base, long long exp) {
  BigInt r = 1;
  BigInt b = base;
  for (long long i = 0; i < exp; ++i) r *= b;
  return r;
}

inline void check_kd(long long k, long long D, long long min_d, const char* what) {
  if (k < 1) throw domain_error(std::string(what) + ": k must be >= 1");
  if (D < min_d)
    throw domain_error(std::string(what) + ": D must be >= " + std::to_string(min_d));
}

inline long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

}  // namespace detail

/// |E| <= (D - c)^k + k * sum_{i=0}^{c} (2i + 2)^{k-1}, for any integer c in [0, D].
inline BigInt edge_bound_general_c(long long k, long long D, long long c) {
  detail::check_kd(k, D, 1, "edge_bound_general_c");
  if (c < 0 || c > D) throw domain_error("edge_bound_general_c: c must lie in [0, D]");
  BigInt sum = 0;
  for (long long i = 0; i <= c; ++i) sum += detail::big_pow(2 * i + 2, k - 1);
  return detail::big_pow(D - c, k) + k * sum;
}

/// (floor(2D/3) + 1)^k + k * sum_{i=1}^{ceil(D/3)} (2i)^{k-1}
inline BigInt edge_bound_new(long long k, long long D) {
  detail::check_kd(k, D, 1, "edge_bound_new");
  BigInt sum = 0;
  for (long long i = 1; i <= detail::ceil_div(D, 3); ++i) sum += detail::big_pow(2 * i, k - 1);
  return detail::big_pow(2 * D / 3 + 1, k) + k * sum;
}

/// C(k, 2) + k D^{k-1} + D^k
inline BigInt edge_bound_zubrilina(long long k, long long D) {
  detail::check_kd(k, D, 1, "edge_bound_zubrilina");
  return BigInt(k * (k - 1) / 2) + k * detail::big_pow(D, k - 1) + detail::big_pow(D, k);
}

/// (floor(2D/3) + 1)^k + k * sum_{i=1}^{ceil(D/3)} (2i - 1)^{k-1}
inline BigInt vertex_bound_hernando(long long k, long long D) {
  detail::check_kd(k, D, 1, "vertex_bound_hernando");
  BigInt sum = 0;
  for (long long i = 1; i <= detail::ceil_div(D, 3); ++i) sum += detail::big_pow(2 * i - 1, k - 1);
  return detail::big_pow(2 * D / 3 + 1, k) + k * sum;
}

/// (D + 1)^k: vertices of a diameter-D subgraph when dim = k.
inline BigInt subgraph_vertex_bound(long long k, long long D) {
  detail::check_kd(k, D, 0, "subgraph_vertex_bound");
  return detail::big_pow(D + 1, k);
}

/// (D + 1)^k: edges of a diameter-D subgraph when edim = k.
inline BigInt subgraph_edge_bound(long long k, long long D) {
  detail::check_kd(k, D, 0, "subgraph_edge_bound");
  return detail::big_pow(D + 1, k);
}

/// radicand^(1/root) / divisor, kept exact. Models 3^k / 2 and 3^(k/2).
struct RadicalBound {
  BigInt radicand = 1;
  unsigned root = 1;
  BigInt divisor = 1;

  /// n <= bound, decided exactly: (n * divisor)^root <= radicand.
  bool admits(const BigInt& n) const {
    if (n < 0) return true;
    BigInt lhs = 1;
    const BigInt scaled = n * divisor;
    for (unsigned i = 0; i < root; ++i) lhs *= scaled;
    return lhs <= radicand;
  }

  /// Largest integer n with admits(n).
  BigInt floor() const {
    BigInt lo = 0;
    BigInt hi = radicand + 1;  // admits(hi) is false for divisor >= 1
    while (hi - lo > 1) {
      const BigInt mid = (lo + hi) / 2;
      if (admits(mid)) lo = mid; else hi = mid;
    }
    return lo;
  }

  /// The bound is itself an integer.
  bool exact() const {
    const BigInt scaled = floor() * divisor;
    BigInt p = 1;
    for (unsigned i = 0; i < root; ++i) p *= scaled;
    return p == radicand;
  }
};

struct IntRange {
  BigInt lower;
  BigInt upper;
};

/// Extremal subgraph sizes for dimension k.
struct PatternBounds {
  long long k = 0;
  BigInt clique_md_max;          // largest K_n with dim <= k, exactly 2^k
  BigInt star_edim_max;          // largest K_{1,n} with edim <= k, exactly 2^k
  IntRange star_md;              // [3^k - k - 1, 3^k - 1]
  BigInt biclique_md_lower;      // 2^floor(k/2) - 1
  RadicalBound biclique_md_upper;    // 3^k / 2
  BigInt biclique_edim_lower;    // 2^floor(k/2)
  RadicalBound biclique_edim_upper;  // 3^(k/2)
};

inline PatternBounds pattern_bounds(long long k) {
  if (k < 1) throw domain_error("pattern_bounds: k must be >= 1");
  PatternBounds p;
  p.k = k;
  const BigInt three_k = detail::big_pow(3, k);
  p.clique_md_max = detail::big_pow(2, k);
  p.star_edim_max = detail::big_pow(2, k);
  p.star_md = {three_k - k - 1, three_k - 1};
  p.biclique_md_lower = detail::big_pow(2, k / 2) - 1;
  p.biclique_md_upper = {three_k, 1, 2};
  p.biclique_edim_lower = detail::big_pow(2, k / 2);
  p.biclique_edim_upper = {three_k, 2, 1};
  return p;
}

/// One evaluated inequality lhs <= rhs.
struct InequalityCheck {
  std::string id;
  BigInt lhs;
  BigInt rhs;
  bool pass = false;
};

struct AuditRecord {
  int n = 0;
  int edges = 0;
  int dim = 0;
  int edim = 0;
  int diameter = 0;
  int max_degree = 0;
  int degeneracy = 0;
  int clique = 0;
  int chromatic = 0;
  bool chromatic_exact = false;
  bool certified = false;  // dim and edim both certified optimal
  std::vector<InequalityCheck> checks;

  bool pass() const {
    if (!certified) return false;
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const InequalityCheck* find(const std::string& id) const {
    for (const auto& c : checks)
      if (c.id == id) return &c;
    return nullptr;
  }
};

/// Identifiers of the inequalities audit_graph evaluates.
inline const std::vector<std::string>& audit_check_ids() {
  static const std::vector<std::string> ids{
      "edge-bound-new",        "edge-bound-zubrilina",    "vertex-bound-hernando",
      "subgraph-vertex-self",  "subgraph-edge-self",      "corollary-edges-md",
      "corollary-edges-emd",   "corollary-chromatic",     "corollary-degeneracy-md",
      "corollary-degeneracy-emd", "star-md",              "star-edim",
      "clique-md"};
  return ids;
}

/// Computes dim, edim, diameter and the classical invariants, then evaluates
/// every applicable inequality. Bounds needing k >= 1 are skipped when the
/// relevant dimension is 0 (n <= 2).
inline AuditRecord audit_graph(const Graph& g, const SolveOptions& opts = {}) {
  require_connected(g, "audit_graph");
  AuditRecord a;
  const DimensionCertificate dim = metric_dimension(g, opts);
  const DimensionCertificate edim = edge_metric_dimension(g, opts);
  a.certified = dim.optimal && edim.optimal;
  a.n = g.order();
  a.edges = g.size();
  a.dim = dim.value;
  a.edim = edim.value;
  a.diameter = diameter(g);
  a.max_degree = g.max_degree();
  a.degeneracy = degeneracy(g);
  a.clique = max_clique(g).size();
  a.chromatic_exact = g.order() <= 16;
  a.chromatic = a.chromatic_exact ? chromatic_number(g) : greedy_coloring(g);

  auto add = [&](const char* id, const BigInt& lhs, const BigInt& rhs) {
    a.checks.push_back({id, lhs, rhs, lhs <= rhs});
  };
  const long long D = a.diameter;
  const long long n = a.n;
  const long long m = a.edges;
  if (a.edim >= 1 && D >= 1) {
    add("edge-bound-new", m, edge_bound_new(a.edim, D));
    add("edge-bound-zubrilina", m, edge_bound_zubrilina(a.edim, D));
  }
  if (a.dim >= 1 && D >= 1) add("vertex-bound-hernando", n, vertex_bound_hernando(a.dim, D));
  if (a.dim >= 1) {
    add("subgraph-vertex-self", n, subgraph_vertex_bound(a.dim, D));
    const BigInt three = detail::big_pow(3, a.dim);
    add("corollary-edges-md", 2 * m, (three - 1) * n);
    add("corollary-chromatic", a.chromatic, three);
    add("corollary-degeneracy-md", a.degeneracy, three - 1);
    add("star-md", a.max_degree, three - 1);
    add("clique-md", a.clique, detail::big_pow(2, a.dim));
  }
  if (a.edim >= 1) {
    add("subgraph-edge-self", m, subgraph_edge_bound(a.edim, D));
    add("corollary-edges-emd", m, detail::big_pow(2, a.edim - 1) * n);
    add("corollary-degeneracy-emd", a.degeneracy, detail::big_pow(2, a.edim));
    add("star-edim", a.max_degree, detail::big_pow(2, a.edim));
  }
  return a;
}

}  // namespace metricdim
