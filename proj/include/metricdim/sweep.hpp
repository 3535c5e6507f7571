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

// Exhaustive theorem sweeps over all connected graphs with 3 <= n <= n_max.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "metricdim/bounds.hpp"
#include "metricdim/characterizations.hpp"
#include "metricdim/enumerator.hpp"
#include "metricdim/graph6.hpp"
#include "metricdim/invariants.hpp"
#include "metricdim/solver.hpp"

namespace metricdim {

inline constexpr int sweep_schema_version = 1;
inline constexpr int sweep_min_order = 3;

struct SweepFailure {
  CanonicalForm form;
  std::string graph6;
  std::string details;
};

struct SweepReport {
  std::string theorem_id;
  int n_min = sweep_min_order;
  int n_max = 0;
  std::map<int, std::size_t> counts;  // graphs checked per order
  std::size_t graphs_checked = 0;
  std::vector<SweepFailure> failures;
  std::size_t solver_budget_exhaustions = 0;
  double elapsed_ms = 0;
  bool exploratory = false;
  /// Exploratory sweeps only: largest clique seen per edim value, and how
  /// many graphs had that edim.
  std::map<int, std::pair<int, std::size_t>> clique_by_edim;

  bool passed() const { return failures.empty(); }
};

struct SweepOptions {
  int threads = 1;
  std::optional<std::uint64_t> node_budget;
  bool allow_nine = false;
};

inline const std::vector<std::string>& sweep_theorem_ids() {
  static const std::vector<std::string> ids{
      "char1-equiv",          "char2-equiv",          "eq-n2-equiv",
      "tuple-lemma",          "diam-le-5",            "diam-le-3k-1",
      "edge-bound-new",       "edge-bound-zubrilina", "vertex-bound-hernando",
      "subgraph-bounds-self", "corollary-edges-md",   "corollary-edges-emd",
      "corollary-chromatic",  "corollary-degeneracy", "clique-vs-edim-explore"};
  return ids;
}

namespace detail {

struct GraphOutcome {
  bool ok = true;
  bool budget_exhausted = false;
  std::string details;
  int edim = 0;
  int clique = 0;
};

inline std::vector<std::string> audit_ids_for(const std::string& id) {
  if (id == "subgraph-bounds-self") return {"subgraph-vertex-self", "subgraph-edge-self"};
  if (id == "corollary-degeneracy") return {"corollary-degeneracy-md", "corollary-degeneracy-emd"};
  return {id};
}

inline bool is_audit_sweep(const std::string& id) {
  return id == "edge-bound-new" || id == "edge-bound-zubrilina" || id == "vertex-bound-hernando" ||
         id == "subgraph-bounds-self" || id == "corollary-edges-md" ||
         id == "corollary-edges-emd" || id == "corollary-chromatic" ||
         id == "corollary-degeneracy";
}

inline GraphOutcome check_graph(const std::string& id, const Graph& g, const SolveOptions& solve) {
  GraphOutcome out;
  const int n = g.order();
  std::ostringstream why;

  if (is_audit_sweep(id)) {
    const AuditRecord a = audit_graph(g, solve);
    if (!a.certified) {
      out.budget_exhausted = true;
      return out;
    }
    for (const std::string& check : audit_ids_for(id)) {
      const InequalityCheck* c = a.find(check);
      if (c == nullptr) {
        out.ok = false;
        why << check << ": not applicable (dim " << a.dim << ", edim " << a.edim << "); ";
      } else if (!c->pass) {
        out.ok = false;
        why << check << ": " << c->lhs << " > " << c->rhs << "; ";
      }
    }
    out.details = why.str();
    return out;
  }

  const DimensionCertificate cert = edge_metric_dimension(g, solve);
  if (!cert.optimal) {
    out.budget_exhausted = true;
    return out;
  }
  const int edim = cert.value;
  out.edim = edim;
  const auto mismatch = [&](bool predicate, bool truth, const char* name) {
    if (predicate != truth) {
      out.ok = false;
      why << name << " = " << (predicate ? "true" : "false") << " but edim = " << edim
          << ", n = " << n;
    }
  };

  if (id == "char1-equiv") {
    mismatch(char_edim_n1(g).holds, edim == n - 1, "char_edim_n1");
  } else if (id == "char2-equiv") {
    mismatch(char_edim_ge_n2(g).holds, edim >= n - 2, "char_edim_ge_n2");
  } else if (id == "eq-n2-equiv") {
    mismatch(char_edim_eq_n2(g), edim == n - 2, "char_edim_eq_n2");
  } else if (id == "tuple-lemma") {
    const TupleLemmaResult t = tuple_lemma_check(g, n - edim);
    if (!t.holds) {
      out.ok = false;
      why << "tuple of size " << (n - edim + 1) << " pairwise at distance >= 3:";
      for (int v : t.violating) why << ' ' << v;
    }
  } else if (id == "diam-le-5") {
    const int diam = diameter(g);
    if (edim == n - 2 && diam > 5) {
      out.ok = false;
      why << "edim = n - 2 = " << edim << " but diameter = " << diam;
    }
  } else if (id == "diam-le-3k-1") {
    const int diam = diameter(g);
    const int k = n - edim;
    if (diam > 3 * k - 1) {
      out.ok = false;
      why << "diameter " << diam << " > 3k - 1 = " << (3 * k - 1) << " (k = " << k << ")";
    }
  } else if (id == "clique-vs-edim-explore") {
    out.clique = max_clique(g).size();
  }
  out.details = why.str();
  return out;
}

}  // namespace detail

/// Runs theorem `theorem_id` over every connected graph with
/// 3 <= n <= n_max. The report does not depend on the thread count.
inline SweepReport sweep(const std::string& theorem_id, int n_max, const SweepOptions& opts = {}) {
  const auto& ids = sweep_theorem_ids();
  if (std::find(ids.begin(), ids.end(), theorem_id) == ids.end())
    throw domain_error("unknown theorem id '" + theorem_id + "'");
  if (n_max < sweep_min_order) throw domain_error("sweep: n_max must be at least 3");

  const auto start = std::chrono::steady_clock::now();
  SweepReport report;
  report.theorem_id = theorem_id;
  report.n_max = n_max;
  report.exploratory = theorem_id == "clique-vs-edim-explore";

  const auto levels =
      enumerate_connected_range(sweep_min_order, n_max, EnumerateOptions{opts.allow_nine});
  std::vector<const Graph*> graphs;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    report.counts[sweep_min_order + static_cast<int>(i)] = levels[i].size();
    for (const Graph& g : levels[i]) graphs.push_back(&g);
  }

  const SolveOptions solve{opts.node_budget};
  std::vector<detail::GraphOutcome> outcomes(graphs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++)
      outcomes[i] = detail::check_graph(theorem_id, *graphs[i], solve);
  };
  const int threads = std::max(1, opts.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto& o = outcomes[i];
    ++report.graphs_checked;
    if (o.budget_exhausted) {
      ++report.solver_budget_exhaustions;
      continue;
    }
    if (report.exploratory) {
      auto& slot = report.clique_by_edim[o.edim];
      slot.first = std::max(slot.first, o.clique);
      ++slot.second;
    }
    if (!o.ok)
      report.failures.push_back({canonical_form(*graphs[i]), graph6_encode(*graphs[i]), o.details});
  }
  std::sort(report.failures.begin(), report.failures.end(),
            [](const SweepFailure& a, const SweepFailure& b) { return a.form < b.form; });
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

/// JSON schema: schema_version, theorem_id, n_min, n_max, counts,
/// graphs_checked, failures[], solver_budget_exhaustions, elapsed_ms, and for
/// exploratory sweeps a `data` table.
inline nlohmann::ordered_json to_json(const SweepReport& r, bool include_timing = true) {
  nlohmann::ordered_json j;
  j["schema_version"] = sweep_schema_version;
  j["theorem_id"] = r.theorem_id;
  j["n_min"] = r.n_min;
  j["n_max"] = r.n_max;
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (const auto& [n, c] : r.counts) counts[std::to_string(n)] = c;
  j["counts"] = counts;
  j["graphs_checked"] = r.graphs_checked;
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const auto& f : r.failures) failures.push_back({{"graph6", f.graph6}, {"details", f.details}});
  j["failures"] = failures;
  j["solver_budget_exhaustions"] = r.solver_budget_exhaustions;
  if (r.exploratory) {
    nlohmann::ordered_json data = nlohmann::ordered_json::array();
    for (const auto& [k, v] : r.clique_by_edim)
      data.push_back({{"edim", k}, {"max_clique", v.first}, {"graphs", v.second}});
    j["data"] = data;
  }
  if (include_timing) j["elapsed_ms"] = static_cast<long long>(r.elapsed_ms);
  return j;
}

inline std::string to_table(const SweepReport& r) {
  std::ostringstream out;
  out << "theorem        " << r.theorem_id << '\n';
  out << "orders         " << r.n_min << ".." << r.n_max << '\n';
  for (const auto& [n, c] : r.counts) out << "  n = " << n << "        " << c << " graphs\n";
  out << "checked        " << r.graphs_checked << '\n';
  out << "budget hits    " << r.solver_budget_exhaustions << '\n';
  if (r.exploratory) {
    out << "edim  max_clique  graphs\n";
    for (const auto& [k, v] : r.clique_by_edim)
      out << "  " << k << "      " << v.first << "        " << v.second << '\n';
  } else {
    out << "failures       " << r.failures.size() << '\n';
    for (const auto& f : r.failures) out << "  " << f.graph6 << "  " << f.details << '\n';
  }
  out << "elapsed        " << static_cast<long long>(r.elapsed_ms) << " ms\n";
  return out.str();
}

}  // namespace metricdim
