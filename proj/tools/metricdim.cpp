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

// metricdim: command-line front end.
//
// Exit codes: 0 pass, 1 property failed, 2 usage or parse error,
// 3 precondition (e.g. disconnected input), 4 solver budget exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "metricdim/metricdim.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace metricdim;

enum exit_code { exit_pass = 0, exit_fail = 1, exit_usage = 2, exit_precondition = 3, exit_budget = 4 };

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphInput {
  std::string path = "-";
  std::string format;
};

struct Common {
  std::string output = "json";
  std::uint64_t budget = 10'000'000;
};

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

Graph load_graph(const GraphInput& in) {
  std::string text = slurp(in.path);
  if (in.format == "edgelist") return parse_edge_list(text);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  std::size_t start = 0;
  while (start < text.size() && std::isspace(static_cast<unsigned char>(text[start]))) ++start;
  return graph6_decode(std::string_view(text).substr(start));
}

void add_graph_input(CLI::App* cmd, GraphInput& in) {
  cmd->add_option("input", in.path, "graph file, or - for stdin")->capture_default_str();
  cmd->add_option("--format", in.format, "input format")
      ->required()
      ->check(CLI::IsMember({"graph6", "edgelist"}));
}

void add_output(CLI::App* cmd, Common& c) {
  cmd->add_option("--output", c.output, "output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "csv", "table"}));
}

void add_budget(CLI::App* cmd, Common& c) {
  cmd->add_option("--budget", c.budget, "solver node budget")->capture_default_str();
}

std::string join(const std::vector<int>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string edge_string(const Edge& e) { return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"; }

json witness_json(const ResolutionWitness& w) {
  json j;
  if (w.kind == ObjectKind::vertex) {
    j["first"] = w.first;
    j["second"] = w.second;
  } else {
    j["first"] = {w.first_edge.u, w.first_edge.v};
    j["second"] = {w.second_edge.u, w.second_edge.v};
  }
  j["vector"] = w.shared_vector;
  return j;
}

std::string witness_text(const ResolutionWitness& w) {
  std::string s = w.kind == ObjectKind::vertex
                      ? std::to_string(w.first) + " and " + std::to_string(w.second)
                      : edge_string(w.first_edge) + " and " + edge_string(w.second_edge);
  return s + " share (" + join(w.shared_vector, ",") + ")";
}

int cmd_dimension(const GraphInput& in, const Common& c, bool edge) {
  const Graph g = load_graph(in);
  require_connected(g, edge ? "edim" : "dim");
  const SolveOptions opts{c.budget};
  const DimensionCertificate cert = edge ? edge_metric_dimension(g, opts) : metric_dimension(g, opts);
  const char* name = edge ? "edim" : "dim";
  if (c.output == "json") {
    json j;
    j["schema_version"] = 1;
    j["command"] = name;
    j["n"] = g.order();
    j["value"] = cert.value;
    j["basis"] = cert.basis.ids();
    j["optimal"] = cert.optimal;
    j["lower_bound"] = cert.lower_bound;
    j["nodes"] = cert.nodes;
    std::cout << j.dump(2) << '\n';
  } else if (c.output == "csv") {
    std::cout << "command,n,value,optimal,lower_bound,nodes,basis\n"
              << name << ',' << g.order() << ',' << cert.value << ',' << (cert.optimal ? "true" : "false")
              << ',' << cert.lower_bound << ',' << cert.nodes << ',' << join(cert.basis.ids(), " ") << '\n';
  } else {
    std::cout << name << "         " << cert.value << '\n'
              << "basis       {" << join(cert.basis.ids(), ", ") << "}\n"
              << "optimal     " << (cert.optimal ? "yes" : "no") << '\n';
    if (!cert.optimal)
      std::cout << "bounds      " << cert.lower_bound << " <= " << name << " <= " << cert.value << '\n';
    std::cout << "nodes       " << cert.nodes << '\n';
  }
  return cert.optimal ? exit_pass : exit_budget;
}

int cmd_verify(const GraphInput& in, const Common& c, const std::vector<int>& landmarks, bool edges) {
  const Graph g = load_graph(in);
  const LandmarkSet s(landmarks);
  s.check_within(g.order());
  const ResolutionResult r = is_resolving(g, s, edges ? ObjectKind::edge : ObjectKind::vertex);
  if (c.output == "json") {
    json j;
    j["schema_version"] = 1;
    j["command"] = "verify";
    j["objects"] = edges ? "edges" : "vertices";
    j["landmarks"] = s.ids();
    j["resolving"] = r.resolving;
    j["witness"] = r.witness ? witness_json(*r.witness) : json(nullptr);
    std::cout << j.dump(2) << '\n';
  } else if (c.output == "csv") {
    std::cout << "objects,landmarks,resolving,witness\n"
              << (edges ? "edges" : "vertices") << ',' << join(s.ids(), " ") << ','
              << (r.resolving ? "true" : "false") << ',' << (r.witness ? witness_text(*r.witness) : "")
              << '\n';
  } else {
    std::cout << (r.resolving ? "resolving" : "not resolving");
    if (r.witness) std::cout << ": " << witness_text(*r.witness);
    std::cout << '\n';
  }
  return r.resolving ? exit_pass : exit_fail;
}

int cmd_construct(const Common& c, const std::string& family, int k, const std::vector<int>& dims,
                  bool check) {
  if (family == "grid" && dims.empty()) throw usage_error("grid requires --dims");
  if (family != "grid" && k == 0) throw usage_error(family + " requires --k");
  const ConstructionOutput out = construct(family, k, dims);
  const bool vertex = out.certifies == ObjectKind::vertex;
  json j;
  j["schema_version"] = 1;
  j["family"] = out.family;
  j["n"] = out.graph.order();
  j["edges"] = out.graph.size();
  j["graph6"] = graph6_encode(out.graph);
  j["certifies"] = vertex ? "vertices" : "edges";
  j["landmarks"] = out.landmarks.ids();
  json roles = json::array();
  for (int v = 0; v < out.graph.order(); ++v) {
    json r{{"vertex", v}, {"role", out.roles[v]}};
    if (!out.labels[v].empty()) r["label"] = out.labels[v];
    roles.push_back(r);
  }
  j["roles"] = roles;
  json deleted = json::array();
  for (const auto& d : out.deleted) deleted.push_back({{"role", d.role}, {"label", d.label}});
  j["deleted"] = deleted;
  int code = exit_pass;
  if (check) {
    const CertificateCheck chk = verify_certificate(out);
    json cj{{"ok", chk.ok}, {"problem", chk.problem}};
    if (chk.witness) cj["witness"] = witness_json(*chk.witness);
    cj["max_degree"] = out.graph.max_degree();
    if (out.graph.connected() && out.graph.order() <= unbudgeted_order_limit) {
      const SolveOptions opts{c.budget};
      const DimensionCertificate cert =
          vertex ? metric_dimension(out.graph, opts) : edge_metric_dimension(out.graph, opts);
      cj["solver"] = {{"value", cert.value}, {"basis", cert.basis.ids()}, {"optimal", cert.optimal}};
    }
    j["check"] = cj;
    if (!chk.ok) code = exit_fail;
  }
  if (c.output == "json") {
    std::cout << j.dump(2) << '\n';
  } else if (c.output == "csv") {
    std::cout << "vertex,role,label,landmark\n";
    for (int v = 0; v < out.graph.order(); ++v)
      std::cout << v << ',' << out.roles[v] << ',' << out.labels[v] << ','
                << (out.landmarks.as_set().contains(v) ? 1 : 0) << '\n';
  } else {
    std::cout << "family      " << out.family << '\n'
              << "order       " << out.graph.order() << " vertices, " << out.graph.size() << " edges\n"
              << "graph6      " << graph6_encode(out.graph) << '\n'
              << "landmarks   {" << join(out.landmarks.ids(), ", ") << "} resolve the "
              << (vertex ? "vertices" : "edges") << '\n';
    if (check) {
      const json& cj = j["check"];
      std::cout << "check       " << (cj["ok"].get<bool>() ? "ok" : cj["problem"].get<std::string>()) << '\n';
      if (cj.contains("solver"))
        std::cout << "solver      " << (vertex ? "dim " : "edim ") << cj["solver"]["value"].get<int>()
                  << (cj["solver"]["optimal"].get<bool>() ? "" : " (not certified)") << '\n';
    }
  }
  return code;
}

int threads_from_env(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("METRICDIM_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t > 0) return t;
    } catch (const std::exception&) {
    }
    throw usage_error(std::string("METRICDIM_THREADS must be a positive integer, got '") + env + "'");
  }
  return 1;
}

int cmd_check(const Common& c, const std::string& id, int max_n, int threads, bool allow_nine,
              bool no_timing) {
  const auto& ids = sweep_theorem_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw usage_error("unknown theorem id '" + id + "'");
  SweepOptions opts;
  opts.threads = threads_from_env(threads);
  opts.node_budget = c.budget;
  opts.allow_nine = allow_nine;
  const SweepReport r = sweep(id, max_n, opts);
  if (c.output == "json") {
    std::cout << to_json(r, !no_timing).dump(2) << '\n';
  } else if (c.output == "csv") {
    if (r.exploratory) {
      std::cout << "edim,max_clique,graphs\n";
      for (const auto& [k, v] : r.clique_by_edim) std::cout << k << ',' << v.first << ',' << v.second << '\n';
    } else {
      std::cout << "graph6,details\n";
      for (const auto& f : r.failures) std::cout << f.graph6 << ",\"" << f.details << "\"\n";
    }
  } else {
    std::cout << to_table(r);
  }
  if (!r.failures.empty()) return exit_fail;
  return r.solver_budget_exhaustions == 0 ? exit_pass : exit_budget;
}

std::pair<long long, long long> parse_range(const std::string& text, const char* what) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const long long v = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    const long long lo = std::stoll(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    const long long hi = std::stoll(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    if (hi < lo) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::exception&) {
    throw usage_error(std::string("bad ") + what + " range '" + text + "' (expected N or A..B)");
  }
}

int cmd_bounds(const Common& c, const std::string& k_text, const std::string& d_text) {
  const auto [k_lo, k_hi] = parse_range(k_text, "--k");
  const auto [d_lo, d_hi] = parse_range(d_text, "--d");
  if (k_lo < 1 || d_lo < 1) throw usage_error("bounds need k >= 1 and D >= 1");
  if (k_hi - k_lo > 64 || d_hi - d_lo > 1000) throw usage_error("bounds: range too large");
  json rows = json::array();
  for (long long k = k_lo; k <= k_hi; ++k)
    for (long long d = d_lo; d <= d_hi; ++d)
      rows.push_back({{"k", k},
                      {"D", d},
                      {"edge_bound_new", edge_bound_new(k, d).str()},
                      {"edge_bound_zubrilina", edge_bound_zubrilina(k, d).str()},
                      {"vertex_bound_hernando", vertex_bound_hernando(k, d).str()},
                      {"subgraph_bound", subgraph_vertex_bound(k, d).str()}});
  if (c.output == "json") {
    std::cout << json{{"schema_version", 1}, {"rows", rows}}.dump(2) << '\n';
  } else {
    const bool csv = c.output == "csv";
    const char* cols[] = {"k", "D", "edge_bound_new", "edge_bound_zubrilina", "vertex_bound_hernando",
                          "subgraph_bound"};
    for (int i = 0; i < 6; ++i) {
      if (i) std::cout << (csv ? "," : "  ");
      std::cout << cols[i];
    }
    std::cout << '\n';
    for (const auto& row : rows) {
      int i = 0;
      for (const auto& [key, value] : row.items()) {
        if (i++) std::cout << (csv ? "," : "  ");
        if (value.is_string()) std::cout << value.get<std::string>(); else std::cout << value.dump();
      }
      std::cout << '\n';
    }
  }
  return exit_pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"metric dimension and edge metric dimension toolkit"};
  app.require_subcommand(1);

  GraphInput in;
  Common common;

  auto* dim = app.add_subcommand("dim", "metric dimension with a lexicographically least basis");
  auto* edim = app.add_subcommand("edim", "edge metric dimension with a lexicographically least basis");
  for (auto* cmd : {dim, edim}) {
    add_graph_input(cmd, in);
    add_output(cmd, common);
    add_budget(cmd, common);
  }

  std::vector<int> landmarks;
  bool edges = false;
  auto* verify = app.add_subcommand("verify", "check whether a landmark set resolves a graph");
  add_graph_input(verify, in);
  add_output(verify, common);
  verify->add_option("--landmarks", landmarks, "comma-separated vertex ids")->required()->delimiter(',');
  verify->add_flag("--edges", edges, "resolve edges instead of vertices");

  std::string family;
  int k = 0;
  std::vector<int> dims;
  bool check = false;
  auto* construct_cmd = app.add_subcommand("construct", "build an extremal construction");
  construct_cmd->add_option("family", family, "construction family")
      ->required()
      ->check(CLI::IsMember({"md-complete", "edim-star", "md-star", "md-biclique", "edim-biclique", "grid"}));
  construct_cmd->add_option("--k", k, "dimension parameter");
  construct_cmd->add_option("--dims", dims, "grid side lengths, comma-separated")->delimiter(',');
  construct_cmd->add_flag("--check", check, "re-verify the certificate and run the solver");
  add_output(construct_cmd, common);
  add_budget(construct_cmd, common);

  std::string theorem;
  int max_n = 7;
  int threads = 0;
  bool allow_nine = false;
  bool no_timing = false;
  auto* check_cmd = app.add_subcommand("check", "sweep a theorem over all small connected graphs");
  check_cmd->add_option("theorem", theorem, "theorem id")->required();
  check_cmd->add_option("--max-n", max_n, "largest order to enumerate")->capture_default_str();
  check_cmd->add_option("--threads", threads, "worker threads (default: METRICDIM_THREADS or 1)");
  check_cmd->add_flag("--allow-nine", allow_nine, "permit --max-n 9");
  check_cmd->add_flag("--no-timing", no_timing, "omit elapsed_ms from JSON");
  add_output(check_cmd, common);
  add_budget(check_cmd, common);

  std::string k_range;
  std::string d_range;
  auto* bounds = app.add_subcommand("bounds", "tabulate the closed-form bounds over k and D");
  bounds->add_option("--k", k_range, "k or k1..k2")->required();
  bounds->add_option("--d", d_range, "D or D1..D2")->required();
  add_output(bounds, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_pass : exit_usage;
  }

  try {
    if (dim->parsed()) return cmd_dimension(in, common, false);
    if (edim->parsed()) return cmd_dimension(in, common, true);
    if (verify->parsed()) return cmd_verify(in, common, landmarks, edges);
    if (construct_cmd->parsed()) return cmd_construct(common, family, k, dims, check);
    if (check_cmd->parsed()) return cmd_check(common, theorem, max_n, threads, allow_nine, no_timing);
    if (bounds->parsed()) return cmd_bounds(common, k_range, d_range);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const disconnected_graph& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_precondition;
  } catch (const budget_exhausted& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_budget;
  } catch (const inconsistent_instance& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_precondition;
  } catch (const metricdim::error& e) {
    // parse errors, bad ids, out-of-range parameters, size limits
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
