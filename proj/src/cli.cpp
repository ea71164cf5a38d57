#include "jmg/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "jmg/error.hpp"
#include "jmg/json_io.hpp"
#include "jmg/obstruction.hpp"

namespace jmg::cli {

namespace {

using io::json;

constexpr double kSolverTol = 1e-7;

class InputError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json read_json(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": invalid JSON: " + e.what(), e.byte);
  }
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

std::string render(const json& j) { return j.dump(2) + "\n"; }

std::string fmt_double(double x) {
  std::ostringstream s;
  s << std::setprecision(6) << x;
  return s.str();
}

// Runs body; maps library and parse errors to exit code 2.
template <typename F>
CommandResult guarded(F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {kExitInputError, std::string("error: ") + e.what() + "\n"};
  }
}

std::vector<std::size_t> parse_outcomes(const std::string& spec, std::size_t vertices) {
  std::vector<std::size_t> n(vertices, 2);
  if (spec.empty()) return n;
  auto to_count = [&](const std::string& s) -> std::size_t {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      throw InputError("--outcomes: malformed number '" + s + "'");
    }
    if (used != s.size() || v < 2) throw InputError("--outcomes: counts must be integers >= 2");
    return static_cast<std::size_t>(v);
  };
  if (spec.find(':') == std::string::npos) {
    n.assign(vertices, to_count(spec));
    return n;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw InputError("--outcomes: expected vertex:count pairs");
    const std::string vs = item.substr(0, colon);
    std::size_t used = 0;
    std::size_t v = 0;
    try {
      v = std::stoul(vs, &used);
    } catch (const std::exception&) {
      throw InputError("--outcomes: malformed vertex '" + vs + "'");
    }
    if (used != vs.size() || v >= vertices) throw InputError("--outcomes: vertex '" + vs + "' out of range");
    n[v] = to_count(item.substr(colon + 1));
  }
  return n;
}

std::string pretty_verification(const VerificationReport& report, const Graph& g) {
  std::string s = std::string("verification: ") + (report.passed ? "passed" : "FAILED") + "\n";
  for (const auto& v : report.violations) {
    if (v.kind == Violation::Kind::wrong_relation)
      s += "  pair (" + g.label(v.v) + ", " + g.label(v.w) + "): " + v.detail + " (commutator norm " +
           fmt_double(v.commutator_norm) + ")\n";
    else
      s += "  vertex " + g.label(v.v) + ": " + v.detail + "\n";
  }
  return s;
}

std::string pretty_jm(const JmReport& r, const std::string& indent = "") {
  std::string s = indent + "verdict: " + std::string(to_string(r.verdict)) + "\n";
  s += indent + "iterations: " + std::to_string(r.iterations) + "\n";
  s += indent + "final residual: " + fmt_double(r.final_residual) + "\n";
  if (r.witness) s += indent + "witness marginal error: " + fmt_double(r.marginal_error) + "\n";
  else s += indent + "residual plateaued: " + (r.plateaued ? "yes" : "no") + "\n";
  return s;
}

}  // namespace

CommandResult cmd_realize(const std::string& graph_file, std::string_view method, bool faithful,
                          const std::string& outcomes, const CommonOptions& options) {
  return guarded([&]() -> CommandResult {
    const Graph g = io::graph_from_text(read_file(graph_file));
    Realization r;
    if (method == "direct-sum") r = realize_direct_sum(g);
    else if (method == "rank-one") r = realize_rank_one(g);
    else if (method == "rank-one-restricted") r = restrict_to_span(realize_rank_one(g));
    else throw InputError("unknown method '" + std::string(method) + "'");

    if ((faithful || !outcomes.empty()) && !r.exact())
      throw InputError("--faithful and --outcomes need an exact method (direct-sum or rank-one)");
    if (faithful) r = make_faithful(r);

    json artifact;
    VerificationReport report;
    std::size_t dim = r.space_dim;
    if (!outcomes.empty()) {
      const auto pvms = extend_outcomes(r, parse_outcomes(outcomes, g.vertex_count()));
      report = verify_realization(g, pvms);
      artifact = io::to_json(pvms);
      dim = pvms.space_dim;
    } else {
      report = verify_realization(g, r, options.tol.value_or(kDefaultCheckTol));
      artifact = io::to_json(r);
    }
    if (options.out) write_file(*options.out, artifact);

    const int code = report.passed ? kExitOk : kExitFailed;
    if (options.pretty) {
      std::string s = "method: " + std::string(to_string(r.method)) + "\n";
      s += "kind: " + std::string(outcomes.empty() ? "projections" : "pvms") + "\n";
      s += "vertices: " + std::to_string(g.vertex_count()) + ", non-edges: " +
           std::to_string(non_edges(g).size()) + "\n";
      s += "space dimension: " + std::to_string(dim) + "\n";
      s += pretty_verification(report, g);
      if (options.out) s += "written: " + *options.out + "\n";
      return {code, s};
    }
    json summary{{"method", std::string(to_string(r.method))},
                 {"kind", outcomes.empty() ? "projections" : "pvms"},
                 {"space_dim", dim},
                 {"non_edges", non_edges(g).size()},
                 {"verification", io::to_json(report, g)}};
    if (options.out) summary["out"] = *options.out;
    else summary["realization"] = artifact;
    return {code, render(summary)};
  });
}

CommandResult cmd_verify(const std::string& graph_file, const std::string& realization_file,
                         const CommonOptions& options) {
  return guarded([&]() -> CommandResult {
    const Graph g = io::graph_from_text(read_file(graph_file));
    const json j = read_json(realization_file);
    VerificationReport report;
    if (j.is_object() && j.contains("pvms")) {
      report = verify_realization(g, io::pvm_realization_from_json(j));
    } else {
      report = verify_realization(g, io::realization_from_json(j), options.tol.value_or(kDefaultCheckTol));
    }
    const int code = report.passed ? kExitOk : kExitFailed;
    if (options.pretty) return {code, pretty_verification(report, g)};
    return {code, render(io::to_json(report, g))};
  });
}

CommandResult cmd_dilate(const std::string& povm_file, const CommonOptions& options) {
  return guarded([&]() -> CommandResult {
    const Povm e = io::povm_from_json(read_json(povm_file));
    const auto check = validate_povm(e, options.tol.value_or(1e-8));
    if (!check.valid) throw DomainError("invalid POVM: " + check.reason);
    const DilationResult d = neumark_dilate(e);
    if (options.out) write_file(*options.out, io::to_json(d));
    const double residual = std::max(d.isometry_error, d.max_reconstruction_error);
    if (options.pretty) {
      std::string s = "outcomes: " + std::to_string(e.size()) + "\n";
      s += "enlarged dimension: " + std::to_string(d.enlarged_dim) + "\n";
      s += "isometry error |V^dag V - 1|: " + fmt_double(d.isometry_error) + "\n";
      s += "max reconstruction error |V^dag P(i) V - E(i)|: " + fmt_double(d.max_reconstruction_error) + "\n";
      if (options.out) s += "written: " + *options.out + "\n";
      return {kExitOk, s};
    }
    json summary{{"enlarged_dim", d.enlarged_dim},
                 {"isometry_error", d.isometry_error},
                 {"max_reconstruction_error", d.max_reconstruction_error},
                 {"max_residual", residual}};
    if (options.out) summary["out"] = *options.out;
    else summary["dilation"] = io::to_json(d);
    return {kExitOk, render(summary)};
  });
}

CommandResult cmd_jm_check(const std::vector<std::string>& povm_files, const CommonOptions& options) {
  return guarded([&]() -> CommandResult {
    if (povm_files.size() < 2) throw InputError("jm-check needs at least two POVM files");
    std::vector<Povm> povms;
    for (const auto& f : povm_files) {
      Povm p = io::povm_from_json(read_json(f));
      const auto check = validate_povm(p, 1e-8);
      if (!check.valid) throw DomainError(f + ": invalid POVM: " + check.reason);
      povms.push_back(std::move(p));
    }
    JmOptions jm;
    jm.tol = options.tol.value_or(kSolverTol);
    jm.max_iter = options.max_iter;
    jm.guard_vars = options.guard_vars;
    const JmReport report = jm_feasible(povms, jm);
    if (options.out) write_file(*options.out, io::to_json(report));
    const int code = report.verdict == JmVerdict::feasible ? kExitOk : kExitFailed;
    if (options.pretty) return {code, pretty_jm(report)};
    return {code, render(io::to_json(report))};
  });
}

namespace {

CommandResult demo_fork(const CommonOptions& options) {
  const Graph fork(3, {{0, 1}, {0, 2}}, {"x", "y", "z"});
  const auto obstruction = clique_pvm_obstruction(fork);
  if (!obstruction) return {kExitFailed, "error: fork derivation produced no contradiction\n"};
  const auto realization = realize_direct_sum(fork);
  const auto check = verify_realization(fork, realization);
  if (options.pretty) {
    std::string s = "fork graph: x-y, x-z (y and z not adjacent)\n";
    s += "maximal cliques: {x, y}, {x, z}\n";
    s += "suppose both cliques are sent to PVMs: p_x + p_y = 1 = p_x + p_z\n";
    for (const auto& line : obstruction->derivation) s += "  " + line + "\n";
    s += "no realization sends both maximal cliques to PVMs\n";
    s += "as plain projections the fork is still realizable: direct-sum dimension " +
         std::to_string(realization.space_dim) + ", verification " + (check.passed ? "passed" : "FAILED") + "\n";
    return {check.passed ? kExitOk : kExitFailed, s};
  }
  json cliques = json::array();
  for (const auto& c : maximal_cliques(fork)) {
    json names = json::array();
    for (Vertex v : c) names.push_back(fork.label(v));
    cliques.push_back(std::move(names));
  }
  json out{{"demo", "fork"},
           {"graph", io::to_json(fork)},
           {"maximal_cliques", std::move(cliques)},
           {"assumption", "p_x + p_y = 1 = p_x + p_z"},
           {"forced_equality", "p_" + fork.label(obstruction->a) + " = " + obstruction->forced_a.to_string(fork) +
                                   " = p_" + fork.label(obstruction->b)},
           {"derivation", obstruction->derivation},
           {"contradiction", true},
           {"projection_realization",
            {{"space_dim", realization.space_dim}, {"verification_passed", check.passed}}}};
  return {check.passed ? kExitOk : kExitFailed, render(out)};
}

CommandResult demo_hollow_triangle(double eta, const CommonOptions& options) {
  JmOptions jm;
  jm.tol = options.tol.value_or(kSolverTol);
  jm.max_iter = options.max_iter;
  jm.guard_vars = options.guard_vars;
  const auto report = demo_theorem5(eta, jm);
  if (options.pretty) {
    std::string s = "noisy orthogonal triple E_k = (1 +- eta sigma_k)/2, eta = " + fmt_double(eta) + "\n";
    const char* names[3] = {"E1,E2", "E1,E3", "E2,E3"};
    for (std::size_t k = 0; k < 3; ++k) s += std::string("pair ") + names[k] + ":\n" + pretty_jm(report.pairs[k], "  ");
    s += "triple E1,E2,E3:\n" + pretty_jm(report.triple, "  ");
    s += std::string("hypergraph graph-induced: ") + (report.graph_induced ? "yes" : "no") + "\n";
    for (const auto& f : report.flags) s += "flag: " + f + "\n";
    s += report.conclusion + "\n";
    return {kExitOk, s};
  }
  return {kExitOk, render(io::to_json(report))};
}

CommandResult demo_lower_bound(std::size_t dim, const CommonOptions& options) {
  const auto lb = lower_bound_graph(dim);
  if (options.pretty) {
    std::string s = "dimension d = " + std::to_string(dim) + ", Bell number B_d = " +
                    std::to_string(lb.bell_number) + "\n";
    s += "action vertices: " + std::to_string(lb.action.size()) + " (pairwise adjacent)\n";
    s += "control vertices: " + std::to_string(lb.control.size()) + " (pairwise non-adjacent)\n";
    s += "graph: " + serialize_graph(lb.graph) + "\n";
    s += "no realization as PVMs in dimension " + std::to_string(dim) + ": the " +
         std::to_string(lb.action.size()) + " action PVMs are pairwise distinct and commuting, but only " +
         std::to_string(lb.bell_number) + " partitions of {1..d} exist\n";
    return {kExitOk, s};
  }
  json out = io::to_json(lb);
  out["demo"] = "lower-bound";
  out["partition_count"] = lb.bell_number;
  if (dim <= 4) {
    json parts = json::array();
    for (const auto& p : enumerate_partitions(dim)) parts.push_back(io::to_json(p));
    out["partitions"] = std::move(parts);
  }
  return {kExitOk, render(out)};
}

}  // namespace

CommandResult cmd_demo(std::string_view name, double eta, std::size_t dim, const CommonOptions& options) {
  return guarded([&]() -> CommandResult {
    if (name == "fork") return demo_fork(options);
    if (name == "hollow-triangle") return demo_hollow_triangle(eta, options);
    if (name == "lower-bound") return demo_lower_bound(dim, options);
    throw InputError("unknown demo '" + std::string(name) + "' (expected fork, hollow-triangle, lower-bound)");
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Joint measurability graphs: realizations, dilations and feasibility checks", "jmg"};
  app.require_subcommand(1);

  CommonOptions common;
  double tol = 0.0;
  app.add_option("--tol", tol, "Tolerance (default 1e-7 solver, 1e-9 checks)");
  app.add_option("--max-iter", common.max_iter, "Solver iteration limit")->capture_default_str();
  app.add_flag("--pretty", common.pretty, "Human-readable report instead of JSON");
  std::string out_path;
  app.add_option("--out", out_path, "Write the produced artifact to this path");

  std::string graph_file, realization_file, method = "direct-sum", outcomes, povm_file, demo_name;
  std::vector<std::string> povm_files;
  bool faithful = false;
  double eta = 0.6;
  std::size_t dim = 2;

  auto* realize = app.add_subcommand("realize", "Realize a graph as projections or PVMs");
  realize->add_option("graph", graph_file, "Graph file (edge list or JSON)")->required();
  realize->add_option("--method", method, "direct-sum | rank-one | rank-one-restricted")->capture_default_str();
  realize->add_flag("--faithful", faithful, "Make the realization faithful");
  realize->add_option("--outcomes", outcomes, "PVM outcome counts: n for every vertex, or v:n,v:n");

  auto* verify = app.add_subcommand("verify", "Check a realization against a graph");
  verify->add_option("graph", graph_file)->required();
  verify->add_option("realization", realization_file)->required();

  auto* dilate = app.add_subcommand("dilate", "Neumark-dilate a POVM");
  dilate->add_option("povm", povm_file)->required();

  auto* jm = app.add_subcommand("jm-check", "Decide joint measurability of POVMs");
  jm->add_option("povms", povm_files)->required();

  auto* demo = app.add_subcommand("demo", "fork | hollow-triangle | lower-bound");
  demo->add_option("name", demo_name)->required();
  demo->add_option("--eta", eta, "Noise parameter for hollow-triangle")->capture_default_str();
  demo->add_option("--dim", dim, "Dimension for lower-bound")->capture_default_str();

  // Global options may follow the subcommand.
  for (auto* sub : {realize, verify, dilate, jm, demo}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitInputError;
  }

  if (app.count("--tol")) common.tol = tol;
  if (!out_path.empty()) common.out = out_path;
  if (const char* guard = std::getenv("JMG_GUARD_VARS")) {
    try {
      common.guard_vars = std::stoull(guard);
    } catch (const std::exception&) {
      err << "error: JMG_GUARD_VARS must be a positive integer\n";
      return kExitInputError;
    }
  }

  CommandResult result;
  if (*realize) result = cmd_realize(graph_file, method, faithful, outcomes, common);
  else if (*verify) result = cmd_verify(graph_file, realization_file, common);
  else if (*dilate) result = cmd_dilate(povm_file, common);
  else if (*jm) result = cmd_jm_check(povm_files, common);
  else result = cmd_demo(demo_name, eta, dim, common);

  (result.exit_code == kExitInputError ? err : out) << result.report;
  return result.exit_code;
}

}  // namespace jmg::cli
