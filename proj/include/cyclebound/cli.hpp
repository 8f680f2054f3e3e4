#pragma once

// Command-line front end. Lives in a header so tests can drive run()
// in-process; tools/cyclebound.cpp is a thin main().

#include <chrono>
#include <ctime>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclebound/bounds.hpp"
#include "cyclebound/cycles.hpp"
#include "cyclebound/graph.hpp"
#include "cyclebound/oracle.hpp"
#include "cyclebound/powersum.hpp"
#include "cyclebound/spectral.hpp"
#include "cyclebound/symfun.hpp"

namespace cyclebound::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* version = "0.1.0";

enum exit_code : int { ok = 0, violations = 1, usage = 2 };

// ---------------------------------------------------------------------------
// JSON encoding of library types. Field names follow the struct members.

inline json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

inline json to_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

inline json to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"vertex_count", g.vertex_count()}, {"edge_count", g.edge_count()}, {"edges", edges}};
}

inline json to_json(const BoundReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"k", row.k},
                    {"exact_count", to_json(row.exact_count)},
                    {"naive_bound", row.naive_bound},
                    {"prime_bound", to_json(row.prime_bound)},
                    {"sharp_bound", to_json(row.sharp_bound)},
                    {"tightness_ratio", row.tightness_ratio},
                    {"ratio_basis", row.ratio_basis}});
  return {{"vertex_count", r.vertex_count}, {"edge_count", r.edge_count}, {"rows", rows}};
}

inline json to_json(const ExtremalSolution& s) {
  return {{"point", s.point},     {"n1", s.n1},           {"n2", s.n2},
          {"alpha1", s.alpha1},   {"alpha2", s.alpha2},   {"lambda1", s.lambda1},
          {"lambda2", s.lambda2}, {"objective", s.objective}};
}

inline json to_json(const ThresholdRecord& t) {
  return {{"p", t.p},
          {"g_value", t.g_value},
          {"h_value", t.h_value},
          {"n_threshold", t.n_threshold},
          {"exceptional_n", t.exceptional_n}};
}

inline json to_json(const VerificationReport& r) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  json witnesses = json::array();
  for (const auto& g : r.witnesses) witnesses.push_back(to_json(g));
  return {{"claim", r.claim},
          {"status", r.status()},
          {"params", params},
          {"instances_checked", r.instances_checked},
          {"instances_vacuous", r.instances_vacuous},
          {"violations", r.violations},
          {"witnesses", witnesses},
          {"witness_types", r.witness_types},
          {"wall_time_s", r.wall_time_s}};
}

inline json to_json(const DiscrepancyRecord& d) {
  json params = json::object();
  for (const auto& [k, v] : d.params) params[k] = v;
  json values = json::object();
  for (const auto& [k, v] : d.exact_values) {
    values[k] = to_json(BigInt(v.c_str()));
  }
  for (const auto& [k, v] : d.real_values) values[k] = v;
  return {{"probe", d.probe},
          {"claim", d.claim},
          {"params", params},
          {"values", values},
          {"discrepancy", d.discrepancy},
          {"detail", d.detail}};
}

inline json to_json(const SymPolyInE& s) {
  json terms = json::array();
  for (const auto& [m, c] : s.poly.terms())
    terms.push_back({{"e3", m.first}, {"e4", m.second}, {"coefficient", c.str()}});
  return {{"n", s.n}, {"k", s.k}, {"polynomial", s.poly.str()}, {"terms", terms}};
}

// ---------------------------------------------------------------------------
// Output

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

inline std::string csv_value(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return csv_field(v.get<std::string>());
  return csv_field(v.dump());
}

inline void write_text(std::ostream& out, const json& v, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) {
      if (x.is_structured() && !x.empty()) {
        out << pad << k << ":\n";
        write_text(out, x, indent + 1);
      } else {
        out << pad << k << ": " << (x.is_string() ? x.get<std::string>() : x.dump()) << '\n';
      }
    }
  } else if (v.is_array()) {
    for (const auto& x : v) {
      if (x.is_object()) {
        out << pad << "-\n";
        write_text(out, x, indent + 1);
      } else {
        out << pad << "- " << (x.is_string() ? x.get<std::string>() : x.dump()) << '\n';
      }
    }
  } else {
    out << pad << v.dump() << '\n';
  }
}

inline std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

struct Settings {
  std::string format = "json";
  bool no_meta = false;
  unsigned jobs = 1;
  std::uint64_t budget = default_search_budget;
  bool strict = false;
};

/// Document under construction plus an optional CSV table view.
struct Output {
  std::string command;
  json params = json::object();
  json results = json::object();
  std::vector<std::string> csv_header;
  std::vector<std::vector<json>> csv_rows;
  bool tabular = false;
  int status = exit_code::ok;
};

// ---------------------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral cycle counting, sharp cycle bounds and constrained power sums", "cyclebound"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", version);

  Settings cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_flag("--no-meta", cfg.no_meta, "Omit the timing/timestamp block from JSON output");
  app.add_option("--jobs", cfg.jobs, "Worker threads for sweeps and restarts")
      ->check(CLI::Range(1U, 256U))
      ->capture_default_str();
  app.add_option("--budget", cfg.budget, "Node-expansion budget for cycle and walk enumeration")
      ->capture_default_str();
  app.fallthrough();

  Output doc;
  std::optional<Graph> graph;
  std::string graph_path;
  std::size_t complete_n = 0;

  auto add_graph_source = [&](CLI::App* sub) {
    auto* file = sub->add_option("--graph", graph_path, "Edge-list file");
    auto* kn = sub->add_option("--complete", complete_n, "Use the complete graph K_n")->check(CLI::Range(1, 64));
    file->excludes(kn);
  };
  auto load_graph = [&]() -> const Graph& {
    if (!graph_path.empty()) {
      graph = read_edge_list(graph_path);
      doc.params["graph"] = graph_path;
    } else if (complete_n > 0) {
      graph = Graph::complete(complete_n);
      doc.params["complete"] = complete_n;
    } else {
      throw invalid_input("one of --graph or --complete is required");
    }
    return *graph;
  };

  // count ------------------------------------------------------------------
  unsigned count_kmax = 3;
  auto* count = app.add_subcommand("count", "Exact triangle, cycle and closed-walk counts");
  add_graph_source(count);
  count->add_option("--kmax", count_kmax, "Largest cycle length")->check(CLI::Range(3U, 64U))->capture_default_str();
  count->callback([&] {
    const Graph& g = load_graph();
    doc.params["kmax"] = count_kmax;
    const auto counts = count_cycles(g, count_kmax, cfg.budget);
    json by_length = json::object();
    for (const auto& [k, c] : counts.by_length) by_length[std::to_string(k)] = to_json(c);
    json traces = json::object();
    for (unsigned k = 1; k <= count_kmax; ++k) traces[std::to_string(k)] = to_json(trace_power(g, k));
    doc.results = {{"vertex_count", g.vertex_count()},
                   {"edge_count", g.edge_count()},
                   {"triangle_count", to_json(counts.triangle_count)},
                   {"by_length", by_length},
                   {"trace_powers", traces}};
  });

  // bounds -----------------------------------------------------------------
  unsigned bounds_kmax = 3;
  std::optional<double> bounds_edges;
  std::optional<long long> bounds_vertices;
  auto* bounds = app.add_subcommand("bounds", "Cycle-count bounds and their tightness");
  add_graph_source(bounds);
  bounds->add_option("--kmax", bounds_kmax, "Largest cycle length")->check(CLI::Range(3U, 64U))->capture_default_str();
  bounds->add_option("--edges", bounds_edges, "Evaluate bounds at this edge count (no graph)");
  bounds->add_option("--vertices", bounds_vertices, "Vertex count for --edges mode");
  bounds->callback([&] {
    doc.params["kmax"] = bounds_kmax;
    doc.tabular = true;
    doc.csv_header = {"k", "exact_count", "naive_bound", "prime_bound", "sharp_bound", "tightness_ratio",
                      "ratio_basis"};
    if (bounds_edges) {
      if (!bounds_vertices) throw invalid_input("--edges needs --vertices");
      if (!graph_path.empty() || complete_n) throw invalid_input("--edges cannot be combined with a graph");
      const double E = *bounds_edges;
      const long long V = *bounds_vertices;
      doc.params["edges"] = E;
      doc.params["vertices"] = V;
      json rows = json::array();
      for (unsigned k = 3; k <= bounds_kmax; ++k) {
        std::optional<double> prime, sharp;
        if (is_prime(k)) {
          prime = cycle_bound_naive(E, k, true);
          sharp = k == 3 ? triangle_bound_sharp(E, V) : cycle_bound_sharp(E, V, k);
        }
        rows.push_back({{"k", k},
                        {"exact_count", nullptr},
                        {"naive_bound", cycle_bound_naive(E, k, false)},
                        {"prime_bound", to_json(prime)},
                        {"sharp_bound", to_json(sharp)},
                        {"tightness_ratio", nullptr},
                        {"ratio_basis", nullptr}});
      }
      doc.results = {{"vertex_count", V}, {"edge_count", E}, {"rows", rows}};
    } else {
      const Graph& g = load_graph();
      doc.results = to_json(bound_report(g, bounds_kmax, cfg.budget));
    }
    for (const auto& row : doc.results["rows"]) {
      std::vector<json> cells;
      for (const auto& h : doc.csv_header) cells.push_back(row[h]);
      doc.csv_rows.push_back(std::move(cells));
    }
  });

  // spectrum ---------------------------------------------------------------
  double spec_tol = default_spectrum_tol;
  unsigned spec_kmax = 3;
  auto* spectrum = app.add_subcommand("spectrum", "Adjacency spectrum and trace identities");
  add_graph_source(spectrum);
  spectrum->add_option("--tol", spec_tol, "Relative eigenvalue tolerance")->capture_default_str();
  spectrum->add_option("--kmax", spec_kmax, "Compare spectral and exact traces up to this power")
      ->check(CLI::Range(1U, 64U))
      ->capture_default_str();
  spectrum->callback([&] {
    const Graph& g = load_graph();
    doc.params["tol"] = spec_tol;
    doc.params["kmax"] = spec_kmax;
    const auto s = adjacency_spectrum(g, spec_tol);
    json traces = json::array();
    for (unsigned k = 1; k <= spec_kmax; ++k)
      traces.push_back({{"k", k}, {"exact", to_json(trace_power(g, k))}, {"spectral", spectral_trace(s, k)}});
    doc.results = {{"eigenvalues", s.eigenvalues},
                   {"tolerance", s.tolerance},
                   {"spectral_radius", s.spectral_radius()},
                   {"traces", traces}};
  });

  // extremal ---------------------------------------------------------------
  long long ext_n = 3;
  double ext_p = 3;
  std::string ext_mode = "signed";
  bool ext_numeric = false;
  AscentOptions ascent;
  auto* extremal = app.add_subcommand("extremal", "Maximizers of sum x^p on {sum x = 0, sum x^2 = 1}");
  extremal->add_option("--n", ext_n, "Dimension")->required()->check(CLI::Range(2LL, 4096LL));
  extremal->add_option("--p", ext_p, "Exponent")->required();
  extremal->add_option("--mode", ext_mode, "signed: sum x^p; absolute: sum |x|^p")
      ->check(CLI::IsMember({"signed", "absolute"}))
      ->capture_default_str();
  extremal->add_flag("--numeric", ext_numeric, "Also run the multistart projected-gradient optimizer");
  extremal->add_option("--seed", ascent.seed, "Optimizer seed")->capture_default_str();
  extremal->add_option("--iterations", ascent.iterations, "Iterations per restart")->capture_default_str();
  extremal->add_option("--tol", ascent.tol, "Projected-gradient residual tolerance")->capture_default_str();
  extremal->add_option("--restarts", ascent.restarts, "Random restarts")->capture_default_str();
  extremal->callback([&] {
    PowerSumProblem problem{ext_n, ext_p, ext_mode == "signed" ? SumMode::signed_sum : SumMode::absolute};
    problem.validate();
    doc.params = {{"n", ext_n}, {"p", ext_p}, {"mode", ext_mode}, {"numeric", ext_numeric}};
    json res = json::object();
    if (problem.mode == SumMode::signed_sum) {
      const auto p = static_cast<unsigned>(problem.p);
      res["closed_form"] = to_json(extremal_point(problem.n, p));
      json splits = json::array();
      for (const auto& s : two_level_solutions(problem.n, p)) splits.push_back(to_json(s));
      res["two_level_solutions"] = splits;
      res["proof_route"] = to_string(proof_route(problem.n, p));
      if (p % 2 == 0 && problem.n >= 2) {
        const auto sep = separation_check(problem.n, p);
        res["separation"] = {{"m_value", sep.m_value},
                             {"n_value", sep.n_value},
                             {"z_lower", sep.z_lower},
                             {"second_sq_upper", sep.second_sq_upper},
                             {"separated", sep.separated},
                             {"threshold_holds", sep.threshold_holds}};
      }
      if (p == 4 && problem.n >= 3) {
        const auto tv = p4_three_value_check(problem.n);
        res["three_value"] = {{"alpha_sq_upper", tv.alpha_sq_upper},
                              {"alpha_sq_lower", tv.alpha_sq_lower},
                              {"excluded", tv.excluded},
                              {"alpha_sq_upper_corrected", tv.alpha_sq_upper_corrected},
                              {"excluded_corrected", tv.excluded_corrected}};
      }
    } else {
      json splits = json::array();
      for (long long n1 = 1; n1 < problem.n; ++n1)
        splits.push_back(to_json(two_level_point(problem.n, n1, problem.p, SumMode::absolute)));
      res["two_level_candidates"] = splits;
    }
    if (ext_numeric || problem.mode == SumMode::absolute) {
      ascent.jobs = cfg.jobs;
      doc.params["seed"] = ascent.seed;
      doc.params["iterations"] = ascent.iterations;
      doc.params["tol"] = ascent.tol;
      doc.params["restarts"] = ascent.restarts;
      const auto num = numeric_maximize(problem, ascent);
      res["numeric"] = {{"solution", to_json(num.solution)},
                        {"residual", num.residual},
                        {"restarts", num.restarts},
                        {"converged_restarts", num.converged_restarts},
                        {"best_restart", num.best_restart}};
    }
    doc.results = res;
  });

  // newton -----------------------------------------------------------------
  unsigned newton_n = 3;
  unsigned newton_kmax = 12;
  auto* newton = app.add_subcommand("newton", "Power sums as polynomials in e3 (and e4) under the constraints");
  newton->add_option("--n", newton_n, "Number of variables (3 or 4)")
      ->check(CLI::Range(3U, 4U))
      ->capture_default_str();
  newton->add_option("--kmax", newton_kmax, "Largest power-sum index")->check(CLI::Range(3U, 200U))->capture_default_str();
  newton->callback([&] {
    doc.params = {{"n", newton_n}, {"kmax", newton_kmax}};
    json polys = json::array();
    if (newton_n == 3) {
      for (unsigned k = 1; k <= newton_kmax; ++k) polys.push_back(to_json(t_in_e3_n3(k)));
      doc.results = {{"power_sums", polys}, {"coefficients_nonnegative", coefficient_positivity_check(newton_kmax)}};
    } else {
      const std::vector<EPoly> es{EPoly(0), EPoly(Rational(-1, 2)), EPoly::e3(), EPoly::e4()};
      const auto t = power_sums_from_elementary(es, newton_kmax);
      for (unsigned k = 1; k <= newton_kmax; ++k) polys.push_back(to_json(SymPolyInE{4, k, t[k - 1]}));
      json identities = json::object();
      try {
        const auto ids = n4_identities();
        identities = {{"t3", to_json(ids.t3)}, {"t4", to_json(ids.t4)}, {"t6", to_json(ids.t6)}, {"match", true}};
      } catch (const identity_mismatch& e) {
        identities = {{"match", false}, {"detail", e.what()}};
        doc.status = exit_code::violations;
      }
      const auto e4 = e4_minimizer_check();
      doc.results = {{"power_sums", polys},
                     {"identities", identities},
                     {"e4_minimizer", {{"max_e3", e4.max_e3},
                                       {"min_e4_two_level", e4.min_e4_two_level},
                                       {"min_e4_numeric", e4.min_e4_numeric},
                                       {"e3_argmax", e4.e3_argmax},
                                       {"e4_argmin", e4.e4_argmin},
                                       {"consistent", e4.consistent}}}};
    }
  });

  // exceptional ------------------------------------------------------------
  unsigned exc_pmax = 12;
  auto* exceptional = app.add_subcommand("exceptional", "Exceptional (n, p) pairs of the even-p threshold argument");
  exceptional->add_option("--pmax", exc_pmax, "Largest even exponent")->check(CLI::Range(4U, 10000U))->capture_default_str();
  exceptional->callback([&] {
    doc.params = {{"pmax", exc_pmax}};
    json pairs = json::array();
    for (const auto& e : exceptional_set(exc_pmax)) pairs.push_back({e.n, e.p});
    json thresholds = json::array();
    doc.tabular = true;
    doc.csv_header = {"p", "g_value", "h_value", "n_threshold", "exceptional_n"};
    for (unsigned p = 4; p <= exc_pmax; p += 2) {
      const auto t = g_threshold(p);
      thresholds.push_back(to_json(t));
      std::string ns;
      for (auto n : t.exceptional_n) ns += (ns.empty() ? "" : ";") + std::to_string(n);
      doc.csv_rows.push_back({t.p, t.g_value, t.h_value, t.n_threshold, ns});
    }
    doc.results = {{"pairs", pairs}, {"thresholds", thresholds}};
  });

  // probe ------------------------------------------------------------------
  auto* probe = app.add_subcommand("probe", "Compare a stated identity or bound with exact ground truth");
  probe->require_subcommand(1, 1);
  unsigned probe_p = 5;
  auto* eq4 = probe->add_subcommand("eq4", "tr(A^p) against 2p times the simple p-cycle count");
  add_graph_source(eq4);
  eq4->add_option("--p", probe_p, "Cycle length")->required()->check(CLI::Range(3U, 64U));
  eq4->add_flag("--strict", cfg.strict, "Exit 1 when a discrepancy is found");
  eq4->callback([&] {
    const Graph& g = load_graph();
    doc.command = "probe eq4";
    doc.params["p"] = probe_p;
    const auto d = probe_eq4(g, probe_p, cfg.budget);
    doc.results = to_json(d);
    if (cfg.strict && d.discrepancy) doc.status = exit_code::violations;
  });
  long long thm4_n = 4;
  unsigned thm4_p = 3;
  auto* thm4 = probe->add_subcommand("thm4", "Printed and canonical p-cycle bounds at K_n against its exact count");
  thm4->add_option("--n", thm4_n, "Vertices of K_n")->required()->check(CLI::Range(3LL, 12LL));
  thm4->add_option("--p", thm4_p, "Odd prime cycle length")->required();
  thm4->add_flag("--strict", cfg.strict, "Exit 1 when a discrepancy is found");
  thm4->callback([&] {
    doc.command = "probe thm4";
    doc.params = {{"n", thm4_n}, {"p", thm4_p}};
    const auto d = probe_thm4(thm4_n, thm4_p, cfg.budget);
    doc.results = to_json(d);
    if (cfg.strict && d.discrepancy) doc.status = exit_code::violations;
  });

  // verify -----------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "Exhaustive sweeps over small labeled graphs");
  verify->require_subcommand(1, 1);
  long long thm2_n = 4;
  std::size_t thm2_vmax = 6;
  bool allow_large = false;
  auto* thm2 = verify->add_subcommand("thm2", "Average triangles per edge is at most n-2, equality only at K_n");
  thm2->add_option("--n", thm2_n, "Complete-graph order")->required()->check(CLI::Range(3LL, 8LL));
  thm2->add_option("--vmax", thm2_vmax, "Vertices of the sweep")->required()->check(CLI::Range(1, 8));
  thm2->add_flag("--allow-large", allow_large, "Permit --vmax 8");
  thm2->callback([&] {
    doc.command = "verify thm2";
    doc.params = {{"n", thm2_n}, {"vmax", thm2_vmax}};
    const auto r = verify_theorem2(thm2_n, thm2_vmax, {cfg.jobs, allow_large});
    doc.results = to_json(r);
    if (!r.verified()) doc.status = exit_code::violations;
  });
  std::size_t eq5_vmax = 5;
  unsigned eq5_kmax = 6;
  auto* eq5 = verify->add_subcommand("eq5", "tr(A^k)/2k <= closed-walk classes <= tr(A^k)/2");
  eq5->add_option("--vmax", eq5_vmax, "Vertices of the sweep")->required()->check(CLI::Range(1, 6));
  eq5->add_option("--kmax", eq5_kmax, "Largest walk length")->required()->check(CLI::Range(1U, 6U));
  eq5->callback([&] {
    doc.command = "verify eq5";
    doc.params = {{"vmax", eq5_vmax}, {"kmax", eq5_kmax}};
    const auto r = verify_eq5(eq5_vmax, eq5_kmax, {cfg.jobs, false});
    doc.results = to_json(r);
    if (!r.verified()) doc.status = exit_code::violations;
  });

  const auto t0 = std::chrono::steady_clock::now();
  std::vector<const char*> argv{"cyclebound"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::ok;
  } catch (const CLI::CallForVersion&) {
    out << version << '\n';
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "cyclebound: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const std::exception& e) {
    err << "cyclebound: " << e.what() << '\n';
    return exit_code::usage;
  }

  if (doc.command.empty())
    for (const auto* sub : app.get_subcommands()) doc.command = sub->get_name();

  if (cfg.format == "csv") {
    if (!doc.tabular) {
      err << "cyclebound: --format csv is only available for 'bounds' and 'exceptional'\n";
      return exit_code::usage;
    }
    for (std::size_t i = 0; i < doc.csv_header.size(); ++i) out << (i ? "," : "") << doc.csv_header[i];
    out << "\r\n";
    for (const auto& row : doc.csv_rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_value(row[i]);
      out << "\r\n";
    }
    return doc.status;
  }

  json document = {{"command", doc.command}, {"params", doc.params}, {"results", doc.results}};
  if (!cfg.no_meta)
    document["meta"] = {{"version", version},
                        {"timestamp", utc_timestamp()},
                        {"wall_time_s", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
  if (cfg.format == "text")
    write_text(out, document);
  else
    out << document.dump(2) << '\n';
  return doc.status;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

}  // namespace cyclebound::cli
