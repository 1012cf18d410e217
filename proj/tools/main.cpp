// SPDX-License-Identifier: Apache-2.0
//
// Command line front end. Everything solver-related goes through the C API in
// cranopt.h; this file only handles flags, files, and report formatting.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cranopt.h"

using nlohmann::json;

namespace {

int exit_code_of(cranopt_status st) {
  switch (st) {
    case CRANOPT_OK:
      return 0;
    case CRANOPT_ERR_INFEASIBLE:
      return 3;
    case CRANOPT_ERR_NO_CONVERGENCE:
      return 4;
    default:
      return 2;
  }
}

void check(cranopt_status st) {
  if (st == CRANOPT_OK) return;
  std::cerr << "error: " << cranopt_last_error() << "\n";
  std::exit(exit_code_of(st));
}

template <typename T, void (*Free)(T*)>
class Handle {
 public:
  Handle() = default;
  ~Handle() { Free(ptr_); }
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  T** out() { return &ptr_; }
  operator T*() const { return ptr_; }

 private:
  T* ptr_ = nullptr;
};

using ScenarioHandle = Handle<cranopt_scenario, cranopt_scenario_free>;
using AssociationHandle = Handle<cranopt_association, cranopt_association_free>;
using SolutionHandle = Handle<cranopt_solution, cranopt_solution_free>;

class OwnedString {
 public:
  OwnedString() = default;
  ~OwnedString() { cranopt_string_free(ptr_); }
  OwnedString(const OwnedString&) = delete;
  OwnedString& operator=(const OwnedString&) = delete;
  char** out() { return &ptr_; }
  const char* get() const { return ptr_ ? ptr_ : ""; }

 private:
  char* ptr_ = nullptr;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    std::exit(2);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    std::exit(2);
  }
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty())
    std::cout << content;
  else
    write_file(out_path, content);
}

void load_scenario(const std::string& path, ScenarioHandle& scn) {
  std::string text = read_file(path);
  check(cranopt_scenario_from_json(text.c_str(), scn.out()));
  OwnedString report;
  check(cranopt_scenario_validate(scn, report.out()));
  json violations = json::parse(report.get());
  if (!violations.empty()) {
    std::cerr << "error: scenario " << path << " is not well formed:\n";
    for (const json& v : violations)
      std::cerr << "  [" << v.at("code").get<std::string>() << "] "
                << v.at("message").get<std::string>() << "\n";
    std::exit(2);
  }
}

// --assoc accepts the two built-in policies or a JSON file path.
void make_association(const ScenarioHandle& scn, const std::string& spec,
                      AssociationHandle& assoc) {
  if (spec == "best-single") {
    check(cranopt_association_best_single(scn, assoc.out()));
  } else if (spec == "full") {
    check(cranopt_association_full(scn, assoc.out()));
  } else {
    std::string text = read_file(spec);
    check(cranopt_association_from_json(scn, text.c_str(), assoc.out()));
  }
}

uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

struct GeneratorFlags {
  int clusters = 3;
  double radius = 500.0;
  int bs_per_cluster = 4;
  int ues_per_cluster = 20;
  double carrier_ghz = 2.0;
  double ru_bandwidth_hz = 180e3;
  int rus_per_bs = 100;
  double noise_dbm_per_hz = -174.0;
  double tx_power_mw = 200.0;
  double fronthaul_gbps = 2.5;
  double shadowing_sigma_db = 3.0;
  double max_load = 1.0;
  double demand_bits = 1e6;
  double period_s = 0.5;
  uint64_t seed = 1;

  void add_options(CLI::App* cmd, bool with_seed) {
    cmd->add_option("--clusters", clusters, "number of hexagonal clusters");
    cmd->add_option("--radius", radius, "cluster circumradius in meters");
    cmd->add_option("--bs-per-cluster", bs_per_cluster, "BSs per cluster");
    cmd->add_option("--ues-per-cluster", ues_per_cluster, "UEs per cluster");
    cmd->add_option("--carrier-ghz", carrier_ghz, "carrier frequency in GHz");
    cmd->add_option("--ru-bandwidth-hz", ru_bandwidth_hz, "bandwidth per RU in Hz");
    cmd->add_option("--rus-per-bs", rus_per_bs, "RUs per BS");
    cmd->add_option("--noise-dbm-per-hz", noise_dbm_per_hz, "noise density in dBm/Hz");
    cmd->add_option("--tx-power-mw", tx_power_mw, "per-RU transmit power in mW");
    cmd->add_option("--fronthaul-gbps", fronthaul_gbps, "fronthaul capacity in Gbit/s");
    cmd->add_option("--shadowing-sigma-db", shadowing_sigma_db,
                    "lognormal shadowing sigma in dB");
    cmd->add_option("--max-load", max_load, "per-BS load limit");
    cmd->add_option("--demand-bits", demand_bits, "demand volume per UE in bits");
    cmd->add_option("--period", period_s, "scheduling period in seconds");
    if (with_seed)
      cmd->add_option("--seed", seed, "RNG seed")->required();
  }

  json to_json() const {
    json j;
    j["clusters"] = clusters;
    j["cluster_radius_m"] = radius;
    j["bs_per_cluster"] = bs_per_cluster;
    j["ues_per_cluster"] = ues_per_cluster;
    j["carrier_ghz"] = carrier_ghz;
    j["ru_bandwidth_hz"] = ru_bandwidth_hz;
    j["rus_per_bs"] = rus_per_bs;
    j["noise_dbm_per_hz"] = noise_dbm_per_hz;
    j["tx_power_mw_per_ru"] = tx_power_mw;
    j["fronthaul_gbps"] = fronthaul_gbps;
    j["shadowing_sigma_db"] = shadowing_sigma_db;
    j["max_load"] = max_load;
    j["demand_bits"] = demand_bits;
    j["period_s"] = period_s;
    j["seed"] = seed;
    return j;
  }
};

struct SolverFlags {
  double tolerance = 1e-10;
  int max_iterations = 10000;
  double initial_alpha = 1e-3;

  void add_options(CLI::App* cmd) {
    cmd->add_option("--tolerance", tolerance, "fixed point stopping tolerance");
    cmd->add_option("--max-iterations", max_iterations, "fixed point iteration cap");
    cmd->add_option("--initial-alpha", initial_alpha, "fixed point starting value");
  }

  json to_json() const {
    json j;
    j["tolerance"] = tolerance;
    j["max_iterations"] = max_iterations;
    j["initial_alpha"] = initial_alpha;
    return j;
  }
};

int run_generate(const GeneratorFlags& flags, const std::string& out_path) {
  ScenarioHandle scn;
  check(cranopt_scenario_generate(flags.to_json().dump().c_str(), scn.out()));
  OwnedString text;
  check(cranopt_scenario_to_json(scn, text.out()));
  write_file(out_path, text.get());
  json j = json::parse(text.get());
  std::cout << "scenario: " << j.at("clusters").size() << " clusters, "
            << j.at("bs").size() << " BSs, " << j.at("ues").size() << " UEs -> "
            << out_path << "\n";
  return 0;
}

int run_solve(const std::string& scenario_path, const std::string& assoc_spec,
              const SolverFlags& solver, const std::string& out_path) {
  ScenarioHandle scn;
  load_scenario(scenario_path, scn);
  AssociationHandle assoc;
  make_association(scn, assoc_spec, assoc);
  SolutionHandle sol;
  check(cranopt_solve(scn, assoc, solver.to_json().dump().c_str(), sol.out()));
  OwnedString text;
  check(cranopt_solution_to_json(scn, sol, text.out()));
  emit(text.get(), out_path);
  if (!out_path.empty()) {
    json j = json::parse(text.get());
    std::cout << "sum_eta " << fmt(j.at("sum_eta").get<double>()) << " -> "
              << out_path << "\n";
  }
  return 0;
}

int run_select(const std::string& scenario_path, const std::string& assoc_spec,
               const SolverFlags& solver, bool no_resolve_each,
               const std::string& trace_path, const std::string& out_path) {
  ScenarioHandle scn;
  load_scenario(scenario_path, scn);
  AssociationHandle initial;
  make_association(scn, assoc_spec, initial);

  SolutionHandle before;
  check(cranopt_solve(scn, initial, solver.to_json().dump().c_str(), before.out()));
  OwnedString before_text;
  check(cranopt_solution_to_json(scn, before, before_text.out()));

  json config = solver.to_json();
  config["resolve_each"] = !no_resolve_each;
  AssociationHandle final_assoc;
  SolutionHandle final_sol;
  OwnedString trace;
  check(cranopt_select(scn, initial, config.dump().c_str(), final_assoc.out(),
                       final_sol.out(), trace_path.empty() ? nullptr : trace.out()));
  if (!trace_path.empty()) write_file(trace_path, trace.get());

  OwnedString after_text;
  check(cranopt_solution_to_json(scn, final_sol, after_text.out()));
  OwnedString assoc_text;
  check(cranopt_association_to_json(final_assoc, assoc_text.out()));

  json report;
  report["sum_eta_before"] = json::parse(before_text.get()).at("sum_eta");
  report["sum_eta_after"] = json::parse(after_text.get()).at("sum_eta");
  report["association"] = json::parse(assoc_text.get());
  report["solution"] = json::parse(after_text.get());
  emit(report.dump(2) + "\n", out_path);
  if (!out_path.empty())
    std::cout << "sum_eta " << fmt(report.at("sum_eta_before").get<double>())
              << " -> " << fmt(report.at("sum_eta_after").get<double>()) << " ("
              << out_path << ")\n";
  return 0;
}

struct SweepCell {
  double value = 0.0;
  std::vector<double> comp, noncomp;
};

int run_sweep(const std::string& axis, const std::vector<double>& values, int reps,
              uint64_t seed, GeneratorFlags flags, const SolverFlags& solver,
              const std::string& out_path) {
  std::ostringstream csv;
  csv << "axis,value,rep,seed,sum_eta_comp,sum_eta_noncomp,improvement_pct,"
         "mean_load,mean_fronthaul_util\n";
  std::vector<SweepCell> cells;

  for (size_t vi = 0; vi < values.size(); ++vi) {
    SweepCell cell;
    cell.value = values[vi];
    for (int rep = 0; rep < reps; ++rep) {
      // Same seed for every axis value: reps are paired across values, so a
      // trend along the axis is not washed out by fresh channel draws.
      uint64_t rep_seed = splitmix64(splitmix64(seed) ^ static_cast<uint64_t>(rep));
      flags.seed = rep_seed;
      if (axis == "bs")
        flags.bs_per_cluster = static_cast<int>(values[vi]);
      else if (axis == "ues")
        flags.ues_per_cluster = static_cast<int>(values[vi]);
      else
        flags.max_load = values[vi];

      ScenarioHandle scn;
      check(cranopt_scenario_generate(flags.to_json().dump().c_str(), scn.out()));
      OwnedString scn_text;
      check(cranopt_scenario_to_json(scn, scn_text.out()));
      json scn_json = json::parse(scn_text.get());

      AssociationHandle baseline;
      check(cranopt_association_best_single(scn, baseline.out()));
      SolutionHandle base_sol;
      check(cranopt_solve(scn, baseline, solver.to_json().dump().c_str(), base_sol.out()));
      OwnedString base_text;
      check(cranopt_solution_to_json(scn, base_sol, base_text.out()));
      double noncomp = json::parse(base_text.get()).at("sum_eta").get<double>();

      AssociationHandle comp_assoc;
      SolutionHandle comp_sol;
      check(cranopt_select(scn, baseline, solver.to_json().dump().c_str(),
                           comp_assoc.out(), comp_sol.out(), nullptr));
      OwnedString comp_text;
      check(cranopt_solution_to_json(scn, comp_sol, comp_text.out()));
      json comp_json = json::parse(comp_text.get());
      double comp = comp_json.at("sum_eta").get<double>();

      double mean_load = 0.0;
      for (const json& r : comp_json.at("loads")) mean_load += r.get<double>();
      size_t num_bs = comp_json.at("loads").size();
      if (num_bs > 0) mean_load /= static_cast<double>(num_bs);
      double mean_util = 0.0;
      for (size_t i = 0; i < num_bs; ++i) {
        double used = comp_json.at("fronthaul_usage").at(i).get<double>();
        double cap = scn_json.at("bs").at(i).at("fronthaul_bits").get<double>();
        mean_util += used / cap;
      }
      if (num_bs > 0) mean_util /= static_cast<double>(num_bs);

      double improvement = noncomp > 0.0 ? 100.0 * (comp - noncomp) / noncomp : 0.0;
      char value_buf[32];
      std::snprintf(value_buf, sizeof(value_buf), "%g", values[vi]);
      csv << axis << "," << value_buf << "," << rep << "," << rep_seed << ","
          << fmt(comp) << "," << fmt(noncomp) << "," << fmt(improvement) << ","
          << fmt(mean_load) << "," << fmt(mean_util) << "\n";
      cell.comp.push_back(comp);
      cell.noncomp.push_back(noncomp);
    }
    cells.push_back(std::move(cell));
  }

  write_file(out_path, csv.str());

  for (const SweepCell& cell : cells) {
    double mc = 0.0, mn = 0.0;
    for (double x : cell.comp) mc += x;
    for (double x : cell.noncomp) mn += x;
    mc /= cell.comp.size();
    mn /= cell.noncomp.size();
    double imp = mn > 0.0 ? 100.0 * (mc - mn) / mn : 0.0;
    std::printf("%s=%g: comp %.6g, noncomp %.6g, improvement %.3f%% (n=%zu)\n",
                axis.c_str(), cell.value, mc, mn, imp, cell.comp.size());
  }
  std::cout << "rows -> " << out_path << "\n";
  return 0;
}

int run_reduce(const std::string& cnf_path, const std::string& out_path,
               std::string meta_path) {
  std::string dimacs = read_file(cnf_path);
  ScenarioHandle scn;
  OwnedString meta;
  check(cranopt_reduce_dimacs(dimacs.c_str(), scn.out(), meta.out()));
  OwnedString text;
  check(cranopt_scenario_to_json(scn, text.out()));
  write_file(out_path, text.get());
  if (meta_path.empty()) meta_path = out_path + ".meta.json";
  write_file(meta_path, meta.get());
  json j = json::parse(text.get());
  std::cout << "embedded formula: " << j.at("bs").size() << " BSs, "
            << j.at("ues").size() << " UEs -> " << out_path << " (metadata "
            << meta_path << ")\n";
  return 0;
}

int run_certify(const std::string& cnf_path, const std::string& out_path) {
  std::string dimacs = read_file(cnf_path);
  OwnedString verdict;
  check(cranopt_certify_dimacs(dimacs.c_str(), verdict.out()));
  emit(verdict.get(), out_path);
  json j = json::parse(verdict.get());
  std::cerr << (j.at("satisfiable").get<bool>() ? "SAT" : "UNSAT") << " / "
            << (j.at("feasible").get<bool>() ? "feasible" : "infeasible")
            << (j.at("agree").get<bool>() ? " (agree)" : " (DISAGREE)") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CoMP cell selection and fronthaul-aware resource allocation toolkit"};
  app.require_subcommand(1);

  GeneratorFlags gen_flags;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("generate", "write a random scenario to a JSON file");
  gen_flags.add_options(gen, true);
  gen->add_option("--out", gen_out, "output scenario path")->required();

  std::string solve_scn, solve_assoc = "best-single", solve_out;
  SolverFlags solve_solver;
  CLI::App* solve = app.add_subcommand("solve", "optimal allocation for a fixed association");
  solve->add_option("scenario", solve_scn, "scenario JSON path")->required();
  solve->add_option("--assoc", solve_assoc, "best-single, full, or an association JSON path");
  solve_solver.add_options(solve);
  solve->add_option("--out", solve_out, "results path (stdout when omitted)");

  std::string sel_scn, sel_assoc = "best-single", sel_out, sel_trace;
  SolverFlags sel_solver;
  bool sel_no_resolve = false;
  CLI::App* sel = app.add_subcommand("select", "greedy CoMP cell selection plus allocation");
  sel->add_option("scenario", sel_scn, "scenario JSON path")->required();
  sel->add_option("--assoc", sel_assoc, "initial association (best-single, full, or path)");
  sel_solver.add_options(sel);
  sel->add_flag("--no-resolve-each", sel_no_resolve,
                "score candidates against the initial optimum only");
  sel->add_option("--trace", sel_trace, "write per-decision JSON lines here");
  sel->add_option("--out", sel_out, "results path (stdout when omitted)");

  std::string sweep_axis = "bs", sweep_out;
  std::vector<double> sweep_values;
  int sweep_reps = 1;
  uint64_t sweep_seed = 1;
  GeneratorFlags sweep_flags;
  SolverFlags sweep_solver;
  CLI::App* sweep = app.add_subcommand("sweep", "CoMP vs non-CoMP comparison over an axis");
  sweep->add_option("--axis", sweep_axis, "bs, ues, or max_load")
      ->check(CLI::IsMember({"bs", "ues", "max_load"}));
  sweep->add_option("--values", sweep_values, "axis values")
      ->required()
      ->delimiter(',');
  sweep->add_option("--reps", sweep_reps, "replications per value")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--seed", sweep_seed, "base RNG seed")->required();
  sweep_flags.add_options(sweep, false);
  sweep_solver.add_options(sweep);
  sweep->add_option("--out", sweep_out, "CSV output path")->required();

  std::string reduce_cnf, reduce_out, reduce_meta;
  CLI::App* reduce = app.add_subcommand("reduce", "embed a DIMACS 3-CNF formula as a network");
  reduce->add_option("cnf", reduce_cnf, "DIMACS CNF path")->required();
  reduce->add_option("--out", reduce_out, "output scenario path")->required();
  reduce->add_option("--meta", reduce_meta, "metadata path (default: <out>.meta.json)");

  std::string certify_cnf, certify_out;
  CLI::App* certify = app.add_subcommand(
      "certify", "exhaustively compare satisfiability with network feasibility");
  certify->add_option("cnf", certify_cnf, "DIMACS CNF path")->required();
  certify->add_option("--out", certify_out, "verdict path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*gen) return run_generate(gen_flags, gen_out);
  if (*solve) return run_solve(solve_scn, solve_assoc, solve_solver, solve_out);
  if (*sel)
    return run_select(sel_scn, sel_assoc, sel_solver, sel_no_resolve, sel_trace, sel_out);
  if (*sweep)
    return run_sweep(sweep_axis, sweep_values, sweep_reps, sweep_seed, sweep_flags,
                     sweep_solver, sweep_out);
  if (*reduce) return run_reduce(reduce_cnf, reduce_out, reduce_meta);
  if (*certify) return run_certify(certify_cnf, certify_out);
  return 2;
}
