// SPDX-License-Identifier: Apache-2.0

#include "cranopt.h"

#include <cstring>
#include <exception>
#include <new>
#include <sstream>
#include <string>

#include "generator.hpp"
#include "json_io.hpp"
#include "oracle.hpp"
#include "reduction.hpp"
#include "selection.hpp"

using namespace cranopt;
using nlohmann::json;

struct cranopt_scenario {
  NetworkScenario scn;
};
struct cranopt_association {
  Association assoc;
};
struct cranopt_solution {
  AllocationSolution sol;
};

namespace {

thread_local std::string g_last_error;

cranopt_status status_of(const Error& e) {
  switch (e.code()) {
    case ErrorCode::parse_error:
    case ErrorCode::invalid_formula:
      return CRANOPT_ERR_PARSE;
    case ErrorCode::infeasible:
    case ErrorCode::empty_serving_set:
      return CRANOPT_ERR_INFEASIBLE;
    case ErrorCode::no_convergence:
      return CRANOPT_ERR_NO_CONVERGENCE;
    case ErrorCode::too_large:
      return CRANOPT_ERR_TOO_LARGE;
    default:
      return CRANOPT_ERR_INVALID_ARGUMENT;
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs fn, routing any exception into the status/last-error contract.
template <typename Fn>
cranopt_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return CRANOPT_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return CRANOPT_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CRANOPT_ERR_INTERNAL;
  }
}

cranopt_status fail_null(const char* what) {
  g_last_error = std::string("null ") + what;
  return CRANOPT_ERR_INVALID_ARGUMENT;
}

FixedPointConfig solver_config(const char* config_json, bool* resolve_each = nullptr) {
  FixedPointConfig cfg;
  if (resolve_each) *resolve_each = true;
  if (config_json == nullptr || config_json[0] == '\0') return cfg;
  json j;
  try {
    j = json::parse(config_json);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("solver config: ") + e.what());
  }
  for (const auto& [key, value] : j.items()) {
    if (key == "tolerance")
      cfg.tolerance = value.get<double>();
    else if (key == "max_iterations")
      cfg.max_iterations = value.get<int>();
    else if (key == "initial_alpha")
      cfg.initial_alpha = value.get<double>();
    else if (key == "resolve_each" && resolve_each)
      *resolve_each = value.get<bool>();
    else
      throw Error(ErrorCode::invalid_argument, "unknown solver config key: " + key);
  }
  return cfg;
}

GeneratorConfig generator_config(const char* config_json) {
  GeneratorConfig cfg;
  if (config_json == nullptr || config_json[0] == '\0') return cfg;
  json j;
  try {
    j = json::parse(config_json);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("generator config: ") + e.what());
  }
  for (const auto& [key, value] : j.items()) {
    if (key == "clusters")
      cfg.n_clusters = value.get<int>();
    else if (key == "cluster_radius_m")
      cfg.cluster_radius_m = value.get<double>();
    else if (key == "bs_per_cluster")
      cfg.bs_per_cluster = value.get<int>();
    else if (key == "ues_per_cluster")
      cfg.ues_per_cluster = value.get<int>();
    else if (key == "carrier_ghz")
      cfg.carrier_ghz = value.get<double>();
    else if (key == "ru_bandwidth_hz")
      cfg.ru_bandwidth_hz = value.get<double>();
    else if (key == "rus_per_bs")
      cfg.rus_per_bs = value.get<int>();
    else if (key == "noise_dbm_per_hz")
      cfg.noise_dbm_per_hz = value.get<double>();
    else if (key == "tx_power_mw_per_ru")
      cfg.tx_power_mw_per_ru = value.get<double>();
    else if (key == "fronthaul_gbps")
      cfg.fronthaul_gbps = value.get<double>();
    else if (key == "shadowing_sigma_db")
      cfg.shadowing_sigma_db = value.get<double>();
    else if (key == "max_load")
      cfg.max_load = value.get<double>();
    else if (key == "demand_bits")
      cfg.demand_bits = value.get<double>();
    else if (key == "period_s")
      cfg.period_s = value.get<double>();
    else if (key == "seed")
      cfg.rng_seed = value.get<uint64_t>();
    else
      throw Error(ErrorCode::invalid_argument, "unknown generator config key: " + key);
  }
  return cfg;
}

}  // namespace

extern "C" {

const char* cranopt_last_error(void) { return g_last_error.c_str(); }

const char* cranopt_version(void) { return "1.0.0"; }

void cranopt_string_free(char* s) { delete[] s; }

cranopt_status cranopt_scenario_from_json(const char* json_text,
                                          cranopt_scenario** out) {
  if (!json_text) return fail_null("json text");
  if (!out) return fail_null("out pointer");
  return guarded([&] {
    json j;
    try {
      j = json::parse(json_text);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::parse_error, std::string("scenario json: ") + e.what());
    }
    *out = new cranopt_scenario{scenario_from_json(j)};
  });
}

cranopt_status cranopt_scenario_to_json(const cranopt_scenario* scn, char** out_json) {
  if (!scn) return fail_null("scenario");
  if (!out_json) return fail_null("out pointer");
  return guarded([&] { *out_json = copy_string(scenario_to_json(scn->scn).dump(2) + "\n"); });
}

cranopt_status cranopt_scenario_generate(const char* config_json,
                                         cranopt_scenario** out) {
  if (!out) return fail_null("out pointer");
  return guarded([&] { *out = new cranopt_scenario{generate(generator_config(config_json))}; });
}

cranopt_status cranopt_scenario_validate(const cranopt_scenario* scn, char** out_json) {
  if (!scn) return fail_null("scenario");
  if (!out_json) return fail_null("out pointer");
  return guarded([&] {
    json report = json::array();
    for (const Violation& v : validate(scn->scn))
      report.push_back({{"code", v.code}, {"message", v.message}});
    *out_json = copy_string(report.dump(2) + "\n");
  });
}

void cranopt_scenario_free(cranopt_scenario* scn) { delete scn; }

cranopt_status cranopt_association_from_json(const cranopt_scenario* scn,
                                             const char* json_text,
                                             cranopt_association** out) {
  if (!scn) return fail_null("scenario");
  if (!json_text) return fail_null("json text");
  if (!out) return fail_null("out pointer");
  return guarded([&] {
    json j;
    try {
      j = json::parse(json_text);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::parse_error, std::string("association json: ") + e.what());
    }
    *out = new cranopt_association{association_from_json(scn->scn, j)};
  });
}

cranopt_status cranopt_association_to_json(const cranopt_association* assoc,
                                           char** out_json) {
  if (!assoc) return fail_null("association");
  if (!out_json) return fail_null("out pointer");
  return guarded([&] { *out_json = copy_string(association_to_json(assoc->assoc).dump(2) + "\n"); });
}

cranopt_status cranopt_association_best_single(const cranopt_scenario* scn,
                                               cranopt_association** out) {
  if (!scn) return fail_null("scenario");
  if (!out) return fail_null("out pointer");
  return guarded([&] {
    *out = new cranopt_association{default_initial_association(scn->scn)};
  });
}

cranopt_status cranopt_association_full(const cranopt_scenario* scn,
                                        cranopt_association** out) {
  if (!scn) return fail_null("scenario");
  if (!out) return fail_null("out pointer");
  return guarded([&] {
    std::vector<std::vector<int>> sets(scn->scn.num_ues());
    for (int j = 0; j < scn->scn.num_ues(); ++j)
      sets[j] = scn->scn.cluster_bs(scn->scn.ues[j].cluster);
    *out = new cranopt_association{Association::make(scn->scn, sets)};
  });
}

void cranopt_association_free(cranopt_association* assoc) { delete assoc; }

cranopt_status cranopt_solve(const cranopt_scenario* scn,
                             const cranopt_association* assoc,
                             const char* config_json, cranopt_solution** out) {
  if (!scn) return fail_null("scenario");
  if (!assoc) return fail_null("association");
  if (!out) return fail_null("out pointer");
  return guarded([&] {
    FixedPointConfig cfg = solver_config(config_json);
    *out = new cranopt_solution{solve_optimal(scn->scn, assoc->assoc, cfg)};
  });
}

cranopt_status cranopt_select(const cranopt_scenario* scn,
                              const cranopt_association* initial,
                              const char* config_json,
                              cranopt_association** out_assoc,
                              cranopt_solution** out_solution,
                              char** out_trace_jsonl) {
  if (!scn) return fail_null("scenario");
  if (!out_assoc) return fail_null("out association pointer");
  if (!out_solution) return fail_null("out solution pointer");
  return guarded([&] {
    SelectionOptions opts;
    opts.fixed_point = solver_config(config_json, &opts.resolve_each);
    opts.record_trace = out_trace_jsonl != nullptr;
    Association start = initial ? initial->assoc
                                : default_initial_association(scn->scn);
    SelectionResult res = run_algorithm1(scn->scn, start, opts);
    if (out_trace_jsonl) {
      std::ostringstream lines;
      for (const TraceEntry& t : res.trace)
        lines << trace_entry_to_json(t).dump() << "\n";
      *out_trace_jsonl = copy_string(lines.str());
    }
    *out_assoc = new cranopt_association{std::move(res.kappa)};
    *out_solution = new cranopt_solution{std::move(res.solution)};
  });
}

cranopt_status cranopt_solution_to_json(const cranopt_scenario* scn,
                                        const cranopt_solution* sol,
                                        char** out_json) {
  if (!scn) return fail_null("scenario");
  if (!sol) return fail_null("solution");
  if (!out_json) return fail_null("out pointer");
  return guarded([&] {
    *out_json = copy_string(solution_to_json(scn->scn, sol->sol).dump(2) + "\n");
  });
}

void cranopt_solution_free(cranopt_solution* sol) { delete sol; }

cranopt_status cranopt_reduce_dimacs(const char* dimacs_text,
                                     cranopt_scenario** out_scenario,
                                     char** out_metadata_json) {
  if (!dimacs_text) return fail_null("dimacs text");
  if (!out_scenario) return fail_null("out scenario pointer");
  if (!out_metadata_json) return fail_null("out metadata pointer");
  return guarded([&] {
    SatInstance inst = build_sat_instance(parse_dimacs(dimacs_text));
    *out_metadata_json = copy_string(sat_metadata_to_json(inst).dump(2) + "\n");
    *out_scenario = new cranopt_scenario{std::move(inst.scenario)};
  });
}

cranopt_status cranopt_certify_dimacs(const char* dimacs_text, char** out_json) {
  if (!dimacs_text) return fail_null("dimacs text");
  if (!out_json) return fail_null("out pointer");
  return guarded([&] {
    SatInstance inst = build_sat_instance(parse_dimacs(dimacs_text));
    std::optional<std::vector<bool>> assignment =
        find_satisfying_assignment(inst.formula);

    bool feasible = false;
    json witness = nullptr;
    for_each_association(inst.scenario, [&](const Association& a) {
      if (feasible) return;
      if (feasibility_check(inst.scenario, a).feasible) {
        feasible = true;
        witness = association_to_json(a);
      }
    });

    json j;
    j["satisfiable"] = assignment.has_value();
    j["feasible"] = feasible;
    j["agree"] = assignment.has_value() == feasible;
    if (assignment.has_value()) {
      json bits = json::array();
      for (bool b : *assignment) bits.push_back(b);
      j["assignment"] = std::move(bits);
    } else {
      j["assignment"] = nullptr;
    }
    j["witness_association"] = std::move(witness);
    *out_json = copy_string(j.dump(2) + "\n");
  });
}

}  // extern "C"
