// SPDX-License-Identifier: Apache-2.0

#include "json_io.hpp"

#include <cmath>
#include <string>

#include "channel.hpp"

namespace cranopt {

using nlohmann::json;

namespace {

json finite_or_null(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

json vector_or_null(const std::vector<double>& v, bool present) {
  if (!present) return nullptr;
  return v;
}

}  // namespace

json scenario_to_json(const NetworkScenario& scn) {
  json j;
  j["clusters"] = scn.clusters;
  j["noise_w"] = scn.noise_w;
  j["M"] = scn.M;
  j["B_hz"] = scn.B_hz;
  j["max_load"] = scn.max_load;
  j["period_s"] = scn.period_s;
  j["bs"] = json::array();
  for (const BaseStation& b : scn.bs) {
    json jb;
    jb["cluster"] = b.cluster;
    jb["pos"] = {b.pos[0], b.pos[1]};
    jb["power_per_ru_w"] = b.power_per_ru_w;
    jb["fronthaul_bits"] = b.fronthaul_bits;
    json gains = json::array();
    for (const EffectiveGain& g : b.gains)
      gains.push_back({g.c.real(), g.c.imag()});
    jb["gains"] = std::move(gains);
    j["bs"].push_back(std::move(jb));
  }
  j["ues"] = json::array();
  for (const User& u : scn.ues) {
    json ju;
    ju["cluster"] = u.cluster;
    ju["pos"] = {u.pos[0], u.pos[1]};
    ju["demand_bits"] = u.traffic.volume_bits();
    j["ues"].push_back(std::move(ju));
  }
  return j;
}

NetworkScenario scenario_from_json(const json& j) {
  try {
    NetworkScenario scn;
    scn.clusters = j.at("clusters").get<std::vector<int>>();
    scn.noise_w = j.at("noise_w").get<double>();
    scn.M = j.at("M").get<int>();
    scn.B_hz = j.at("B_hz").get<double>();
    scn.max_load = j.at("max_load").get<double>();
    scn.period_s = j.at("period_s").get<double>();
    for (const json& jb : j.at("bs")) {
      BaseStation b;
      b.cluster = jb.at("cluster").get<int>();
      b.pos = {jb.at("pos").at(0).get<double>(), jb.at("pos").at(1).get<double>()};
      b.power_per_ru_w = jb.at("power_per_ru_w").get<double>();
      b.fronthaul_bits = jb.at("fronthaul_bits").get<double>();
      for (const json& jg : jb.at("gains"))
        b.gains.push_back(EffectiveGain::complex(
            {jg.at(0).get<double>(), jg.at(1).get<double>()}));
      scn.bs.push_back(std::move(b));
    }
    for (const json& ju : j.at("ues")) {
      User u;
      u.cluster = ju.at("cluster").get<int>();
      u.pos = {ju.at("pos").at(0).get<double>(), ju.at("pos").at(1).get<double>()};
      u.traffic = TrafficTrace::constant(ju.at("demand_bits").get<double>(), scn.period_s);
      scn.ues.push_back(std::move(u));
    }
    return scn;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("scenario json: ") + e.what());
  }
}

json association_to_json(const Association& assoc) {
  json j;
  j["serving_sets"] = assoc.serving_sets();
  return j;
}

Association association_from_json(const NetworkScenario& scn, const json& j) {
  std::vector<std::vector<int>> sets;
  try {
    sets = j.at("serving_sets").get<std::vector<std::vector<int>>>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("association json: ") + e.what());
  }
  return Association::make(scn, sets);
}

json solution_to_json(const NetworkScenario& scn, const AllocationSolution& sol) {
  json j;
  j["alpha_star"] = sol.alpha_star;
  j["alpha_load"] = sol.alpha_load;
  j["alpha_fronthaul"] = vector_or_null(sol.alpha_fh, !sol.alpha_fh.empty());
  j["eta"] = sol.qos.eta;
  j["lambda"] = finite_or_null(sol.qos.lambda);
  j["nu"] = finite_or_null(sol.qos.nu);
  j["loads"] = sol.qos.loads;
  j["fronthaul_usage"] = sol.qos.fronthaul_usage;
  json binding = json::array();
  for (Binding b : sol.binding)
    binding.push_back(b == Binding::load_limited ? "load_limited" : "fronthaul_limited");
  j["binding"] = std::move(binding);
  j["sum_eta"] = sol.sum_eta();
  double served_bits = 0.0;
  for (int ue = 0; ue < scn.num_ues(); ++ue)
    served_bits += sol.qos.eta[ue] * scn.demand_bits(ue);
  j["bit_rate_bps"] = served_bits / scn.period_s;
  j["report"] = {
      {"load_iterations", sol.report.load_iterations},
      {"load_residual", sol.report.load_residual},
      {"fronthaul_iterations", sol.report.fronthaul_iterations},
      {"fronthaul_residual", sol.report.fronthaul_residual},
      {"fronthaul_diverged", sol.report.fronthaul_diverged},
      {"fronthaul_unbounded", sol.report.fronthaul_unbounded},
  };
  return j;
}

json trace_entry_to_json(const TraceEntry& t) {
  json j;
  j["ue"] = t.ue;
  j["bs"] = t.bs;
  j["lhs"] = t.lhs;
  j["rhs"] = t.rhs;
  j["accepted"] = t.accepted;
  j["eta_before"] = t.eta_before;
  j["eta_after"] = t.eta_after;
  return j;
}

json sat_metadata_to_json(const SatInstance& inst) {
  json j;
  j["n_vars"] = inst.formula.n_vars;
  j["n_clauses"] = inst.formula.n_clauses();
  j["clauses"] = inst.formula.clauses;
  j["ue_anchor"] = inst.ue_anchor;
  j["ue_var"] = inst.ue_var;
  j["ue_clause"] = inst.ue_clause;
  j["bs_anchor"] = inst.bs_anchor;
  j["bs_pos"] = inst.bs_pos;
  j["bs_neg"] = inst.bs_neg;
  j["bs_clause"] = inst.bs_clause;
  return j;
}

}  // namespace cranopt
