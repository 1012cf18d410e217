// SPDX-License-Identifier: Apache-2.0

#include "selection.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "channel.hpp"

namespace cranopt {

Association extend(const NetworkScenario& scn, const Association& assoc, int ue,
                   const std::vector<int>& bs_set) {
  if (ue < 0 || ue >= scn.num_ues())
    throw Error(ErrorCode::invalid_argument, "ue index out of range");
  for (int b : bs_set) {
    if (b < 0 || b >= scn.num_bs())
      throw Error(ErrorCode::invalid_argument, "bs index out of range");
    if (scn.bs[b].cluster != scn.ues[ue].cluster)
      throw Error(ErrorCode::cluster_violation,
                  "bs " + std::to_string(b) + " is outside the cluster of ue " +
                      std::to_string(ue));
  }
  std::vector<std::vector<int>> sets = assoc.serving_sets();
  sets[ue].insert(sets[ue].end(), bs_set.begin(), bs_set.end());
  return Association::make(scn, sets);
}

namespace {

double load_at(const NetworkScenario& scn, const Association& assoc,
               const std::vector<double>& alpha, int bs) {
  double rho = 0.0;
  for (int j : assoc.served_users(bs)) rho += alpha[j];
  (void)scn;
  return rho;
}

}  // namespace

FilterDecision filter(const NetworkScenario& scn, const Association& assoc,
                      const AllocationSolution& current, int ue, int bs,
                      const FixedPointConfig& cfg) {
  if (ue < 0 || ue >= scn.num_ues())
    throw Error(ErrorCode::invalid_argument, "ue index out of range");
  if (bs < 0 || bs >= scn.num_bs())
    throw Error(ErrorCode::invalid_argument, "bs index out of range");

  FilterDecision d;
  d.eta_before = current.sum_eta();

  if (assoc.serves(bs, ue)) {
    // Already serving: the extension is the identity, keep everything as is.
    d.accepted = true;
    d.kappa_out = assoc;
    d.solution = current;
    d.eta_after = d.eta_before;
    d.lhs_load = load_at(scn, assoc, current.alpha_star, bs);
    d.rhs_load = d.lhs_load;
    d.mu = 1.0;
    return d;
  }

  Association kappa2 = extend(scn, assoc, ue, {bs});
  AllocationSolution candidate = solve_optimal(scn, kappa2, cfg);
  double after = candidate.sum_eta();

  double eta_common = current.qos.eta[ue];
  std::vector<double> one_step = demand_map_H(scn, kappa2, current.alpha_star, eta_common);
  d.lhs_load = load_at(scn, kappa2, one_step, bs);
  d.rhs_load = load_at(scn, kappa2, current.alpha_star, bs);
  d.mu = current.alpha_star[ue] > 0.0 ? one_step[ue] / current.alpha_star[ue] : kInf;

  d.accepted = after >= d.eta_before;
  if (d.accepted) {
    d.kappa_out = kappa2;
    d.solution = std::move(candidate);
    d.eta_after = after;
  } else {
    d.kappa_out = assoc;
    d.solution = current;
    d.eta_after = d.eta_before;
  }
  return d;
}

FilterDecision filter(const NetworkScenario& scn, const Association& assoc,
                      int ue, int bs, const FixedPointConfig& cfg) {
  AllocationSolution current = solve_optimal(scn, assoc, cfg);
  return filter(scn, assoc, current, ue, bs, cfg);
}

SelectionResult run_algorithm1(const NetworkScenario& scn, const Association& kappa_init,
                               const SelectionOptions& opts) {
  for (int j = 0; j < scn.num_ues(); ++j)
    if (kappa_init.serving_set(j).empty())
      throw Error(ErrorCode::infeasible,
                  "ue " + std::to_string(j) + " has no serving BS");

  SelectionResult res;
  res.kappa = kappa_init;
  AllocationSolution init = solve_optimal(scn, kappa_init, opts.fixed_point);
  AllocationSolution reference = init;

  for (int ue = 0; ue < scn.num_ues(); ++ue) {
    for (int bs : scn.cluster_bs(scn.ues[ue].cluster)) {
      ++res.evaluations;
      FilterDecision d = filter(scn, res.kappa, reference, ue, bs, opts.fixed_point);
      if (opts.record_trace)
        res.trace.push_back({ue, bs, d.lhs_load, d.rhs_load, d.accepted,
                             d.eta_before, d.eta_after});
      if (d.accepted) {
        res.kappa = d.kappa_out;
        if (opts.resolve_each) reference = std::move(d.solution);
      }
    }
  }

  if (opts.resolve_each)
    res.solution = std::move(reference);
  else
    res.solution = solve_optimal(scn, res.kappa, opts.fixed_point);
  return res;
}

Association default_initial_association(const NetworkScenario& scn) {
  std::vector<std::vector<int>> sets(scn.num_ues());
  for (int j = 0; j < scn.num_ues(); ++j) {
    const std::vector<int>& cands = scn.cluster_bs(scn.ues[j].cluster);
    if (cands.empty())
      throw Error(ErrorCode::infeasible,
                  "cluster of ue " + std::to_string(j) + " has no BS");
    int best = cands.front();
    double best_strength = -1.0;
    for (int i : cands) {
      double s = std::sqrt(scn.bs[i].power_per_ru_w) * scn.bs[i].gains[j].amplitude();
      if (s > best_strength) {
        best_strength = s;
        best = i;
      }
    }
    sets[j] = {best};
  }
  return Association::make(scn, sets);
}

}  // namespace cranopt
