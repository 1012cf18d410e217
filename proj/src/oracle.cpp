// SPDX-License-Identifier: Apache-2.0

#include "oracle.hpp"

#include <algorithm>
#include <cmath>

#include "channel.hpp"

namespace cranopt {

namespace {

constexpr int kMaxSweeps = 10000;
constexpr double kResidualTol = 1e-12;
constexpr uint64_t kEnumGuard = uint64_t{1} << 20;

// One monotone pass of the demand iteration at common level eta, computed
// through the plain per-UE rate formula.
std::vector<double> demand_sweep(const NetworkScenario& scn, const Association& assoc,
                                 const std::vector<double>& alpha, double eta) {
  std::vector<double> next(scn.num_ues());
  for (int j = 0; j < scn.num_ues(); ++j) {
    double demand = eta * scn.demand_bits(j);
    if (demand == 0.0) {
      next[j] = 0.0;
      continue;
    }
    double c = rate_bps(scn, assoc, alpha, j);
    next[j] = c > 0.0 ? demand / c : kInf;
  }
  return next;
}

// Runs the iteration from zero. Returns feasible when it settles within the
// load limit; iterates are nondecreasing, so once any of them breaches the
// limit the limit point breaches it too and the answer is already infeasible.
bool load_feasible(const NetworkScenario& scn, const Association& assoc, double eta) {
  const double bound = scn.max_load + 1e-9 * std::max(1.0, scn.max_load);
  std::vector<double> alpha(scn.num_ues(), 0.0);
  for (int it = 0; it < kMaxSweeps; ++it) {
    std::vector<double> next = demand_sweep(scn, assoc, alpha, eta);
    for (double rho : loads(scn, assoc, next))
      if (!(rho <= bound)) return false;
    double diff = 0.0, scale = 1e-300;
    for (int j = 0; j < scn.num_ues(); ++j) {
      diff = std::max(diff, std::abs(next[j] - alpha[j]));
      scale = std::max(scale, std::abs(alpha[j]));
    }
    alpha.swap(next);
    if (diff / scale < kResidualTol) return true;
  }
  // Neither settled nor breached within the sweep budget; treat as infeasible
  // rather than guessing about the limit point.
  return false;
}

bool fronthaul_ok(const NetworkScenario& scn, const Association& assoc, double eta,
                  int* which = nullptr) {
  for (int i = 0; i < scn.num_bs(); ++i) {
    double carried = 0.0;
    for (int j : assoc.served_users(i)) carried += eta * scn.demand_bits(j);
    double cap = scn.bs[i].fronthaul_bits;
    if (carried > cap + 1e-9 * std::max(1.0, cap)) {
      if (which) *which = i;
      return false;
    }
  }
  return true;
}

}  // namespace

FeasibilityResult feasibility_check(const NetworkScenario& scn, const Association& assoc,
                                    double eta_target) {
  for (int j = 0; j < scn.num_ues(); ++j) {
    if (eta_target * scn.demand_bits(j) == 0.0) continue;
    if (assoc.serving_set(j).empty()) return {false, FeasibilityResult::kUnservedUe};
    if (coherent_power(scn, assoc, j) <= 0.0)
      return {false, FeasibilityResult::kZeroRate};
  }
  if (!fronthaul_ok(scn, assoc, eta_target))
    return {false, FeasibilityResult::kFronthaulLimit};
  if (!load_feasible(scn, assoc, eta_target))
    return {false, FeasibilityResult::kLoadLimit};
  return {true, ""};
}

uint64_t count_associations(const NetworkScenario& scn) {
  const uint64_t cap = uint64_t{1} << 62;
  uint64_t total = 1;
  for (int j = 0; j < scn.num_ues(); ++j) {
    size_t n = scn.cluster_bs(scn.ues[j].cluster).size();
    uint64_t options = n >= 62 ? cap : (uint64_t{1} << n) - 1;
    if (options == 0) return 0;
    if (total > cap / options) return cap;
    total *= options;
  }
  return total;
}

void for_each_association(const NetworkScenario& scn,
                          const std::function<void(const Association&)>& visit) {
  if (count_associations(scn) > kEnumGuard)
    throw Error(ErrorCode::too_large, "association space exceeds 2^20");
  const int q = scn.num_ues();
  std::vector<std::vector<int>> cands(q);
  std::vector<uint32_t> mask(q, 1);
  for (int j = 0; j < q; ++j) {
    cands[j] = scn.cluster_bs(scn.ues[j].cluster);
    if (cands[j].empty()) return;  // no nonempty serving set possible
  }
  std::vector<std::vector<int>> sets(q);
  for (;;) {
    for (int j = 0; j < q; ++j) {
      sets[j].clear();
      for (size_t b = 0; b < cands[j].size(); ++b)
        if (mask[j] & (uint32_t{1} << b)) sets[j].push_back(cands[j][b]);
    }
    visit(Association::make(scn, sets));
    int j = 0;
    while (j < q) {
      ++mask[j];
      if (mask[j] < (uint32_t{1} << cands[j].size())) break;
      mask[j] = 1;
      ++j;
    }
    if (j == q) return;
  }
}

std::vector<Association> enumerate_associations(const NetworkScenario& scn) {
  std::vector<Association> all;
  for_each_association(scn, [&all](const Association& a) { all.push_back(a); });
  return all;
}

GlobalOptimum global_optimum(const NetworkScenario& scn, const FixedPointConfig& cfg) {
  GlobalOptimum best;
  bool found = false;
  double best_sum = -1.0;
  for_each_association(scn, [&](const Association& a) {
    AllocationSolution sol = solve_optimal(scn, a, cfg);
    double s = sol.sum_eta();
    if (!found || s > best_sum) {
      found = true;
      best_sum = s;
      best.assoc = a;
      best.solution = std::move(sol);
    }
  });
  if (!found)
    throw Error(ErrorCode::infeasible, "no cluster-respecting association exists");
  return best;
}

double allocation_cross_check(const NetworkScenario& scn, const Association& assoc,
                              const FixedPointConfig& cfg) {
  if (scn.num_ues() == 0) return 0.0;
  AllocationSolution sol = solve_optimal(scn, assoc, cfg);
  double solver_eta = sol.qos.eta.front();

  // Upper bound for the sweep: the fronthaul cap and, per UE, the level that
  // would fill the whole load budget at the interference-free rate.
  double hi = fronthaul_cap(scn, assoc);
  std::vector<double> zero(scn.num_ues(), 0.0);
  for (int j = 0; j < scn.num_ues(); ++j)
    hi = std::min(hi, scn.max_load * rate_bps(scn, assoc, zero, j) / scn.demand_bits(j));

  auto feasible = [&](double eta) {
    return fronthaul_ok(scn, assoc, eta) && load_feasible(scn, assoc, eta);
  };

  const int kGrid = 100000;
  double lo = 0.0;
  double first_bad = -1.0;
  for (int k = 1; k <= kGrid; ++k) {
    double eta = hi * k / kGrid;
    if (feasible(eta)) {
      lo = eta;
    } else {
      first_bad = eta;
      break;
    }
  }
  if (first_bad > 0.0) {
    double bad = first_bad;
    while ((bad - lo) > 1e-12 * std::max(lo, 1e-300)) {
      double mid = 0.5 * (lo + bad);
      if (feasible(mid))
        lo = mid;
      else
        bad = mid;
    }
  }
  return std::abs(solver_eta - lo) / std::max(lo, 1e-300);
}

std::optional<std::vector<bool>> find_satisfying_assignment(const CnfFormula& f) {
  if (f.n_vars > 24)
    throw Error(ErrorCode::too_large, "truth table beyond 24 variables");
  const uint32_t total = uint32_t{1} << f.n_vars;
  for (uint32_t bits = 0; bits < total; ++bits) {
    bool all_sat = true;
    for (const std::array<int, 3>& cl : f.clauses) {
      bool sat = false;
      for (int lit : cl) {
        bool value = bits & (uint32_t{1} << (std::abs(lit) - 1));
        if (lit > 0 ? value : !value) {
          sat = true;
          break;
        }
      }
      if (!sat) {
        all_sat = false;
        break;
      }
    }
    if (all_sat) {
      std::vector<bool> assignment(f.n_vars);
      for (int v = 0; v < f.n_vars; ++v) assignment[v] = bits & (uint32_t{1} << v);
      return assignment;
    }
  }
  return std::nullopt;
}

bool formula_satisfiable(const CnfFormula& f) {
  return find_satisfying_assignment(f).has_value();
}

}  // namespace cranopt
