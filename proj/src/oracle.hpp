// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "allocation.hpp"
#include "reduction.hpp"
#include "types.hpp"

namespace cranopt {

// Brute-force ground truth for small instances. Everything here recomputes
// results from the channel formulas directly, independent of the fixed-point
// solvers, so the two paths can check each other.

struct FeasibilityResult {
  bool feasible = false;
  std::string violated;  // one of the constraint ids below when infeasible

  static constexpr const char* kUnservedUe = "unserved_ue";
  static constexpr const char* kZeroRate = "zero_rate";
  static constexpr const char* kLoadLimit = "load_limit";
  static constexpr const char* kFronthaulLimit = "fronthaul_limit";
};

// Can every UE be served at the common QoS level eta_target? Decided by the
// monotone demand iteration started from the zero allocation: its iterates
// only grow, so the first load-limit breach already condemns the limit point.
FeasibilityResult feasibility_check(const NetworkScenario& scn, const Association& assoc,
                                    double eta_target = 1.0);

// Number of cluster-respecting associations with nonempty serving sets:
// prod_j (2^{|cluster BSs of j|} - 1), saturated at 2^62 to avoid overflow.
uint64_t count_associations(const NetworkScenario& scn);

// Visits every such association in a fixed odometer order (UE 0's subset
// cycles fastest). Throws too_large beyond 2^20 associations.
void for_each_association(const NetworkScenario& scn,
                          const std::function<void(const Association&)>& visit);
std::vector<Association> enumerate_associations(const NetworkScenario& scn);

struct GlobalOptimum {
  Association assoc;
  AllocationSolution solution;
};

// Exhaustive argmax of the served-QoS sum over all associations; ties keep
// the earliest in enumeration order.
GlobalOptimum global_optimum(const NetworkScenario& scn, const FixedPointConfig& cfg = {});

// Independent check of solve_optimal on one association: sweeps the common
// QoS level over a 100000-point grid (then bisects the bracketing step) using
// the feasibility iteration above, and returns the relative gap between the
// sweep's best level and the solver's. Intended for instances of a few UEs.
double allocation_cross_check(const NetworkScenario& scn, const Association& assoc,
                              const FixedPointConfig& cfg = {});

// Exhaustive truth-table search, for formulas of up to 24 variables.
std::optional<std::vector<bool>> find_satisfying_assignment(const CnfFormula& f);
bool formula_satisfiable(const CnfFormula& f);

}  // namespace cranopt
