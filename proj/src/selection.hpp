// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "allocation.hpp"
#include "types.hpp"

namespace cranopt {

// Outcome of one filter evaluation. kappa_out is the input association when
// the extension was rejected, otherwise the association extended by the
// candidate BS. lhs_load and rhs_load record the one-step load probe at the
// candidate BS: its load after pushing the current allocation once through
// the demand map of the extended association, versus its load under the
// current allocation directly. mu is the extended UE's one-step demand
// relative to its current allocation. These three are diagnostics; acceptance
// compares the achievable sum QoS of the two associations, see filter().
struct FilterDecision {
  bool accepted = false;
  Association kappa_out;
  double lhs_load = 0.0;
  double rhs_load = 0.0;
  double mu = 0.0;
  double eta_before = 0.0;      // sum QoS of the input association
  double eta_after = 0.0;       // sum QoS of kappa_out
  AllocationSolution solution;  // optimum for kappa_out
};

// One row of the per-decision trace emitted by run_algorithm1.
struct TraceEntry {
  int ue = 0;
  int bs = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  bool accepted = false;
  double eta_before = 0.0;
  double eta_after = 0.0;
};

struct SelectionOptions {
  FixedPointConfig fixed_point;
  // Re-solve the allocation after each accepted extension so later decisions
  // see the updated optimum. Disable to score every candidate against the
  // initial association's optimum instead.
  bool resolve_each = true;
  bool record_trace = false;
};

struct SelectionResult {
  Association kappa;
  AllocationSolution solution;
  int evaluations = 0;
  std::vector<TraceEntry> trace;
};

// Returns assoc with every BS in bs_set added to ue's serving set. BSs
// already serving are a no-op; a BS outside ue's cluster raises
// cluster_violation.
Association extend(const NetworkScenario& scn, const Association& assoc, int ue,
                   const std::vector<int>& bs_set);

// Evaluates adding bs to ue's serving set. current must be the optimum for
// assoc (the overload below computes it). The extension is kept only when the
// candidate association's achievable sum QoS is at least the current one, so
// a chain of filter applications never decreases the objective. A BS already
// serving ue is accepted as a no-op.
FilterDecision filter(const NetworkScenario& scn, const Association& assoc,
                      const AllocationSolution& current, int ue, int bs,
                      const FixedPointConfig& cfg = {});
FilterDecision filter(const NetworkScenario& scn, const Association& assoc,
                      int ue, int bs, const FixedPointConfig& cfg = {});

// Greedy selection sweep: for each UE in ascending index, tries every BS of
// its cluster in ascending index through filter(), then returns the final
// association and its optimum. Performs exactly sum_j |cluster BSs of j|
// filter evaluations.
SelectionResult run_algorithm1(const NetworkScenario& scn, const Association& kappa_init,
                               const SelectionOptions& opts = {});

// Each UE served by the single strongest BS of its cluster, measured by
// sqrt(tx power) times gain amplitude; ties go to the lowest BS index.
Association default_initial_association(const NetworkScenario& scn);

}  // namespace cranopt
