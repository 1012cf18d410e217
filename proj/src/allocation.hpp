// SPDX-License-Identifier: Apache-2.0
//
// Fixed-point solvers for the optimal time-frequency allocation under a
// per-BS load cap and per-BS fronthaul budgets.  Two candidate allocations
// are computed: the load-capped one via a normalized (power-iteration style)
// fixed point whose peak load equals rho_bar, and the fronthaul-capped one as
// the plain fixed point of the demand map at the common QoS level nu.  The
// optimum is their elementwise minimum.

#pragma once

#include <vector>

#include "types.hpp"

namespace cranopt {

struct FixedPointConfig {
  double tolerance = 1e-10;    // relative sup-norm residual
  int max_iterations = 10000;
  double initial_alpha = 1e-3;              // broadcast starting point, > 0
  std::vector<double> initial_alpha_vector; // optional per-UE override
};

enum class Binding { load_limited, fronthaul_limited };

struct SolveReport {
  int load_iterations = 0;
  double load_residual = 0.0;
  int fronthaul_iterations = 0;
  double fronthaul_residual = 0.0;
  bool fronthaul_diverged = false;   // iteration blew past the load guard
  bool fronthaul_unbounded = false;  // nu = +inf, iteration skipped
};

struct AllocationSolution {
  std::vector<double> alpha_star;
  std::vector<double> alpha_load;
  std::vector<double> alpha_fh;  // empty when the branch is +inf
  QosResult qos;
  std::vector<Binding> binding;
  SolveReport report;

  double sum_eta() const;
  double common_eta() const { return qos.eta.empty() ? 0.0 : qos.eta.front(); }
};

// Required allocation share of one UE to serve an eta_j fraction of its
// demand at the rate implied by the current allocation: eta_j * V_j / C_j.
double demand_map_T(const NetworkScenario& scn, const Association& assoc,
                    const std::vector<double>& alpha, double eta_j, int ue);

// The demand map stacked over all UEs at a common eta.
std::vector<double> demand_map_H(const NetworkScenario& scn, const Association& assoc,
                                 const std::vector<double>& alpha, double eta);

// Association-induced norm of an allocation: its peak per-BS load.
double kappa_norm(const NetworkScenario& scn, const Association& assoc,
                  const std::vector<double>& alpha);

// Fronthaul cap on the common QoS level: min over BSs of budget divided by
// the total demand volume the BS would carry.  BSs serving no demand impose
// no bound; +inf when none does.
double fronthaul_cap(const NetworkScenario& scn, const Association& assoc);

struct LoadFixedPoint {
  std::vector<double> alpha;
  double lambda = 0.0;  // common QoS level the load cap supports
  int iterations = 0;
  double residual = 0.0;
};

// Normalized fixed point of the demand map: alpha <- rho_bar * H(alpha, 1) /
// |H(alpha, 1)|_kappa.  At convergence the peak load equals rho_bar.
LoadFixedPoint solve_alpha_load(const NetworkScenario& scn, const Association& assoc,
                                const FixedPointConfig& cfg);

struct FronthaulFixedPoint {
  std::vector<double> alpha;  // empty unless bounded and convergent
  double nu = kInf;
  bool unbounded = false;  // nu = +inf
  bool diverged = false;
  int iterations = 0;
  double residual = 0.0;
  bool has_alpha() const { return !unbounded && !diverged; }
};

// Plain fixed point of alpha <- H(alpha, nu).  The demand map is a standard
// interference function, so the iteration converges whenever a fixed point
// exists; loads exceeding 10*max(rho_bar, 1) are treated as divergence and
// reported (the caller then takes the load-capped branch).
FronthaulFixedPoint solve_alpha_fronthaul(const NetworkScenario& scn,
                                          const Association& assoc,
                                          const FixedPointConfig& cfg);

// Elementwise minimum of the two branches plus the served QoS levels
// eta_j = min(alpha_j / T_j(alpha, 1), nu); all components come out equal.
AllocationSolution solve_optimal(const NetworkScenario& scn, const Association& assoc,
                                 const FixedPointConfig& cfg);

}  // namespace cranopt
