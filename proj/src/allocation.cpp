// SPDX-License-Identifier: Apache-2.0

#include "allocation.hpp"

#include <algorithm>
#include <cmath>

#include "channel.hpp"

namespace cranopt {

double AllocationSolution::sum_eta() const {
  double s = 0.0;
  for (double e : qos.eta) s += e;
  return s;
}

double demand_map_T(const NetworkScenario& scn, const Association& assoc,
                    const std::vector<double>& alpha, double eta_j, int ue) {
  if (assoc.serving_set(ue).empty())
    throw Error(ErrorCode::empty_serving_set,
                "ue " + std::to_string(ue) + " has no serving BS");
  double demand = eta_j * scn.demand_bits(ue);
  if (demand == 0.0) return 0.0;
  double c = rate_bps(scn, assoc, alpha, ue);
  if (c <= 0.0) return kInf;
  return demand / c;
}

std::vector<double> demand_map_H(const NetworkScenario& scn, const Association& assoc,
                                 const std::vector<double>& alpha, double eta) {
  const std::vector<double> rho = loads(scn, assoc, alpha);
  std::vector<double> out(scn.num_ues());
  for (int j = 0; j < scn.num_ues(); ++j) {
    if (assoc.serving_set(j).empty())
      throw Error(ErrorCode::empty_serving_set,
                  "ue " + std::to_string(j) + " has no serving BS");
    double demand = eta * scn.demand_bits(j);
    if (demand == 0.0) {
      out[j] = 0.0;
      continue;
    }
    double den = scn.noise_w;
    for (int k = 0; k < scn.num_bs(); ++k) {
      if (assoc.serves(k, j)) continue;
      den += scn.bs[k].power_per_ru_w * scn.bs[k].gains[j].power() * rho[k];
    }
    double num = coherent_power(scn, assoc, j);
    double c = scn.M * scn.B_hz * std::log2(1.0 + num / den);
    out[j] = c > 0.0 ? demand / c : kInf;
  }
  return out;
}

double kappa_norm(const NetworkScenario& scn, const Association& assoc,
                  const std::vector<double>& alpha) {
  double peak = 0.0;
  for (double r : loads(scn, assoc, alpha)) peak = std::max(peak, r);
  return peak;
}

double fronthaul_cap(const NetworkScenario& scn, const Association& assoc) {
  double nu = kInf;
  for (int i = 0; i < scn.num_bs(); ++i) {
    double carried = 0.0;
    for (int j : assoc.served_users(i)) carried += scn.demand_bits(j);
    if (carried > 0.0) nu = std::min(nu, scn.bs[i].fronthaul_bits / carried);
  }
  return nu;
}

namespace {

// Precomputed per-association structure keeping the inner iterations cheap:
// coherent numerators, interference weights p_k |g_kj|^2 of non-serving BSs,
// demand volumes and serving lists.
struct Ctx {
  int m = 0, q = 0;
  double mb = 0.0, noise = 0.0, rho_bar = 0.0;
  const Association* assoc = nullptr;
  std::vector<double> num, vol;
  std::vector<std::vector<std::pair<int, double>>> interf;
  std::vector<double> rho;  // scratch

  Ctx(const NetworkScenario& scn, const Association& a)
      : m(scn.num_bs()),
        q(scn.num_ues()),
        mb(static_cast<double>(scn.M) * scn.B_hz),
        noise(scn.noise_w),
        rho_bar(scn.max_load),
        assoc(&a),
        num(q),
        vol(q),
        interf(q),
        rho(m) {
    for (int j = 0; j < q; ++j) {
      num[j] = coherent_power(scn, a, j);
      vol[j] = scn.demand_bits(j);
      for (int k = 0; k < m; ++k) {
        if (a.serves(k, j)) continue;
        double w = scn.bs[k].power_per_ru_w * scn.bs[k].gains[j].power();
        if (w > 0.0) interf[j].push_back({k, w});
      }
    }
  }

  void loads_of(const std::vector<double>& alpha) {
    std::fill(rho.begin(), rho.end(), 0.0);
    for (int i = 0; i < m; ++i)
      for (int j : assoc->served_users(i)) rho[i] += alpha[j];
  }

  double peak_load() const {
    double peak = 0.0;
    for (double r : rho) peak = std::max(peak, r);
    return peak;
  }

  // out <- H(alpha, eta); requires loads_of(alpha) done.
  void demand(double eta, std::vector<double>& out) const {
    for (int j = 0; j < q; ++j) {
      double den = noise;
      for (const auto& [k, w] : interf[j]) den += w * rho[k];
      double c = mb * std::log2(1.0 + num[j] / den);
      out[j] = eta * vol[j] / c;
    }
  }
};

void check_solvable(const NetworkScenario& scn, const Association& assoc,
                    const Ctx& ctx) {
  for (int j = 0; j < ctx.q; ++j) {
    if (assoc.serving_set(j).empty())
      throw Error(ErrorCode::infeasible,
                  "ue " + std::to_string(j) + " has no serving BS");
    if (!(ctx.vol[j] > 0.0))
      throw Error(ErrorCode::zero_demand,
                  "ue " + std::to_string(j) + " has zero demand volume");
    if (!(ctx.num[j] > 0.0))
      throw Error(ErrorCode::infeasible,
                  "ue " + std::to_string(j) + " has zero combined serving gain");
  }
  (void)scn;
}

std::vector<double> starting_point(const FixedPointConfig& cfg, int q) {
  std::vector<double> a;
  if (!cfg.initial_alpha_vector.empty()) {
    if (static_cast<int>(cfg.initial_alpha_vector.size()) != q)
      throw Error(ErrorCode::invalid_argument, "initial allocation length mismatch");
    a = cfg.initial_alpha_vector;
  } else {
    a.assign(q, cfg.initial_alpha);
  }
  for (double x : a)
    if (!(x > 0.0))
      throw Error(ErrorCode::invalid_argument, "starting allocation must be positive");
  if (!(cfg.tolerance > 0.0) || cfg.max_iterations < 1)
    throw Error(ErrorCode::invalid_argument, "bad fixed-point configuration");
  return a;
}

double sup_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

double sup_abs(const std::vector<double>& a) {
  double d = 0.0;
  for (double x : a) d = std::max(d, std::abs(x));
  return d;
}

}  // namespace

LoadFixedPoint solve_alpha_load(const NetworkScenario& scn, const Association& assoc,
                                const FixedPointConfig& cfg) {
  LoadFixedPoint out;
  if (scn.num_ues() == 0) {
    out.lambda = kInf;
    return out;
  }
  Ctx ctx(scn, assoc);
  check_solvable(scn, assoc, ctx);

  // Some serving patterns (each UE served by a far BS, interfered by its near
  // one) give the normalized update an oscillating mode as strong as the
  // converging one, so plain iteration ping-pongs between two points. Averaging
  // the update with the previous iterate cancels that mode without moving the
  // fixed point; it is engaged only after the plain update has had a fair run,
  // so ordinary instances keep the one-step trajectory.
  constexpr int kDampAfter = 500;
  std::vector<double> alpha = starting_point(cfg, ctx.q);
  std::vector<double> h(ctx.q);
  bool converged = false;
  for (int it = 1; it <= cfg.max_iterations; ++it) {
    ctx.loads_of(alpha);
    ctx.demand(1.0, h);
    ctx.loads_of(h);
    double scale = ctx.rho_bar / ctx.peak_load();
    double residual_den = std::max(sup_abs(alpha), 1e-300);
    double residual_num = 0.0;
    bool damp = it > kDampAfter;
    for (int j = 0; j < ctx.q; ++j) {
      double cand = scale * h[j];
      residual_num = std::max(residual_num, std::abs(cand - alpha[j]));
      alpha[j] = damp ? 0.5 * (alpha[j] + cand) : cand;
    }
    out.iterations = it;
    out.residual = residual_num / residual_den;
    if (out.residual < cfg.tolerance) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw Error(ErrorCode::no_convergence,
                "load fixed point did not converge, residual " +
                    std::to_string(out.residual));
  // At the fixed point alpha = rho_bar * H(alpha,1) / |H(alpha,1)|, so the
  // supported common QoS level is rho_bar over the peak load of H(alpha,1).
  ctx.loads_of(alpha);
  ctx.demand(1.0, h);
  ctx.loads_of(h);
  out.lambda = ctx.rho_bar / ctx.peak_load();
  out.alpha = std::move(alpha);
  return out;
}

FronthaulFixedPoint solve_alpha_fronthaul(const NetworkScenario& scn,
                                          const Association& assoc,
                                          const FixedPointConfig& cfg) {
  FronthaulFixedPoint out;
  out.nu = fronthaul_cap(scn, assoc);
  if (scn.num_ues() == 0) return out;
  Ctx ctx(scn, assoc);
  check_solvable(scn, assoc, ctx);
  if (out.nu == kInf) {
    out.unbounded = true;
    return out;
  }

  const double guard = 10.0 * std::max(ctx.rho_bar, 1.0);
  std::vector<double> alpha = starting_point(cfg, ctx.q);
  std::vector<double> next(ctx.q);
  for (int it = 1; it <= cfg.max_iterations; ++it) {
    ctx.loads_of(alpha);
    ctx.demand(out.nu, next);
    out.iterations = it;
    ctx.loads_of(next);
    if (ctx.peak_load() > guard) {
      out.diverged = true;
      return out;
    }
    out.residual = sup_diff(next, alpha) / std::max(sup_abs(alpha), 1e-300);
    alpha.swap(next);
    if (out.residual < cfg.tolerance) {
      out.alpha = std::move(alpha);
      return out;
    }
  }
  throw Error(ErrorCode::no_convergence,
              "fronthaul fixed point did not converge, residual " +
                  std::to_string(out.residual));
}

AllocationSolution solve_optimal(const NetworkScenario& scn, const Association& assoc,
                                 const FixedPointConfig& cfg) {
  AllocationSolution sol;
  sol.qos.loads.assign(scn.num_bs(), 0.0);
  sol.qos.fronthaul_usage.assign(scn.num_bs(), 0.0);
  if (scn.num_ues() == 0) {
    sol.qos.lambda = kInf;
    sol.qos.nu = fronthaul_cap(scn, assoc);
    sol.report.fronthaul_unbounded = sol.qos.nu == kInf;
    return sol;
  }

  LoadFixedPoint load = solve_alpha_load(scn, assoc, cfg);
  FronthaulFixedPoint fh = solve_alpha_fronthaul(scn, assoc, cfg);
  sol.report.load_iterations = load.iterations;
  sol.report.load_residual = load.residual;
  sol.report.fronthaul_iterations = fh.iterations;
  sol.report.fronthaul_residual = fh.residual;
  sol.report.fronthaul_diverged = fh.diverged;
  sol.report.fronthaul_unbounded = fh.unbounded;

  const int q = scn.num_ues();
  sol.alpha_load = load.alpha;
  sol.alpha_fh = fh.has_alpha() ? fh.alpha : std::vector<double>{};
  sol.alpha_star.resize(q);
  sol.binding.resize(q);
  for (int j = 0; j < q; ++j) {
    double fhj = fh.has_alpha() ? fh.alpha[j] : kInf;
    if (load.alpha[j] <= fhj) {
      sol.alpha_star[j] = load.alpha[j];
      sol.binding[j] = Binding::load_limited;
    } else {
      sol.alpha_star[j] = fhj;
      sol.binding[j] = Binding::fronthaul_limited;
    }
  }

  Ctx ctx(scn, assoc);
  std::vector<double> t(q);
  ctx.loads_of(sol.alpha_star);
  sol.qos.loads = ctx.rho;
  ctx.demand(1.0, t);
  sol.qos.eta.resize(q);
  for (int j = 0; j < q; ++j)
    sol.qos.eta[j] = std::min(sol.alpha_star[j] / t[j], fh.nu);
  sol.qos.lambda = load.lambda;
  sol.qos.nu = fh.nu;
  sol.qos.fronthaul_usage = fronthaul_usage(scn, assoc, sol.qos.eta);
  return sol;
}

}  // namespace cranopt
