// SPDX-License-Identifier: Apache-2.0

#include "channel.hpp"

#include <cmath>

namespace cranopt {

std::vector<double> loads(const NetworkScenario& scn, const Association& assoc,
                          const std::vector<double>& alpha) {
  if (static_cast<int>(alpha.size()) != scn.num_ues())
    throw Error(ErrorCode::invalid_argument, "allocation length mismatch");
  std::vector<double> rho(scn.num_bs(), 0.0);
  for (int i = 0; i < scn.num_bs(); ++i)
    for (int j : assoc.served_users(i)) rho[i] += alpha[j];
  return rho;
}

double coherent_power(const NetworkScenario& scn, const Association& assoc, int ue) {
  std::complex<double> s{0.0, 0.0};
  for (int i : assoc.serving_set(ue))
    s += std::sqrt(scn.bs[i].power_per_ru_w) * scn.bs[i].gains[ue].c;
  return std::norm(s);
}

double sinr(const NetworkScenario& scn, const Association& assoc,
            const std::vector<double>& alpha, int ue) {
  if (assoc.serving_set(ue).empty())
    throw Error(ErrorCode::empty_serving_set,
                "ue " + std::to_string(ue) + " has no serving BS");
  const std::vector<double> rho = loads(scn, assoc, alpha);
  double num = coherent_power(scn, assoc, ue);
  if (num <= 0.0) return 0.0;
  double den = scn.noise_w;
  for (int k = 0; k < scn.num_bs(); ++k) {
    if (assoc.serves(k, ue)) continue;
    den += scn.bs[k].power_per_ru_w * scn.bs[k].gains[ue].power() * rho[k];
  }
  return num / den;
}

double rate_bps(const NetworkScenario& scn, const Association& assoc,
                const std::vector<double>& alpha, int ue) {
  double g = sinr(scn, assoc, alpha, ue);
  return scn.M * scn.B_hz * std::log2(1.0 + g);
}

double jain_fairness(const std::vector<double>& eta) {
  double s1 = 0.0, s2 = 0.0;
  for (double e : eta) {
    s1 += e;
    s2 += e * e;
  }
  if (eta.empty() || s2 == 0.0)
    throw Error(ErrorCode::all_zero, "fairness undefined for all-zero input");
  return s1 * s1 / (static_cast<double>(eta.size()) * s2);
}

std::vector<double> fronthaul_usage(const NetworkScenario& scn,
                                    const Association& assoc,
                                    const std::vector<double>& eta) {
  if (static_cast<int>(eta.size()) != scn.num_ues())
    throw Error(ErrorCode::invalid_argument, "eta length mismatch");
  std::vector<double> use(scn.num_bs(), 0.0);
  for (int i = 0; i < scn.num_bs(); ++i)
    for (int j : assoc.served_users(i)) use[i] += eta[j] * scn.demand_bits(j);
  return use;
}

}  // namespace cranopt
