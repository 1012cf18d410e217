// SPDX-License-Identifier: Apache-2.0

#include "generator.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rng.hpp"

namespace cranopt {

double path_loss_db(double distance_m, double carrier_ghz) {
  double d = std::max(distance_m, 10.0);
  return 36.7 * std::log10(d) + 22.7 + 26.0 * std::log10(carrier_ghz);
}

std::array<double, 2> hex_center(int k, double circumradius_m) {
  if (k == 0) return {0.0, 0.0};
  double spacing = std::sqrt(3.0) * circumradius_m;
  int ring = 1;
  int first = 1;  // index of the first cell of the current ring
  while (k >= first + 6 * ring) {
    first += 6 * ring;
    ++ring;
  }
  int offset = k - first;
  int corner = offset / ring;
  int step = offset % ring;
  auto corner_pos = [&](int c) -> std::array<double, 2> {
    double a = std::numbers::pi / 6.0 + c * std::numbers::pi / 3.0;
    return {ring * spacing * std::cos(a), ring * spacing * std::sin(a)};
  };
  std::array<double, 2> from = corner_pos(corner);
  std::array<double, 2> to = corner_pos(corner + 1);
  double t = static_cast<double>(step) / ring;
  return {from[0] + t * (to[0] - from[0]), from[1] + t * (to[1] - from[1])};
}

namespace {

bool inside_hex(double x, double y, double r) {
  double s3 = std::sqrt(3.0);
  return std::abs(y) <= s3 * r / 2.0 && s3 * std::abs(x) + std::abs(y) <= s3 * r;
}

std::array<double, 2> sample_hex(Rng& rng, double r) {
  double s3 = std::sqrt(3.0);
  for (;;) {
    double x = rng.uniform(-r, r);
    double y = rng.uniform(-s3 * r / 2.0, s3 * r / 2.0);
    if (inside_hex(x, y, r)) return {x, y};
  }
}

void check_config(const GeneratorConfig& cfg) {
  auto bad = [](const std::string& what) {
    throw Error(ErrorCode::invalid_argument, "generator config: " + what);
  };
  if (cfg.n_clusters < 1) bad("need at least one cluster");
  if (!(cfg.cluster_radius_m > 0.0)) bad("cluster radius must be positive");
  if (cfg.bs_per_cluster < 1) bad("need at least one BS per cluster");
  if (cfg.ues_per_cluster < 0) bad("negative UE count");
  if (!(cfg.carrier_ghz > 0.0)) bad("carrier frequency must be positive");
  if (!(cfg.ru_bandwidth_hz > 0.0)) bad("RU bandwidth must be positive");
  if (cfg.rus_per_bs < 1) bad("need at least one RU per BS");
  if (!(cfg.tx_power_mw_per_ru > 0.0)) bad("tx power must be positive");
  if (!(cfg.fronthaul_gbps > 0.0)) bad("fronthaul capacity must be positive");
  if (!(cfg.shadowing_sigma_db >= 0.0)) bad("negative shadowing sigma");
  if (!(cfg.max_load > 0.0)) bad("max load must be positive");
  if (!(cfg.demand_bits > 0.0)) bad("demand must be positive");
  if (!(cfg.period_s > 0.0)) bad("period must be positive");
}

}  // namespace

NetworkScenario generate(const GeneratorConfig& cfg) {
  check_config(cfg);

  NetworkScenario scn;
  scn.M = cfg.rus_per_bs;
  scn.B_hz = cfg.ru_bandwidth_hz;
  scn.max_load = cfg.max_load;
  scn.period_s = cfg.period_s;
  scn.noise_w = std::pow(10.0, (cfg.noise_dbm_per_hz - 30.0) / 10.0) * cfg.ru_bandwidth_hz;

  Rng rng(cfg.rng_seed);
  double power_w = cfg.tx_power_mw_per_ru / 1000.0;
  double fronthaul_bits = cfg.fronthaul_gbps * 1e9 * cfg.period_s;

  for (int c = 0; c < cfg.n_clusters; ++c) {
    scn.clusters.push_back(c);
    std::array<double, 2> center = hex_center(c, cfg.cluster_radius_m);
    for (int b = 0; b < cfg.bs_per_cluster; ++b) {
      BaseStation bs;
      bs.cluster = c;
      if (b == 0) {
        bs.pos = center;
      } else {
        std::array<double, 2> off = sample_hex(rng, cfg.cluster_radius_m);
        bs.pos = {center[0] + off[0], center[1] + off[1]};
      }
      bs.power_per_ru_w = power_w;
      bs.fronthaul_bits = fronthaul_bits;
      scn.bs.push_back(bs);
    }
    for (int u = 0; u < cfg.ues_per_cluster; ++u) {
      User ue;
      ue.cluster = c;
      std::array<double, 2> off = sample_hex(rng, cfg.cluster_radius_m);
      ue.pos = {center[0] + off[0], center[1] + off[1]};
      ue.traffic = TrafficTrace::constant(cfg.demand_bits, cfg.period_s);
      scn.ues.push_back(ue);
    }
  }

  for (BaseStation& bs : scn.bs) {
    bs.gains.reserve(scn.ues.size());
    for (const User& ue : scn.ues) {
      double dx = bs.pos[0] - ue.pos[0];
      double dy = bs.pos[1] - ue.pos[1];
      double pl = path_loss_db(std::hypot(dx, dy), cfg.carrier_ghz);
      double shadow = rng.normal() * cfg.shadowing_sigma_db;
      double amp = std::pow(10.0, -(pl + shadow) / 20.0);
      // Random coefficient direction: joint transmissions combine with
      // whatever alignment the channel happens to give, not perfectly.
      double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
      bs.gains.push_back(EffectiveGain::complex(
          {amp * std::cos(phase), amp * std::sin(phase)}));
    }
  }
  return scn;
}

}  // namespace cranopt
