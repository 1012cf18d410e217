// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>

#include "types.hpp"

namespace cranopt {

// Knobs for random hexagonal deployments. Every quantity that the channel
// model consumes is explicit here; nothing is read from the environment, so a
// config (seed included) fully determines the generated scenario.
struct GeneratorConfig {
  int n_clusters = 3;
  double cluster_radius_m = 500.0;
  int bs_per_cluster = 4;
  int ues_per_cluster = 20;
  double carrier_ghz = 2.0;
  double ru_bandwidth_hz = 180e3;
  int rus_per_bs = 100;
  double noise_dbm_per_hz = -174.0;
  double tx_power_mw_per_ru = 200.0;
  double fronthaul_gbps = 2.5;
  double shadowing_sigma_db = 3.0;
  double max_load = 1.0;
  double demand_bits = 1e6;
  double period_s = 0.5;
  uint64_t rng_seed = 1;
};

// Path loss in dB of the urban-micro NLOS model used throughout:
// 36.7 log10(d) + 22.7 + 26 log10(f), distance floored at 10 m.
double path_loss_db(double distance_m, double carrier_ghz);

// Center of the k-th hexagonal cluster on a triangular lattice (circumradius
// r): index 0 at the origin, then the first ring counterclockwise starting at
// 30 degrees, center spacing sqrt(3)*r.
std::array<double, 2> hex_center(int k, double circumradius_m);

// Random deployment: per cluster, one BS at the hexagon center and the rest
// uniform over the hexagon, then the UEs, then one shadowed gain per (BS, UE)
// pair scanned BS-major. Identical configs produce identical scenarios.
NetworkScenario generate(const GeneratorConfig& cfg);

}  // namespace cranopt
