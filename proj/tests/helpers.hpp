// SPDX-License-Identifier: Apache-2.0
//
// Hand-built scenarios shared across the test suites. Values are kept small
// and exact so expected results can be worked out by hand.

#pragma once

#include <vector>

#include "types.hpp"

namespace cranopt_test {

using namespace cranopt;

// Two BS-UE pairs in one cluster with zero cross gains: no interference, so
// rates have closed forms. Amplitude sqrt(3) gives SINR 3 and, with M = 1,
// B = 1, noise = 1, a rate of exactly 2 bits/s.
inline NetworkScenario isolated_pairs() {
  NetworkScenario scn;
  scn.clusters = {0};
  scn.noise_w = 1.0;
  scn.M = 1;
  scn.B_hz = 1.0;
  scn.max_load = 1.0;
  scn.period_s = 1.0;
  for (int i = 0; i < 2; ++i) {
    BaseStation bs;
    bs.cluster = 0;
    bs.pos = {double(i) * 100.0, 0.0};
    bs.power_per_ru_w = 1.0;
    bs.fronthaul_bits = 100.0;
    bs.gains = {EffectiveGain::scalar(0.0), EffectiveGain::scalar(0.0)};
    bs.gains[i] = EffectiveGain::scalar(std::sqrt(3.0));
    scn.bs.push_back(bs);
  }
  for (int j = 0; j < 2; ++j) {
    User ue;
    ue.cluster = 0;
    ue.pos = {double(j) * 100.0, 10.0};
    ue.traffic = TrafficTrace::constant(1.0, 1.0);
    scn.ues.push_back(ue);
  }
  return scn;
}

// One cluster, two BSs, two UEs with symmetric coupling: direct amplitude a,
// cross amplitude b. Under the one-BS-each association the fixed point is
// symmetric, so the load-capped level has the closed form
//   lambda = rho_bar * M * B * log2(1 + a^2 / (b^2 * rho_bar + noise)) / V.
inline NetworkScenario symmetric_pair(double a, double b) {
  NetworkScenario scn = isolated_pairs();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      scn.bs[i].gains[j] = EffectiveGain::scalar(i == j ? a : b);
  return scn;
}

inline Association one_each(const NetworkScenario& scn) {
  std::vector<std::vector<int>> sets(scn.ues.size());
  for (size_t j = 0; j < sets.size(); ++j) sets[j] = {int(j)};
  return Association::make(scn, sets);
}

}  // namespace cranopt_test
