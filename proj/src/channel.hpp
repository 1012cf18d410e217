// SPDX-License-Identifier: Apache-2.0
//
// Load-coupled channel quantities: per-BS loads, SINR under probabilistic
// inter-cell interference, Shannon rate over the allocated RUs, and Jain's
// fairness index.

#pragma once

#include <vector>

#include "types.hpp"

namespace cranopt {

// Per-BS load: sum of the allocation shares of the UEs a BS serves.  A BS's
// load is also the probability that it occupies (and thus interferes on) a
// given RU.
std::vector<double> loads(const NetworkScenario& scn, const Association& assoc,
                          const std::vector<double>& alpha);

// Received power of the joint transmission toward one UE: squared norm of the
// coherent sum of sqrt(p_i) * coeff_i over the serving set.
double coherent_power(const NetworkScenario& scn, const Association& assoc, int ue);

// SINR of one UE.  Interference from each non-serving BS is its received
// power scaled by that BS's load.  UEs with an empty serving set (or zero
// combined gain) get SINR 0.
double sinr(const NetworkScenario& scn, const Association& assoc,
            const std::vector<double>& alpha, int ue);

// Achievable rate with all M RUs: M * B * log2(1 + sinr), bits per second.
double rate_bps(const NetworkScenario& scn, const Association& assoc,
                const std::vector<double>& alpha, int ue);

// Jain's fairness index |eta|_1^2 / (q * |eta|_2^2); 1 iff all equal.
double jain_fairness(const std::vector<double>& eta);

// Per-BS fronthaul usage in bits per period: each serving BS carries the full
// served volume of each of its UEs (joint transmission duplicates data).
std::vector<double> fronthaul_usage(const NetworkScenario& scn,
                                    const Association& assoc,
                                    const std::vector<double>& eta);

}  // namespace cranopt
