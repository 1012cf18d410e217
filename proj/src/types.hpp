// SPDX-License-Identifier: Apache-2.0
//
// Domain types for load-coupled downlink C-RAN networks with joint
// transmission: scenarios (clusters, base stations, users, effective channel
// gains), serving associations, and the QoS result the solvers produce.

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace cranopt {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class ErrorCode {
  invalid_argument,
  parse_error,
  validation_failed,
  cluster_violation,
  empty_serving_set,
  zero_demand,
  infeasible,
  no_convergence,
  too_large,
  invalid_formula,
  io_error,
  all_zero,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Effective coefficient of one BS-UE link after precoding.  Most links are
// scalar; two-component vectors let a pair of co-cluster BSs combine
// orthogonally (power addition instead of coherent amplitude addition),
// which the satisfiability embedding relies on.
struct EffectiveGain {
  std::complex<double> c{0.0, 0.0};

  static EffectiveGain scalar(double amplitude) { return {amplitude}; }
  static EffectiveGain complex(std::complex<double> value) { return {value}; }
  double power() const { return std::norm(c); }
  double amplitude() const { return std::abs(c); }
  bool is_zero() const { return c == 0.0; }
};

// Piecewise-constant bit-arrival profile over one scheduling period.  The
// solvers only consume the integrated volume; the segment structure exists so
// that demand profiles with bursts can still be expressed and validated.
struct TrafficTrace {
  std::vector<double> duration_s;
  std::vector<double> rate_bps;

  static TrafficTrace constant(double volume_bits, double period_s);
  double period() const;        // total covered time
  double volume_bits() const;   // integral of rate over the period
};

struct BaseStation {
  int cluster = 0;                   // id listed in NetworkScenario::clusters
  std::array<double, 2> pos{0.0, 0.0};  // metres
  double power_per_ru_w = 0.0;       // transmit power spent on one RU
  double fronthaul_bits = 0.0;       // fronthaul budget per period, bits
  std::vector<EffectiveGain> gains;  // one entry per UE, network wide
};

struct User {
  int cluster = 0;
  std::array<double, 2> pos{0.0, 0.0};
  TrafficTrace traffic;
};

struct NetworkScenario {
  std::vector<int> clusters;    // cluster ids, unique
  std::vector<BaseStation> bs;
  std::vector<User> ues;
  double noise_w = 0.0;         // noise power over one RU bandwidth
  int M = 0;                    // RUs per BS
  double B_hz = 0.0;            // bandwidth of one RU
  double max_load = 1.0;        // per-BS load cap rho_bar
  double period_s = 0.0;        // scheduling period

  int num_bs() const { return static_cast<int>(bs.size()); }
  int num_ues() const { return static_cast<int>(ues.size()); }
  bool has_cluster(int id) const;
  std::vector<int> cluster_bs(int cluster_id) const;   // ascending indices
  std::vector<int> cluster_ues(int cluster_id) const;
  double demand_bits(int ue) const;
};

struct Violation {
  std::string code;  // machine-readable, e.g. "unknown-cluster"
  std::string message;
};

// Structural checks on a scenario.  Returns all violations found; an empty
// list means the scenario is usable by every solver entry point.
std::vector<Violation> validate(const NetworkScenario& scn);

// Binary serving relation between BSs and UEs.  Immutable once built;
// construction enforces that a BS only serves UEs of its own cluster.
class Association {
 public:
  Association() = default;

  // serving[j] lists the BS indices serving UE j (deduplicated, any order).
  static Association make(const NetworkScenario& scn,
                          const std::vector<std::vector<int>>& serving);

  int num_bs() const { return m_; }
  int num_ues() const { return q_; }
  bool serves(int bs, int ue) const;
  const std::vector<int>& serving_set(int ue) const;    // ascending
  const std::vector<int>& served_users(int bs) const;   // ascending
  const std::vector<std::vector<int>>& serving_sets() const { return by_ue_; }
  bool operator==(const Association& other) const { return by_ue_ == other.by_ue_; }

 private:
  int m_ = 0, q_ = 0;
  std::vector<uint8_t> mat_;  // m x q, bs-major
  std::vector<std::vector<int>> by_ue_, by_bs_;
};

// QoS outcome attached to an allocation: served demand fractions and the two
// candidate common levels (load-capped lambda, fronthaul cap nu).
struct QosResult {
  std::vector<double> eta;              // served fraction per UE
  double lambda = 0.0;                  // load-capped common QoS level
  double nu = kInf;                     // fronthaul cap, +inf if none binds
  std::vector<double> loads;            // per-BS load at alpha_star
  std::vector<double> fronthaul_usage;  // per-BS bits per period
};

}  // namespace cranopt
