// SPDX-License-Identifier: Apache-2.0

#include "types.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace cranopt {

TrafficTrace TrafficTrace::constant(double volume_bits, double period_s) {
  TrafficTrace t;
  t.duration_s = {period_s};
  t.rate_bps = {period_s > 0.0 ? volume_bits / period_s : 0.0};
  return t;
}

double TrafficTrace::period() const {
  double sum = 0.0;
  for (double d : duration_s) sum += d;
  return sum;
}

double TrafficTrace::volume_bits() const {
  double sum = 0.0;
  for (size_t s = 0; s < duration_s.size(); ++s) sum += duration_s[s] * rate_bps[s];
  return sum;
}

bool NetworkScenario::has_cluster(int id) const {
  return std::find(clusters.begin(), clusters.end(), id) != clusters.end();
}

std::vector<int> NetworkScenario::cluster_bs(int cluster_id) const {
  std::vector<int> out;
  for (int i = 0; i < num_bs(); ++i)
    if (bs[i].cluster == cluster_id) out.push_back(i);
  return out;
}

std::vector<int> NetworkScenario::cluster_ues(int cluster_id) const {
  std::vector<int> out;
  for (int j = 0; j < num_ues(); ++j)
    if (ues[j].cluster == cluster_id) out.push_back(j);
  return out;
}

double NetworkScenario::demand_bits(int ue) const {
  if (ue < 0 || ue >= num_ues())
    throw Error(ErrorCode::invalid_argument, "ue index out of range");
  return ues[ue].traffic.volume_bits();
}

namespace {

bool finite_gain(const EffectiveGain& g) {
  return std::isfinite(g.c.real()) && std::isfinite(g.c.imag());
}

std::string at(const char* kind, int idx) {
  std::ostringstream os;
  os << kind << " " << idx;
  return os.str();
}

}  // namespace

std::vector<Violation> validate(const NetworkScenario& scn) {
  std::vector<Violation> v;
  auto add = [&v](const std::string& code, const std::string& msg) {
    v.push_back({code, msg});
  };

  std::set<int> seen;
  for (int id : scn.clusters) {
    if (!seen.insert(id).second)
      add("duplicate-cluster-id", "cluster id listed twice: " + std::to_string(id));
  }
  if (!(scn.noise_w > 0.0) || !std::isfinite(scn.noise_w))
    add("bad-noise", "noise power must be positive and finite");
  if (scn.M < 1) add("bad-ru-count", "M must be at least 1");
  if (!(scn.B_hz > 0.0)) add("bad-bandwidth", "RU bandwidth must be positive");
  if (!(scn.max_load > 0.0)) add("bad-max-load", "max load must be positive");
  if (!(scn.period_s > 0.0)) add("bad-period", "scheduling period must be positive");

  for (int i = 0; i < scn.num_bs(); ++i) {
    const BaseStation& b = scn.bs[i];
    if (!scn.has_cluster(b.cluster))
      add("unknown-cluster", at("bs", i) + " references unlisted cluster " +
                                 std::to_string(b.cluster));
    if (!(b.power_per_ru_w > 0.0))
      add("bad-power", at("bs", i) + " has non-positive per-RU power");
    if (!(b.fronthaul_bits > 0.0))
      add("bad-fronthaul", at("bs", i) + " has non-positive fronthaul budget");
    if (static_cast<int>(b.gains.size()) != scn.num_ues())
      add("gain-count-mismatch",
          at("bs", i) + " carries " + std::to_string(b.gains.size()) +
              " gain entries for " + std::to_string(scn.num_ues()) + " UEs");
    for (size_t j = 0; j < b.gains.size(); ++j) {
      if (!finite_gain(b.gains[j]))
        add("bad-gain", at("bs", i) + " gain toward ue " + std::to_string(j) +
                            " has non-finite components");
    }
  }

  for (int j = 0; j < scn.num_ues(); ++j) {
    const User& u = scn.ues[j];
    if (!scn.has_cluster(u.cluster))
      add("unknown-cluster", at("ue", j) + " references unlisted cluster " +
                                 std::to_string(u.cluster));
    const TrafficTrace& t = u.traffic;
    if (t.duration_s.size() != t.rate_bps.size())
      add("bad-trace", at("ue", j) + " trace segment arrays differ in length");
    bool neg = false;
    for (double r : t.rate_bps) neg = neg || r < 0.0 || !std::isfinite(r);
    for (double d : t.duration_s) neg = neg || d < 0.0 || !std::isfinite(d);
    if (neg) add("bad-trace", at("ue", j) + " trace has negative or non-finite entries");
    // The demand profile must tile the scheduling period exactly.
    if (scn.period_s > 0.0 &&
        std::abs(t.period() - scn.period_s) > 1e-9 * std::max(1.0, scn.period_s))
      add("trace-period-mismatch",
          at("ue", j) + " trace covers " + std::to_string(t.period()) +
              " s, period is " + std::to_string(scn.period_s) + " s");
  }

  return v;
}

Association Association::make(const NetworkScenario& scn,
                              const std::vector<std::vector<int>>& serving) {
  if (static_cast<int>(serving.size()) != scn.num_ues())
    throw Error(ErrorCode::invalid_argument,
                "serving list count does not match UE count");
  Association a;
  a.m_ = scn.num_bs();
  a.q_ = scn.num_ues();
  a.mat_.assign(static_cast<size_t>(a.m_) * a.q_, 0);
  a.by_ue_.resize(a.q_);
  a.by_bs_.resize(a.m_);
  for (int j = 0; j < a.q_; ++j) {
    for (int i : serving[j]) {
      if (i < 0 || i >= a.m_)
        throw Error(ErrorCode::invalid_argument, "bs index out of range");
      if (scn.bs[i].cluster != scn.ues[j].cluster)
        throw Error(ErrorCode::cluster_violation,
                    "bs " + std::to_string(i) + " may not serve ue " +
                        std::to_string(j) + " outside its cluster");
      a.mat_[static_cast<size_t>(i) * a.q_ + j] = 1;
    }
  }
  for (int i = 0; i < a.m_; ++i)
    for (int j = 0; j < a.q_; ++j)
      if (a.mat_[static_cast<size_t>(i) * a.q_ + j]) {
        a.by_ue_[j].push_back(i);
        a.by_bs_[i].push_back(j);
      }
  return a;
}

bool Association::serves(int bs, int ue) const {
  if (bs < 0 || bs >= m_ || ue < 0 || ue >= q_)
    throw Error(ErrorCode::invalid_argument, "association index out of range");
  return mat_[static_cast<size_t>(bs) * q_ + ue] != 0;
}

const std::vector<int>& Association::serving_set(int ue) const {
  if (ue < 0 || ue >= q_)
    throw Error(ErrorCode::invalid_argument, "ue index out of range");
  return by_ue_[ue];
}

const std::vector<int>& Association::served_users(int bs) const {
  if (bs < 0 || bs >= m_)
    throw Error(ErrorCode::invalid_argument, "bs index out of range");
  return by_bs_[bs];
}

}  // namespace cranopt
