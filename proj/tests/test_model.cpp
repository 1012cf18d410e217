// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <complex>

#include "helpers.hpp"
#include "types.hpp"

using namespace cranopt;
using cranopt_test::isolated_pairs;

namespace {

bool has_code(const std::vector<Violation>& v, const std::string& code) {
  for (const Violation& x : v)
    if (x.code == code) return true;
  return false;
}

}  // namespace

TEST_CASE("effective gain scalar and vector forms") {
  EffectiveGain g = EffectiveGain::scalar(2.0);
  CHECK(g.power() == doctest::Approx(4.0));
  CHECK(g.amplitude() == doctest::Approx(2.0));
  CHECK_FALSE(g.is_zero());

  EffectiveGain v = EffectiveGain::complex({3.0, 4.0});
  CHECK(v.power() == doctest::Approx(25.0));
  CHECK(v.amplitude() == doctest::Approx(5.0));

  CHECK(EffectiveGain{}.is_zero());
}

TEST_CASE("constant traffic trace integrates to its volume") {
  TrafficTrace t = TrafficTrace::constant(5e6, 0.5);
  CHECK(t.period() == doctest::Approx(0.5));
  CHECK(t.volume_bits() == doctest::Approx(5e6));
}

TEST_CASE("piecewise trace volume is the sum of segment products") {
  TrafficTrace t;
  t.duration_s = {0.2, 0.3};
  t.rate_bps = {10.0, 20.0};
  CHECK(t.period() == doctest::Approx(0.5));
  CHECK(t.volume_bits() == doctest::Approx(0.2 * 10.0 + 0.3 * 20.0));
}

TEST_CASE("index helpers filter by cluster in ascending order") {
  NetworkScenario scn = isolated_pairs();
  scn.clusters = {0, 7};
  scn.bs[1].cluster = 7;
  scn.ues[0].cluster = 7;
  CHECK(scn.cluster_bs(0) == std::vector<int>{0});
  CHECK(scn.cluster_bs(7) == std::vector<int>{1});
  CHECK(scn.cluster_ues(0) == std::vector<int>{1});
  CHECK(scn.cluster_ues(7) == std::vector<int>{0});
  CHECK(scn.cluster_bs(99).empty());
  CHECK(scn.has_cluster(7));
  CHECK_FALSE(scn.has_cluster(99));
}

TEST_CASE("demand lookup checks its index") {
  NetworkScenario scn = isolated_pairs();
  CHECK(scn.demand_bits(0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(scn.demand_bits(2), Error);
  CHECK_THROWS_AS(scn.demand_bits(-1), Error);
}

TEST_CASE("a well formed scenario validates cleanly") {
  CHECK(validate(isolated_pairs()).empty());
}

TEST_CASE("validation flags scalar parameter problems") {
  NetworkScenario scn = isolated_pairs();
  scn.clusters = {0, 0};
  scn.noise_w = 0.0;
  scn.M = 0;
  scn.B_hz = -1.0;
  scn.max_load = 0.0;
  scn.period_s = 0.0;
  std::vector<Violation> v = validate(scn);
  CHECK(has_code(v, "duplicate-cluster-id"));
  CHECK(has_code(v, "bad-noise"));
  CHECK(has_code(v, "bad-ru-count"));
  CHECK(has_code(v, "bad-bandwidth"));
  CHECK(has_code(v, "bad-max-load"));
  CHECK(has_code(v, "bad-period"));
}

TEST_CASE("validation flags per-entity problems") {
  NetworkScenario scn = isolated_pairs();
  scn.bs[0].cluster = 3;
  scn.bs[0].power_per_ru_w = 0.0;
  scn.bs[1].fronthaul_bits = 0.0;
  scn.bs[1].gains.pop_back();
  scn.ues[1].cluster = 5;
  std::vector<Violation> v = validate(scn);
  CHECK(has_code(v, "unknown-cluster"));
  CHECK(has_code(v, "bad-power"));
  CHECK(has_code(v, "bad-fronthaul"));
  CHECK(has_code(v, "gain-count-mismatch"));
}

TEST_CASE("validation flags non-finite gains and broken traces") {
  NetworkScenario scn = isolated_pairs();
  scn.bs[0].gains[1] = EffectiveGain::complex({std::nan(""), 0.0});
  scn.ues[0].traffic.rate_bps = {-5.0};
  scn.ues[1].traffic.duration_s = {0.25};  // does not tile the 1 s period
  std::vector<Violation> v = validate(scn);
  CHECK(has_code(v, "bad-gain"));
  CHECK(has_code(v, "bad-trace"));
  CHECK(has_code(v, "trace-period-mismatch"));
}

TEST_CASE("association construction sorts and deduplicates") {
  NetworkScenario scn = isolated_pairs();
  Association a = Association::make(scn, {{1, 0, 1}, {0}});
  CHECK(a.num_bs() == 2);
  CHECK(a.num_ues() == 2);
  CHECK(a.serving_set(0) == std::vector<int>{0, 1});
  CHECK(a.serving_set(1) == std::vector<int>{0});
  CHECK(a.serves(0, 0));
  CHECK(a.serves(1, 0));
  CHECK_FALSE(a.serves(1, 1));
  CHECK(a.served_users(0) == std::vector<int>{0, 1});
  CHECK(a.served_users(1) == std::vector<int>{0});
}

TEST_CASE("association equality compares serving sets") {
  NetworkScenario scn = isolated_pairs();
  Association a = Association::make(scn, {{0}, {1}});
  Association b = Association::make(scn, {{0}, {1}});
  Association c = Association::make(scn, {{0, 1}, {1}});
  CHECK(a == b);
  CHECK_FALSE(a == c);
}

TEST_CASE("association rejects malformed inputs") {
  NetworkScenario scn = isolated_pairs();
  CHECK_THROWS_AS(Association::make(scn, {{0}}), Error);
  CHECK_THROWS_AS(Association::make(scn, {{0}, {2}}), Error);
  CHECK_THROWS_AS(Association::make(scn, {{0}, {-1}}), Error);
}

TEST_CASE("association enforces cluster membership") {
  NetworkScenario scn = isolated_pairs();
  scn.clusters = {0, 1};
  scn.bs[1].cluster = 1;
  scn.ues[1].cluster = 1;
  try {
    Association::make(scn, {{0, 1}, {1}});
    FAIL("expected a cluster violation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::cluster_violation);
  }
}

TEST_CASE("association accessors check their indices") {
  NetworkScenario scn = isolated_pairs();
  Association a = Association::make(scn, {{0}, {1}});
  CHECK_THROWS_AS(a.serves(2, 0), Error);
  CHECK_THROWS_AS(a.serves(0, 2), Error);
  CHECK_THROWS_AS(a.serving_set(5), Error);
  CHECK_THROWS_AS(a.served_users(5), Error);
}

TEST_CASE("empty serving sets are representable") {
  NetworkScenario scn = isolated_pairs();
  Association a = Association::make(scn, {{}, {0, 1}});
  CHECK(a.serving_set(0).empty());
  CHECK(a.serving_set(1) == std::vector<int>{0, 1});
}
