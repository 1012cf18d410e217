// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <set>

#include "generator.hpp"
#include "helpers.hpp"
#include "oracle.hpp"
#include "reduction.hpp"
#include "selection.hpp"

using namespace cranopt;
using cranopt_test::isolated_pairs;
using cranopt_test::one_each;

namespace {

NetworkScenario drop_ue(NetworkScenario scn, int ue) {
  scn.ues.erase(scn.ues.begin() + ue);
  for (BaseStation& b : scn.bs) b.gains.erase(b.gains.begin() + ue);
  return scn;
}

}  // namespace

TEST_CASE("association counts follow the subset product") {
  NetworkScenario scn = isolated_pairs();
  CHECK(count_associations(scn) == 9);  // (2^2 - 1)^2

  NetworkScenario single = drop_ue(scn, 1);
  CHECK(count_associations(single) == 3);

  GeneratorConfig cfg;
  cfg.n_clusters = 2;
  cfg.bs_per_cluster = 3;
  cfg.ues_per_cluster = 2;
  cfg.rng_seed = 2;
  CHECK(count_associations(generate(cfg)) == 7 * 7 * 7 * 7);
}

TEST_CASE("enumeration yields distinct, nonempty, cluster-true associations") {
  NetworkScenario scn = isolated_pairs();
  std::vector<Association> all = enumerate_associations(scn);
  REQUIRE(all.size() == 9);
  std::set<std::vector<std::vector<int>>> seen;
  for (const Association& a : all) {
    for (int j = 0; j < 2; ++j) CHECK_FALSE(a.serving_set(j).empty());
    seen.insert(a.serving_sets());
  }
  CHECK(seen.size() == 9);
  // The first association serves everybody from the lowest-index BS.
  CHECK(all[0].serving_set(0) == std::vector<int>{0});
  CHECK(all[0].serving_set(1) == std::vector<int>{0});
}

TEST_CASE("enumeration refuses oversized search spaces") {
  GeneratorConfig cfg;
  cfg.n_clusters = 1;
  cfg.bs_per_cluster = 2;
  cfg.ues_per_cluster = 21;  // 3^21 > 2^20
  cfg.rng_seed = 3;
  NetworkScenario scn = generate(cfg);
  try {
    for_each_association(scn, [](const Association&) {});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::too_large);
  }
}

TEST_CASE("feasibility verdicts name the violated constraint") {
  NetworkScenario scn = isolated_pairs();

  Association holes = Association::make(scn, {{}, {1}});
  FeasibilityResult r = feasibility_check(scn, holes, 1.0);
  CHECK_FALSE(r.feasible);
  CHECK(r.violated == FeasibilityResult::kUnservedUe);

  NetworkScenario deaf = scn;
  deaf.bs[0].gains[0] = EffectiveGain::scalar(0.0);
  r = feasibility_check(deaf, one_each(deaf), 1.0);
  CHECK_FALSE(r.feasible);
  CHECK(r.violated == FeasibilityResult::kZeroRate);

  // Rate 2 bits/s per pair: level 3 needs 1.5 BSs worth of RUs.
  r = feasibility_check(scn, one_each(scn), 3.0);
  CHECK_FALSE(r.feasible);
  CHECK(r.violated == FeasibilityResult::kLoadLimit);

  NetworkScenario narrow = scn;
  narrow.bs[0].fronthaul_bits = 0.5;
  r = feasibility_check(narrow, one_each(narrow), 1.0);
  CHECK_FALSE(r.feasible);
  CHECK(r.violated == FeasibilityResult::kFronthaulLimit);

  r = feasibility_check(scn, one_each(scn), 1.0);
  CHECK(r.feasible);
  CHECK(r.violated.empty());
}

TEST_CASE("the fronthaul check precedes the load iteration") {
  // Both constraints are violated; the budget one is reported since it does
  // not depend on the allocation at all.
  NetworkScenario scn = isolated_pairs();
  scn.bs[0].fronthaul_bits = 0.1;
  FeasibilityResult r = feasibility_check(scn, one_each(scn), 5.0);
  CHECK_FALSE(r.feasible);
  CHECK(r.violated == FeasibilityResult::kFronthaulLimit);
}

TEST_CASE("feasibility is monotone in the target level and in demand") {
  GeneratorConfig cfg;
  cfg.n_clusters = 1;
  cfg.bs_per_cluster = 2;
  cfg.ues_per_cluster = 3;
  for (uint64_t seed = 60; seed < 70; ++seed) {
    cfg.rng_seed = seed;
    NetworkScenario scn = generate(cfg);
    Association a = default_initial_association(scn);
    AllocationSolution sol = solve_optimal(scn, a, {});
    double eta = sol.common_eta();
    CHECK(feasibility_check(scn, a, eta * 0.99).feasible);
    CHECK_FALSE(feasibility_check(scn, a, eta * 1.01).feasible);

    // Halving every demand keeps the same target feasible.
    NetworkScenario lighter = scn;
    for (User& u : lighter.ues)
      u.traffic = TrafficTrace::constant(u.traffic.volume_bits() / 2.0, scn.period_s);
    CHECK(feasibility_check(lighter, a, eta * 0.99).feasible);
  }
}

TEST_CASE("exhaustive optimum dominates every enumerated association") {
  GeneratorConfig cfg;
  cfg.n_clusters = 1;
  cfg.bs_per_cluster = 2;
  cfg.ues_per_cluster = 2;
  cfg.rng_seed = 12;
  NetworkScenario scn = generate(cfg);
  GlobalOptimum best = global_optimum(scn);
  double best_sum = best.solution.sum_eta();
  int hits = 0;
  for (const Association& a : enumerate_associations(scn)) {
    double s = solve_optimal(scn, a, {}).sum_eta();
    CHECK(s <= best_sum + 1e-9);
    if (s >= best_sum - 1e-9) ++hits;
    if (a == best.assoc) CHECK(s == doctest::Approx(best_sum));
  }
  CHECK(hits >= 1);
}

TEST_CASE("relabeling BSs does not change the exhaustive optimum") {
  GeneratorConfig cfg;
  cfg.n_clusters = 1;
  cfg.bs_per_cluster = 3;
  cfg.ues_per_cluster = 2;
  cfg.rng_seed = 21;
  NetworkScenario scn = generate(cfg);
  NetworkScenario flipped = scn;
  std::swap(flipped.bs[0], flipped.bs[2]);
  CHECK(global_optimum(flipped).solution.sum_eta() ==
        doctest::Approx(global_optimum(scn).solution.sum_eta()).epsilon(1e-9));
}

TEST_CASE("truth table search finds witnesses and certifies their absence") {
  CnfFormula sat;
  sat.n_vars = 3;
  sat.clauses = {{1, -2, 3}, {-1, 2, -3}};
  std::optional<std::vector<bool>> w = find_satisfying_assignment(sat);
  REQUIRE(w.has_value());
  for (const std::array<int, 3>& cl : sat.clauses) {
    bool ok = false;
    for (int lit : cl) ok = ok || ((*w)[std::abs(lit) - 1] == (lit > 0));
    CHECK(ok);
  }
  CHECK(formula_satisfiable(sat));

  CnfFormula unsat;
  unsat.n_vars = 3;
  for (int bits = 0; bits < 8; ++bits)
    unsat.clauses.push_back({(bits & 1) ? 1 : -1, (bits & 2) ? 2 : -2,
                             (bits & 4) ? 3 : -3});
  CHECK_FALSE(find_satisfying_assignment(unsat).has_value());
  CHECK_FALSE(formula_satisfiable(unsat));
}

TEST_CASE("embedded formulas are feasible exactly on satisfying assignments") {
  CnfFormula f;
  f.n_vars = 3;
  f.clauses = {{1, 2, 3}, {-1, -2, 3}};
  SatInstance inst = build_sat_instance(f);
  for (int bits = 0; bits < 8; ++bits) {
    std::vector<bool> assignment(3);
    for (int v = 0; v < 3; ++v) assignment[v] = (bits >> v) & 1;
    bool satisfies = true;
    for (const std::array<int, 3>& cl : f.clauses) {
      bool ok = false;
      for (int lit : cl) ok = ok || (assignment[std::abs(lit) - 1] == (lit > 0));
      satisfies = satisfies && ok;
    }
    Association a = assignment_to_association(inst, assignment);
    CHECK(feasibility_check(inst.scenario, a, 1.0).feasible == satisfies);
  }
}

TEST_CASE("grid-and-bisect level search stays close to the solver") {
  NetworkScenario scn = isolated_pairs();
  CHECK(allocation_cross_check(scn, one_each(scn)) < 1e-6);

  scn.bs[0].fronthaul_bits = 1.0;
  scn.bs[1].fronthaul_bits = 1.0;
  CHECK(allocation_cross_check(scn, one_each(scn)) < 1e-6);
}
