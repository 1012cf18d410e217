// SPDX-License-Identifier: Apache-2.0
//
// Exercises the shared library through its C surface only, the way an
// external binding would.

#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "cranopt.h"

using nlohmann::json;

namespace {

struct Str {
  char* p = nullptr;
  ~Str() { cranopt_string_free(p); }
  std::string get() const { return p ? p : ""; }
};

struct Scn {
  cranopt_scenario* p = nullptr;
  ~Scn() { cranopt_scenario_free(p); }
};

struct Assoc {
  cranopt_association* p = nullptr;
  ~Assoc() { cranopt_association_free(p); }
};

struct Sol {
  cranopt_solution* p = nullptr;
  ~Sol() { cranopt_solution_free(p); }
};

const char* kTinyConfig =
    "{\"clusters\":1,\"bs_per_cluster\":3,\"ues_per_cluster\":5,\"seed\":7}";

}  // namespace

TEST_CASE("library identifies itself and frees NULL quietly") {
  CHECK(std::strlen(cranopt_version()) > 0);
  cranopt_string_free(nullptr);
  cranopt_scenario_free(nullptr);
  cranopt_association_free(nullptr);
  cranopt_solution_free(nullptr);
}

TEST_CASE("generation round trips through JSON text") {
  Scn scn;
  REQUIRE(cranopt_scenario_generate(kTinyConfig, &scn.p) == CRANOPT_OK);
  CHECK(std::string(cranopt_last_error()).empty());

  Str text;
  REQUIRE(cranopt_scenario_to_json(scn.p, &text.p) == CRANOPT_OK);
  json j = json::parse(text.get());
  CHECK(j.at("bs").size() == 3);
  CHECK(j.at("ues").size() == 5);

  Scn back;
  REQUIRE(cranopt_scenario_from_json(text.get().c_str(), &back.p) == CRANOPT_OK);
  Str text2;
  REQUIRE(cranopt_scenario_to_json(back.p, &text2.p) == CRANOPT_OK);
  CHECK(text.get() == text2.get());
}

TEST_CASE("generator config errors are reported, not applied") {
  Scn scn;
  CHECK(cranopt_scenario_generate("{\"bogus\":1}", &scn.p) ==
        CRANOPT_ERR_INVALID_ARGUMENT);
  CHECK(scn.p == nullptr);
  CHECK_FALSE(std::string(cranopt_last_error()).empty());

  CHECK(cranopt_scenario_generate("not json", &scn.p) == CRANOPT_ERR_PARSE);
  CHECK(cranopt_scenario_generate("{\"clusters\":0}", &scn.p) ==
        CRANOPT_ERR_INVALID_ARGUMENT);
  CHECK(cranopt_scenario_generate(nullptr, &scn.p) == CRANOPT_OK);  // defaults
}

TEST_CASE("null out parameters are invalid arguments") {
  CHECK(cranopt_scenario_generate(kTinyConfig, nullptr) ==
        CRANOPT_ERR_INVALID_ARGUMENT);
  CHECK(cranopt_scenario_to_json(nullptr, nullptr) == CRANOPT_ERR_INVALID_ARGUMENT);
  CHECK(cranopt_solve(nullptr, nullptr, nullptr, nullptr) ==
        CRANOPT_ERR_INVALID_ARGUMENT);
}

TEST_CASE("validation reports structural problems as JSON") {
  Scn ok;
  REQUIRE(cranopt_scenario_generate(kTinyConfig, &ok.p) == CRANOPT_OK);
  Str report;
  REQUIRE(cranopt_scenario_validate(ok.p, &report.p) == CRANOPT_OK);
  CHECK(json::parse(report.get()).empty());

  // M = 0 parses fine but fails validation.
  Str text;
  REQUIRE(cranopt_scenario_to_json(ok.p, &text.p) == CRANOPT_OK);
  json j = json::parse(text.get());
  j["M"] = 0;
  Scn broken;
  REQUIRE(cranopt_scenario_from_json(j.dump().c_str(), &broken.p) == CRANOPT_OK);
  Str report2;
  REQUIRE(cranopt_scenario_validate(broken.p, &report2.p) == CRANOPT_OK);
  json violations = json::parse(report2.get());
  REQUIRE_FALSE(violations.empty());
  CHECK(violations[0].contains("code"));
  CHECK(violations[0].contains("message"));
}

TEST_CASE("built-in associations and the JSON path agree") {
  Scn scn;
  REQUIRE(cranopt_scenario_generate(kTinyConfig, &scn.p) == CRANOPT_OK);

  Assoc best;
  REQUIRE(cranopt_association_best_single(scn.p, &best.p) == CRANOPT_OK);
  Str best_text;
  REQUIRE(cranopt_association_to_json(best.p, &best_text.p) == CRANOPT_OK);
  json jb = json::parse(best_text.get());
  REQUIRE(jb.at("serving_sets").size() == 5);
  for (const json& s : jb.at("serving_sets")) CHECK(s.size() == 1);

  Assoc full;
  REQUIRE(cranopt_association_full(scn.p, &full.p) == CRANOPT_OK);
  Str full_text;
  REQUIRE(cranopt_association_to_json(full.p, &full_text.p) == CRANOPT_OK);
  for (const json& s : json::parse(full_text.get()).at("serving_sets"))
    CHECK(s == json({0, 1, 2}));

  Assoc again;
  REQUIRE(cranopt_association_from_json(scn.p, best_text.get().c_str(), &again.p) ==
          CRANOPT_OK);
  Str again_text;
  REQUIRE(cranopt_association_to_json(again.p, &again_text.p) == CRANOPT_OK);
  CHECK(again_text.get() == best_text.get());

  Assoc bad;
  CHECK(cranopt_association_from_json(scn.p, "{\"serving_sets\":[[9]]}", &bad.p) ==
        CRANOPT_ERR_INVALID_ARGUMENT);
}

TEST_CASE("solving produces a full report and sane levels") {
  Scn scn;
  REQUIRE(cranopt_scenario_generate(kTinyConfig, &scn.p) == CRANOPT_OK);
  Assoc best;
  REQUIRE(cranopt_association_best_single(scn.p, &best.p) == CRANOPT_OK);

  Sol sol;
  REQUIRE(cranopt_solve(scn.p, best.p, "{\"tolerance\":1e-10}", &sol.p) == CRANOPT_OK);
  Str text;
  REQUIRE(cranopt_solution_to_json(scn.p, sol.p, &text.p) == CRANOPT_OK);
  json j = json::parse(text.get());
  CHECK(j.at("sum_eta").get<double>() > 0.0);
  CHECK(j.at("eta").size() == 5);
  CHECK(j.at("alpha_star").size() == 5);
  CHECK(j.at("loads").size() == 3);
  CHECK(j.at("report").at("load_iterations").get<int>() > 0);

  Sol bad;
  CHECK(cranopt_solve(scn.p, best.p, "{\"junk\":1}", &bad.p) ==
        CRANOPT_ERR_INVALID_ARGUMENT);
  CHECK(cranopt_solve(scn.p, best.p, "{\"max_iterations\":1}", &bad.p) ==
        CRANOPT_ERR_NO_CONVERGENCE);
}

TEST_CASE("an unservable UE surfaces as infeasibility") {
  Scn scn;
  REQUIRE(cranopt_scenario_generate(kTinyConfig, &scn.p) == CRANOPT_OK);
  Assoc holes;
  REQUIRE(cranopt_association_from_json(
              scn.p, "{\"serving_sets\":[[],[0],[0],[0],[0]]}", &holes.p) ==
          CRANOPT_OK);
  Sol sol;
  CHECK(cranopt_solve(scn.p, holes.p, nullptr, &sol.p) == CRANOPT_ERR_INFEASIBLE);
  CHECK(sol.p == nullptr);
}

TEST_CASE("selection beats or matches its starting point") {
  Scn scn;
  REQUIRE(cranopt_scenario_generate(kTinyConfig, &scn.p) == CRANOPT_OK);
  Assoc best;
  REQUIRE(cranopt_association_best_single(scn.p, &best.p) == CRANOPT_OK);
  Sol before;
  REQUIRE(cranopt_solve(scn.p, best.p, nullptr, &before.p) == CRANOPT_OK);
  Str before_text;
  REQUIRE(cranopt_solution_to_json(scn.p, before.p, &before_text.p) == CRANOPT_OK);
  double sum_before = json::parse(before_text.get()).at("sum_eta").get<double>();

  Assoc chosen;
  Sol after;
  Str trace;
  REQUIRE(cranopt_select(scn.p, nullptr, nullptr, &chosen.p, &after.p, &trace.p) ==
          CRANOPT_OK);
  Str after_text;
  REQUIRE(cranopt_solution_to_json(scn.p, after.p, &after_text.p) == CRANOPT_OK);
  CHECK(json::parse(after_text.get()).at("sum_eta").get<double>() >= sum_before);

  // The trace is one JSON object per evaluation: 5 UEs x 3 BSs.
  int lines = 0;
  std::istringstream in(trace.get());
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json entry = json::parse(line);
    CHECK(entry.contains("ue"));
    CHECK(entry.contains("accepted"));
    ++lines;
  }
  CHECK(lines == 15);
}

TEST_CASE("embedding and certification agree with each other") {
  const char* sat = "p cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n";
  Scn scn;
  Str meta;
  REQUIRE(cranopt_reduce_dimacs(sat, &scn.p, &meta.p) == CRANOPT_OK);
  json m = json::parse(meta.get());
  CHECK(m.at("n_vars") == 3);
  CHECK(m.at("n_clauses") == 2);
  Str text;
  REQUIRE(cranopt_scenario_to_json(scn.p, &text.p) == CRANOPT_OK);
  CHECK(json::parse(text.get()).at("bs").size() == 9);

  Str verdict;
  REQUIRE(cranopt_certify_dimacs(sat, &verdict.p) == CRANOPT_OK);
  json v = json::parse(verdict.get());
  CHECK(v.at("satisfiable") == true);
  CHECK(v.at("feasible") == true);
  CHECK(v.at("agree") == true);
  CHECK(v.at("assignment").is_array());
  CHECK(v.at("witness_association").is_object());

  std::string unsat = "p cnf 3 8\n";
  for (int bits = 0; bits < 8; ++bits)
    unsat += std::to_string((bits & 1) ? 1 : -1) + " " +
             std::to_string((bits & 2) ? 2 : -2) + " " +
             std::to_string((bits & 4) ? 3 : -3) + " 0\n";
  Str verdict2;
  REQUIRE(cranopt_certify_dimacs(unsat.c_str(), &verdict2.p) == CRANOPT_OK);
  json v2 = json::parse(verdict2.get());
  CHECK(v2.at("satisfiable") == false);
  CHECK(v2.at("feasible") == false);
  CHECK(v2.at("agree") == true);
  CHECK(v2.at("assignment").is_null());

  Str none;
  CHECK(cranopt_reduce_dimacs("p cnf 1 1\n1 0\n", &scn.p, &none.p) ==
        CRANOPT_ERR_PARSE);
}
