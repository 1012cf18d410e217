// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>
#include <vector>

#include "types.hpp"

namespace cranopt {

// 3-CNF formula over variables 1..n_vars; a literal is +v or -v.
struct CnfFormula {
  int n_vars = 0;
  std::vector<std::array<int, 3>> clauses;

  int n_clauses() const { return static_cast<int>(clauses.size()); }
};

// Parses DIMACS CNF text ("p cnf <vars> <clauses>" header, 'c' comment lines,
// zero-terminated clauses). Every clause must hold exactly three distinct
// nonzero literals within range.
CnfFormula parse_dimacs(const std::string& text);

std::string to_dimacs(const CnfFormula& f);

// A formula embedded as a network: deciding whether some association meets
// every demand at full QoS is exactly deciding satisfiability. The instance
// keeps the entity maps so assignments and associations convert both ways.
struct SatInstance {
  NetworkScenario scenario;
  CnfFormula formula;
  int ue_anchor = 0;            // the UE whose BS saturates on double service
  std::vector<int> ue_var;      // UE of variable v at ue_var[v-1]
  std::vector<int> ue_clause;   // UE of clause c at ue_clause[c]
  int bs_anchor = 0;            // dedicated BS of ue_anchor
  std::vector<int> bs_pos;      // BS meaning "variable v false" (serves its UE)
  std::vector<int> bs_neg;      // BS meaning "variable v true"
  std::vector<int> bs_clause;   // dedicated BS of each clause UE
};

// Builds the embedding: one anchor UE/BS pair, one UE with a two-BS cluster
// per variable, one UE/BS pair per clause. Gains are chosen so that at unit
// demand a single-serving association is exactly at the load limit, serving a
// variable UE from both its BSs overloads the anchor BS, and a clause BS
// overloads when all three BSs of its clause's literals are active. Gains not
// named by the construction are negligible_gain (0 keeps them silent).
SatInstance build_sat_instance(const CnfFormula& f, double negligible_gain = 0.0);

// assignment[v-1] = true puts variable v's UE on bs_neg[v-1], false on
// bs_pos[v-1]; anchor and clause UEs take their dedicated BS.
Association assignment_to_association(const SatInstance& inst,
                                      const std::vector<bool>& assignment);

// Reads the assignment back out of an association (true iff bs_neg serves).
std::vector<bool> association_to_assignment(const SatInstance& inst,
                                            const Association& assoc);

}  // namespace cranopt
