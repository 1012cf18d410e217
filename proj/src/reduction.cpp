// SPDX-License-Identifier: Apache-2.0

#include "reduction.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace cranopt {

namespace {

void check_formula(const CnfFormula& f) {
  if (f.n_vars < 0)
    throw Error(ErrorCode::invalid_formula, "negative variable count");
  for (const std::array<int, 3>& cl : f.clauses) {
    for (int lit : cl) {
      if (lit == 0)
        throw Error(ErrorCode::invalid_formula, "zero literal inside clause");
      if (std::abs(lit) > f.n_vars)
        throw Error(ErrorCode::invalid_formula,
                    "literal " + std::to_string(lit) + " out of range");
    }
    if (cl[0] == cl[1] || cl[0] == cl[2] || cl[1] == cl[2])
      throw Error(ErrorCode::invalid_formula,
                  "clause literals must be distinct");
  }
}

}  // namespace

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  CnfFormula f;
  int declared_clauses = -1;
  std::vector<int> pending;

  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      if (!(ls >> p >> fmt >> f.n_vars >> declared_clauses) || fmt != "cnf")
        throw Error(ErrorCode::parse_error, "malformed DIMACS problem line");
      if (f.n_vars < 0 || declared_clauses < 0)
        throw Error(ErrorCode::parse_error, "negative counts in problem line");
      continue;
    }
    if (declared_clauses < 0)
      throw Error(ErrorCode::parse_error, "clause data before problem line");
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        if (pending.size() != 3)
          throw Error(ErrorCode::invalid_formula,
                      "clause must hold exactly three literals");
        f.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
      } else {
        pending.push_back(lit);
      }
    }
    if (!ls.eof())
      throw Error(ErrorCode::parse_error, "non-integer token in clause data");
  }
  if (declared_clauses < 0)
    throw Error(ErrorCode::parse_error, "missing DIMACS problem line");
  if (!pending.empty())
    throw Error(ErrorCode::parse_error, "unterminated clause at end of input");
  if (f.n_clauses() != declared_clauses)
    throw Error(ErrorCode::parse_error,
                "problem line declares " + std::to_string(declared_clauses) +
                    " clauses, found " + std::to_string(f.n_clauses()));
  check_formula(f);
  return f;
}

std::string to_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.n_vars << " " << f.n_clauses() << "\n";
  for (const std::array<int, 3>& cl : f.clauses)
    out << cl[0] << " " << cl[1] << " " << cl[2] << " 0\n";
  return out.str();
}

SatInstance build_sat_instance(const CnfFormula& f, double negligible_gain) {
  check_formula(f);
  if (!(negligible_gain >= 0.0))
    throw Error(ErrorCode::invalid_argument, "negligible gain must be >= 0");

  const int n1 = f.n_vars;
  const int n2 = f.n_clauses();
  SatInstance inst;
  inst.formula = f;

  // UEs: anchor, then one per variable, then one per clause.
  inst.ue_anchor = 0;
  for (int v = 1; v <= n1; ++v) inst.ue_var.push_back(v);
  for (int c = 0; c < n2; ++c) inst.ue_clause.push_back(n1 + 1 + c);

  // BSs: the variable pairs, then the anchor BS, then one per clause.
  for (int v = 1; v <= n1; ++v) inst.bs_pos.push_back(v - 1);
  for (int v = 1; v <= n1; ++v) inst.bs_neg.push_back(n1 + v - 1);
  inst.bs_anchor = 2 * n1;
  for (int c = 0; c < n2; ++c) inst.bs_clause.push_back(2 * n1 + 1 + c);

  NetworkScenario& scn = inst.scenario;
  const int num_bs = 2 * n1 + n2 + 1;
  const int num_ues = n1 + n2 + 1;
  scn.M = 1;
  scn.B_hz = 1.0;
  scn.max_load = 1.0;
  scn.period_s = 1.0;
  scn.noise_w = 1.0;

  // Clusters: one per variable (its BS pair), one for the anchor, one per
  // clause.
  for (int c = 0; c < n1 + 1 + n2; ++c) scn.clusters.push_back(c);
  auto var_cluster = [n1](int v) { return v - 1; };
  const int anchor_cluster = n1;
  auto clause_cluster = [n1](int c) { return n1 + 1 + c; };

  const double fronthaul_bits = 10.0 * num_ues;
  scn.bs.resize(num_bs);
  for (int v = 1; v <= n1; ++v) {
    scn.bs[inst.bs_pos[v - 1]].cluster = var_cluster(v);
    scn.bs[inst.bs_neg[v - 1]].cluster = var_cluster(v);
  }
  scn.bs[inst.bs_anchor].cluster = anchor_cluster;
  for (int c = 0; c < n2; ++c) scn.bs[inst.bs_clause[c]].cluster = clause_cluster(c);
  for (int i = 0; i < num_bs; ++i) {
    scn.bs[i].pos = {static_cast<double>(i), 0.0};
    scn.bs[i].power_per_ru_w = 1.0;
    scn.bs[i].fronthaul_bits = fronthaul_bits;
    scn.bs[i].gains.assign(num_ues, EffectiveGain::scalar(negligible_gain));
  }
  scn.bs[inst.bs_anchor].power_per_ru_w = n1 + 1.0;

  scn.ues.resize(num_ues);
  scn.ues[inst.ue_anchor].cluster = anchor_cluster;
  for (int v = 1; v <= n1; ++v) scn.ues[inst.ue_var[v - 1]].cluster = var_cluster(v);
  for (int c = 0; c < n2; ++c) scn.ues[inst.ue_clause[c]].cluster = clause_cluster(c);
  for (int j = 0; j < num_ues; ++j) {
    scn.ues[j].pos = {static_cast<double>(j), 1.0};
    scn.ues[j].traffic = TrafficTrace::constant(1.0, 1.0);
  }

  // Variable UE v hears its two BSs on orthogonal unit coefficients, so joint
  // service adds powers without coherent gain.
  for (int v = 1; v <= n1; ++v) {
    scn.bs[inst.bs_pos[v - 1]].gains[inst.ue_var[v - 1]] = EffectiveGain::scalar(1.0);
    scn.bs[inst.bs_neg[v - 1]].gains[inst.ue_var[v - 1]] =
        EffectiveGain::complex({0.0, 1.0});
  }
  // The anchor UE hears its own BS and every variable BS at unit gain; its BS
  // has just enough power to carry the interference of one active BS per
  // variable, so a doubly served variable pushes it past the load limit.
  scn.bs[inst.bs_anchor].gains[inst.ue_anchor] = EffectiveGain::scalar(1.0);
  for (int v = 1; v <= n1; ++v) {
    scn.bs[inst.bs_pos[v - 1]].gains[inst.ue_anchor] = EffectiveGain::scalar(1.0);
    scn.bs[inst.bs_neg[v - 1]].gains[inst.ue_anchor] = EffectiveGain::scalar(1.0);
  }
  // Clause UE c hears the BS of each of its literals at unit gain and its own
  // BS at received power 3: with at most two literal BSs active it stays
  // exactly within the load limit, with all three it cannot be served.
  for (int c = 0; c < n2; ++c) {
    for (int lit : f.clauses[c]) {
      int v = std::abs(lit);
      int cell = lit > 0 ? inst.bs_pos[v - 1] : inst.bs_neg[v - 1];
      scn.bs[cell].gains[inst.ue_clause[c]] = EffectiveGain::scalar(1.0);
    }
    scn.bs[inst.bs_clause[c]].gains[inst.ue_clause[c]] =
        EffectiveGain::scalar(std::sqrt(3.0));
  }

  return inst;
}

Association assignment_to_association(const SatInstance& inst,
                                      const std::vector<bool>& assignment) {
  const int n1 = inst.formula.n_vars;
  if (static_cast<int>(assignment.size()) != n1)
    throw Error(ErrorCode::invalid_argument, "assignment length mismatch");
  std::vector<std::vector<int>> sets(inst.scenario.num_ues());
  sets[inst.ue_anchor] = {inst.bs_anchor};
  for (int v = 1; v <= n1; ++v)
    sets[inst.ue_var[v - 1]] = {assignment[v - 1] ? inst.bs_neg[v - 1]
                                                  : inst.bs_pos[v - 1]};
  for (size_t c = 0; c < inst.ue_clause.size(); ++c)
    sets[inst.ue_clause[c]] = {inst.bs_clause[c]};
  return Association::make(inst.scenario, sets);
}

std::vector<bool> association_to_assignment(const SatInstance& inst,
                                            const Association& assoc) {
  std::vector<bool> assignment(inst.formula.n_vars);
  for (int v = 1; v <= inst.formula.n_vars; ++v)
    assignment[v - 1] = assoc.serves(inst.bs_neg[v - 1], inst.ue_var[v - 1]);
  return assignment;
}

}  // namespace cranopt
