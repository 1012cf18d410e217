/* SPDX-License-Identifier: Apache-2.0 */

/*
 * C interface to the cranopt solver library.
 *
 * Conventions:
 *  - Every function returns a cranopt_status; results come back through out
 *    parameters. On failure the out parameters are left untouched and
 *    cranopt_last_error() describes the problem for the calling thread.
 *  - Structured data crosses the boundary as JSON text. Returned strings are
 *    heap copies owned by the caller; release them with cranopt_string_free.
 *  - Handles are opaque; each *_free accepts NULL.
 */

#ifndef CRANOPT_H
#define CRANOPT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cranopt_status {
  CRANOPT_OK = 0,
  CRANOPT_ERR_INVALID_ARGUMENT = 1,
  CRANOPT_ERR_PARSE = 2,
  CRANOPT_ERR_INFEASIBLE = 3,
  CRANOPT_ERR_NO_CONVERGENCE = 4,
  CRANOPT_ERR_TOO_LARGE = 5,
  CRANOPT_ERR_INTERNAL = 6
} cranopt_status;

typedef struct cranopt_scenario cranopt_scenario;
typedef struct cranopt_association cranopt_association;
typedef struct cranopt_solution cranopt_solution;

/* Message of the calling thread's most recent failed call; "" after a
 * success. Valid until that thread's next library call. */
const char* cranopt_last_error(void);

const char* cranopt_version(void);

void cranopt_string_free(char* s);

/* ---- scenarios ---- */

cranopt_status cranopt_scenario_from_json(const char* json_text,
                                          cranopt_scenario** out);

cranopt_status cranopt_scenario_to_json(const cranopt_scenario* scn,
                                        char** out_json);

/* Random deployment. config_json keys (all optional): clusters,
 * cluster_radius_m, bs_per_cluster, ues_per_cluster, carrier_ghz,
 * ru_bandwidth_hz, rus_per_bs, noise_dbm_per_hz, tx_power_mw_per_ru,
 * fronthaul_gbps, shadowing_sigma_db, max_load, demand_bits, period_s, seed.
 * Unknown keys are rejected. NULL or "" means all defaults. */
cranopt_status cranopt_scenario_generate(const char* config_json,
                                         cranopt_scenario** out);

/* Structural validation report: JSON array of {code, message}, empty when the
 * scenario is well formed. */
cranopt_status cranopt_scenario_validate(const cranopt_scenario* scn,
                                         char** out_json);

void cranopt_scenario_free(cranopt_scenario* scn);

/* ---- associations ---- */

cranopt_status cranopt_association_from_json(const cranopt_scenario* scn,
                                             const char* json_text,
                                             cranopt_association** out);

cranopt_status cranopt_association_to_json(const cranopt_association* assoc,
                                           char** out_json);

/* Single-cell baseline: each UE on the strongest BS of its cluster. */
cranopt_status cranopt_association_best_single(const cranopt_scenario* scn,
                                               cranopt_association** out);

/* Saturated association: each UE served by every BS of its cluster. */
cranopt_status cranopt_association_full(const cranopt_scenario* scn,
                                        cranopt_association** out);

void cranopt_association_free(cranopt_association* assoc);

/* ---- solving ---- */

/* Optimal resource shares for a fixed association. config_json keys (all
 * optional): tolerance, max_iterations, initial_alpha. NULL/"" = defaults. */
cranopt_status cranopt_solve(const cranopt_scenario* scn,
                             const cranopt_association* assoc,
                             const char* config_json, cranopt_solution** out);

/* Greedy cell selection from `initial` (NULL = best-single baseline).
 * config_json additionally accepts resolve_each (default true). When
 * out_trace_jsonl is non-NULL it receives one JSON object per line per filter
 * decision. */
cranopt_status cranopt_select(const cranopt_scenario* scn,
                              const cranopt_association* initial,
                              const char* config_json,
                              cranopt_association** out_assoc,
                              cranopt_solution** out_solution,
                              char** out_trace_jsonl);

cranopt_status cranopt_solution_to_json(const cranopt_scenario* scn,
                                        const cranopt_solution* sol,
                                        char** out_json);

void cranopt_solution_free(cranopt_solution* sol);

/* ---- 3-CNF embeddings ---- */

/* Builds the network whose feasibility encodes the formula. Metadata maps
 * variables and clauses to BS/UE indices. */
cranopt_status cranopt_reduce_dimacs(const char* dimacs_text,
                                     cranopt_scenario** out_scenario,
                                     char** out_metadata_json);

/* Exhaustively decides the formula both ways, as a truth table and as an
 * association search on the embedded network. Result:
 * {"satisfiable": bool, "feasible": bool, "agree": bool,
 *  "assignment": [bool...]|null, "witness_association": {...}|null}. */
cranopt_status cranopt_certify_dimacs(const char* dimacs_text, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* CRANOPT_H */
