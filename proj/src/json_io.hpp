// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>

#include "allocation.hpp"
#include "reduction.hpp"
#include "selection.hpp"
#include "types.hpp"

namespace cranopt {

// JSON forms of the document types that cross the tool boundary. Keys are
// emitted in sorted order (nlohmann's default map), so a given value always
// serializes to the same bytes.

nlohmann::json scenario_to_json(const NetworkScenario& scn);
NetworkScenario scenario_from_json(const nlohmann::json& j);

nlohmann::json association_to_json(const Association& assoc);
Association association_from_json(const NetworkScenario& scn, const nlohmann::json& j);

// Full allocation report: allocations, QoS, per-BS usage, iteration counts.
// Infinite values (unbounded fronthaul) serialize as null.
nlohmann::json solution_to_json(const NetworkScenario& scn, const AllocationSolution& sol);

nlohmann::json trace_entry_to_json(const TraceEntry& t);

// Entity maps of a formula embedding; enough to reconstruct the literal <->
// BS correspondence without the builder.
nlohmann::json sat_metadata_to_json(const SatInstance& inst);

}  // namespace cranopt
