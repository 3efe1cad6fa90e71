#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ordss/planner.hpp"
#include "ordss/ringsim.hpp"
#include "ordss/scheme.hpp"

namespace ordss {

// Scheme files: {"q", "n", "alpha", "m_size", "generator": [[row ints]]},
// entries being field values in [0, q).
nlohmann::json scheme_to_json(const Scheme& s);
Scheme scheme_from_json(const nlohmann::json& j);

// Plan files: {"kind": "reconstruct"|"repair", "index", "edges":
// [{"from", "to", "vectors": [[ints]]}], "total"}; "to": 0 is the user, and
// repair plans additionally carry "basis_change".
nlohmann::json plan_to_json(const ReconstructionPlan& plan);
nlohmann::json plan_to_json(const RepairPlan& plan);

// Bare matrix files: {"q", "matrix": [[row ints]]}.
nlohmann::json matrix_to_json(const ConstMatrixRef& m);
FpMatrix matrix_from_json(const nlohmann::json& j);

// Event files: [{"type": "request"|"fail"|"repair", "node": i}, ...].
std::vector<Event> events_from_json(const nlohmann::json& j);

// Canonical rendering used for every file this project writes: two-space
// indent, sorted keys (nlohmann's default), trailing newline. Re-serializing
// a parsed document is byte-identical.
std::string dump_json(const nlohmann::json& j);

}  // namespace ordss
