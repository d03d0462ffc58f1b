#pragma once

#include <string>

#include <json.hpp>

#include "antidist/linalg.hpp"
#include "antidist/states.hpp"
#include "antidist/unitary.hpp"

namespace antidist {

using Json = nlohmann::json;

// Matrix: {"rows": r, "cols": c, "data": [[[re,im], ...], ...]} (row major).
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

// State: {"dim": d, "amps": [[re,im], ...]}.
Json state_to_json(const PureState& s);
PureState state_from_json(const Json& j);

// Ensemble: {"priors": [...], "states": [state-or-matrix objects]}.
Json ensemble_to_json(const StateEnsemble& e);
StateEnsemble ensemble_from_json(const Json& j);

// Probe: {"kind": "single"|"entangled"|"maxent", "state": ..., "schmidt": [...],
//         "a_basis": matrix}.
Json probe_to_json(const ProbeSpec& p);
ProbeSpec probe_from_json(const Json& j);

Json povm_to_json(const Povm& p);
Json result_to_json(const AntidistResult& r);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace antidist
