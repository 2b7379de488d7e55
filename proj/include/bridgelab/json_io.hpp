#pragma once

#include <nlohmann/json.hpp>

#include "bridgelab/bridge.hpp"
#include "bridgelab/game.hpp"

namespace bridgelab {

using json = nlohmann::ordered_json;

// Canonical serialization: leaves become arrays of base-10 integers, tuples
// become nested arrays. Tags are carried out of band.
json value_to_json(const Value& v);
Value value_from_json(const json& j, const std::string& tag);

// Stable field order for diffing: game, participants, trials, wins,
// advantage, ci, delta, seed, flags.
json game_report_json(const GameReport& r);

json completeness_json(const std::string& bridge_id, const CompletenessReport& rep);
json correctness_json(const std::string& id, std::uint64_t trials, double failure_rate,
                      std::uint64_t seed);

} // namespace bridgelab
