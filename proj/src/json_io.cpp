#include "bridgelab/json_io.hpp"

namespace bridgelab {

json value_to_json(const Value& v) {
    json j = json::array();
    if (v.is_leaf()) {
        for (u64 w : v.words()) j.push_back(w);
    } else {
        for (const Value& p : v.parts()) j.push_back(value_to_json(p));
    }
    return j;
}

Value value_from_json(const json& j, const std::string& tag) {
    require(j.is_array(), Errc::ParseError, "value must be an array");
    if (!j.empty() && j[0].is_array()) {
        std::vector<Value> parts;
        parts.reserve(j.size());
        for (const auto& p : j) parts.push_back(value_from_json(p, tag + "/part"));
        return Value::tuple(tag, std::move(parts));
    }
    std::vector<u64> words;
    words.reserve(j.size());
    for (const auto& w : j) words.push_back(w.get<u64>());
    return Value::leaf(tag, std::move(words));
}

json game_report_json(const GameReport& r) {
    json j;
    j["game"] = r.game;
    j["participants"] = r.participants;
    j["trials"] = r.trials;
    j["wins"] = r.wins;
    j["advantage"] = r.advantage;
    j["ci"] = r.ci_halfwidth;
    j["delta"] = r.delta;
    j["seed"] = r.seed;
    json flags = json::object();
    for (const auto& [k, v] : r.flags) flags[k] = v;
    j["flags"] = flags;
    return j;
}

json completeness_json(const std::string& bridge_id, const CompletenessReport& rep) {
    json j;
    j["bridge"] = bridge_id;
    j["mode"] = rep.mode;
    j["checked"] = rep.checked;
    j["complete"] = rep.complete;
    j["witness"] = rep.witness ? value_to_json(*rep.witness) : json(nullptr);
    return j;
}

json correctness_json(const std::string& id, std::uint64_t trials, double failure_rate,
                      std::uint64_t seed) {
    json j;
    j["bridge"] = id;
    j["trials"] = trials;
    j["failure_rate"] = failure_rate;
    j["seed"] = seed;
    return j;
}

} // namespace bridgelab
