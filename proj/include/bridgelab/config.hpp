#pragma once

#include <map>
#include <string>

#include "bridgelab/gm.hpp"
#include "bridgelab/gsw.hpp"
#include "bridgelab/lwe.hpp"

namespace bridgelab {

// Preset table: preset id -> key/value strings. Text format:
//   [preset-id]
//   key = value
// with '#' comments.
using PresetTable = std::map<std::string, std::map<std::string, std::string>>;

PresetTable parse_presets(const std::string& text);
std::string presets_to_text(const PresetTable& table);

// Built-in parameter sets (lwe-toy, lwe-demo, lwe-add, lwe-n1q4,
// lwe-modswitch, lwe-modswitch-mid, gm-toy, gm-demo, gsw-toy, gsw-fche).
PresetTable builtin_presets();

// Overlays `overrides` on the builtin table (overrides win per key).
PresetTable merge_presets(PresetTable base, const PresetTable& overrides);

LweParams lwe_params_from(const std::map<std::string, std::string>& kv);
GmParams gm_params_from(const std::map<std::string, std::string>& kv);
GswParams gsw_params_from(const std::map<std::string, std::string>& kv);
u64 preset_u64(const std::map<std::string, std::string>& kv, const std::string& key);

} // namespace bridgelab
