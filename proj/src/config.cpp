#include "bridgelab/config.hpp"

#include <sstream>

namespace bridgelab {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace

PresetTable parse_presets(const std::string& text) {
    PresetTable table;
    std::istringstream is(text);
    std::string line, section;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[') {
            require(t.back() == ']', Errc::ParseError,
                    "line " + std::to_string(lineno) + ": unterminated section");
            section = trim(t.substr(1, t.size() - 2));
            require(!section.empty(), Errc::ParseError,
                    "line " + std::to_string(lineno) + ": empty section name");
            table[section];
            continue;
        }
        std::size_t eq = t.find('=');
        require(eq != std::string::npos && !section.empty(), Errc::ParseError,
                "line " + std::to_string(lineno) + ": expected 'key = value' in a section");
        table[section][trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
    }
    return table;
}

std::string presets_to_text(const PresetTable& table) {
    std::ostringstream os;
    for (const auto& [id, kv] : table) {
        os << "[" << id << "]\n";
        for (const auto& [k, v] : kv) os << k << " = " << v << "\n";
        os << "\n";
    }
    return os.str();
}

PresetTable builtin_presets() {
    return parse_presets(R"(
# shipped toy parameter sets (insecure by design; see README)

[lwe-toy]
type = lwe
n = 2
q = 16
noise = 1

[lwe-demo]
type = lwe
n = 4
q = 64
noise = 3

[lwe-add]
type = lwe
n = 2
q = 32
noise = 1

[lwe-n1q4]
type = lwe
n = 1
q = 4
noise = 0

[lwe-modswitch]
type = lwe-threshold
n = 1
q = 6
Q = 18
noise = 1

[lwe-modswitch-mid]
type = lwe-threshold
n = 1
q = 18
Q = 54
noise = 1

[gm-toy]
type = gm
p = 3
qp = 7

[gm-demo]
type = gm
p = 103
qp = 107

[gsw-toy]
type = gsw
n = 1
logq = 16
noise = 1
depth = 2

[gsw-fche]
type = gsw
n = 2
logq = 60
noise = 1
depth = 6
)");
}

PresetTable merge_presets(PresetTable base, const PresetTable& overrides) {
    for (const auto& [id, kv] : overrides)
        for (const auto& [k, v] : kv) base[id][k] = v;
    return base;
}

u64 preset_u64(const std::map<std::string, std::string>& kv, const std::string& key) {
    auto it = kv.find(key);
    require(it != kv.end(), Errc::ParseError, "missing preset key '" + key + "'");
    return std::stoull(it->second);
}

LweParams lwe_params_from(const std::map<std::string, std::string>& kv) {
    LweParams p;
    p.n = static_cast<unsigned>(preset_u64(kv, "n"));
    p.q = preset_u64(kv, "q");
    p.noise_bound = preset_u64(kv, "noise");
    return p;
}

GmParams gm_params_from(const std::map<std::string, std::string>& kv) {
    GmParams p;
    p.p = preset_u64(kv, "p");
    p.q_prime = preset_u64(kv, "qp");
    return p;
}

GswParams gsw_params_from(const std::map<std::string, std::string>& kv) {
    GswParams p;
    p.n = static_cast<unsigned>(preset_u64(kv, "n"));
    p.log2q = static_cast<unsigned>(preset_u64(kv, "logq"));
    p.noise = preset_u64(kv, "noise");
    p.depth = static_cast<unsigned>(preset_u64(kv, "depth"));
    return p;
}

} // namespace bridgelab
