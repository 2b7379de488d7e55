#include "bridgelab/registry.hpp"

namespace bridgelab {

BooleanCircuit xor_circuit() {
    BooleanCircuit c;
    c.inputs = 2;
    c.gates = {Gate{GateOp::Xor, 0, 1}};
    c.outputs = {2};
    return c;
}

BooleanCircuit and_circuit() {
    BooleanCircuit c;
    c.inputs = 2;
    c.gates = {Gate{GateOp::And, 0, 1}};
    c.outputs = {2};
    return c;
}

BooleanCircuit full_adder_circuit() {
    BooleanCircuit c;
    c.inputs = 3; // x, y, carry-in
    c.gates = {Gate{GateOp::Xor, 0, 1},  // w3 = x^y
               Gate{GateOp::Xor, 3, 2},  // w4 = sum
               Gate{GateOp::And, 0, 1},  // w5 = x&y
               Gate{GateOp::And, 2, 3},  // w6 = cin&(x^y)
               Gate{GateOp::Xor, 5, 6}}; // w7 = carry
    c.outputs = {4, 7};
    return c;
}

BooleanCircuit adder_sum_circuit() {
    BooleanCircuit c = full_adder_circuit();
    c.outputs = {4};
    return c;
}

Registry::Registry(PresetTable presets) : presets_(std::move(presets)) {}

const std::map<std::string, std::string>& Registry::preset(const std::string& id) const {
    auto it = presets_.find(id);
    require(it != presets_.end(), Errc::UnknownId, "unknown preset '" + id + "'");
    return it->second;
}

Scheme Registry::scheme(const std::string& id) const {
    if (id == "trivial") return make_trivial_fhe().base;
    if (id.rfind("graph:", 0) == 0) return graph_scheme(bridge(id.substr(6)));
    if (id.rfind("gsw", 0) == 0) return hom(id).base;
    const auto& kv = preset(id);
    const std::string type = kv.at("type");
    if (type == "lwe") return make_lwe_scheme(lwe_params_from(kv));
    if (type == "lwe-threshold") return make_lwe_threshold_scheme(lwe_params_from(kv));
    if (type == "gm") return make_gm_scheme(gm_params_from(kv));
    fail(Errc::UnknownId, "preset '" + id + "' is not a scheme");
}

HomScheme Registry::hom(const std::string& id) const {
    if (id == "trivial") return make_trivial_fhe();
    if (id.rfind("fche:", 0) == 0) return fche_transform(hom(id.substr(5))).hom;
    if (id.rfind("bootstrap:", 0) == 0) return bootstrap_wrap(hom(id.substr(10)));
    const auto& kv = preset(id);
    require(kv.at("type") == "gsw", Errc::UnknownId,
            "preset '" + id + "' is not a homomorphic backend");
    return make_gsw_scheme(gsw_params_from(kv));
}

Bridge Registry::bridge(const std::string& id, const std::string& preset_override) const {
    auto lwe_kv = [&](const char* fallback) {
        return lwe_params_from(preset(preset_override.empty() ? fallback : preset_override));
    };

    if (id == "identity") return identity_bridge(scheme("trivial"));
    if (id.rfind("identity:", 0) == 0) return identity_bridge(scheme(id.substr(9)));
    if (id == "gm-identity")
        return identity_bridge(
            scheme(preset_override.empty() ? "gm-toy" : preset_override));
    if (id == "lwe-additive") return lwe_additive_bridge(lwe_kv("lwe-add"));
    if (id == "lwe-additive-x2") return lwe_additive_pair_bridge(lwe_kv("lwe-add"));
    if (id == "lwe-additive-2q") {
        const auto& kv =
            preset(preset_override.empty() ? "lwe-modswitch-mid" : preset_override);
        return lwe_additive_bridge_threshold(lwe_params_from(kv));
    }
    if (id == "double-additive") {
        LweParams p = lwe_kv("lwe-toy");
        return compose(lwe_additive_pair_bridge(p), lwe_additive_bridge(p));
    }
    if (id == "modswitch") {
        const auto& kv = preset(preset_override.empty() ? "lwe-modswitch" : preset_override);
        return modswitch_bridge(static_cast<unsigned>(preset_u64(kv, "n")),
                                preset_u64(kv, "q"), preset_u64(kv, "Q"),
                                preset_u64(kv, "noise"));
    }
    if (id == "modswitch2") {
        const auto& kv =
            preset(preset_override.empty() ? "lwe-modswitch-mid" : preset_override);
        return modswitch_bridge(static_cast<unsigned>(preset_u64(kv, "n")),
                                preset_u64(kv, "q"), preset_u64(kv, "Q"),
                                preset_u64(kv, "noise"));
    }
    if (id == "halfkey-f" || id == "halfkey-g" || id == "halfkey-composed") {
        Scheme base = scheme(preset_override.empty() ? "lwe-toy" : preset_override);
        HalfkeyBridges hk = halfkey_bridges(base);
        if (id == "halfkey-f") return hk.f;
        if (id == "halfkey-g") return hk.g;
        Bridge composed = compose(hk.f, hk.g);
        composed.id = "halfkey-composed";
        return composed;
    }
    if (id.rfind("gentry:", 0) == 0) {
        // gentry:<inner>:<outer>[:ctbits][:shared]
        std::string rest = id.substr(7);
        std::vector<std::string> parts;
        std::size_t pos = 0;
        while (true) {
            std::size_t colon = rest.find(':', pos);
            parts.push_back(rest.substr(pos, colon - pos));
            if (colon == std::string::npos) break;
            pos = colon + 1;
        }
        require(parts.size() >= 2, Errc::UnknownId, "expected gentry:<inner>:<outer>");
        GentryBridgeSpec spec;
        spec.inner = scheme(parts[0]);
        spec.outer = hom(parts[1]);
        const std::string mt = spec.outer.base.plaintext.tag();
        spec.iota = [mt](const Value& m) { return Value::scalar(mt, m.word(0) & 1); };
        for (std::size_t i = 2; i < parts.size(); ++i) {
            if (parts[i] == "ctbits") spec.fold_ciphertext = false;
            else if (parts[i] == "shared") spec.key_mode = KeyMode::shared;
            else fail(Errc::UnknownId, "unknown gentry option '" + parts[i] + "'");
        }
        return gentry_bridge(spec);
    }
    if (id.rfind("circuit-", 0) == 0) {
        std::size_t colon = id.find(':');
        require(colon != std::string::npos, Errc::UnknownId,
                "expected circuit-<name>:<hom>");
        std::string name = id.substr(8, colon - 8);
        HomScheme h = hom(id.substr(colon + 1));
        if (name == "xor") return circuit_bridge(h, xor_circuit(), "xor");
        if (name == "and") return circuit_bridge(h, and_circuit(), "and");
        if (name == "addersum") return circuit_bridge(h, adder_sum_circuit(), "addersum");
        fail(Errc::UnknownId, "unknown circuit bridge '" + name + "'");
    }
    fail(Errc::UnknownId, "unknown bridge '" + id + "'");
}

Adversary Registry::adversary(const std::string& id) const {
    if (id == "random-guess") return random_guess_adversary();
    if (id == "plaintext-reader") return plaintext_reader_adversary();
    if (id == "omniscient") return omniscient_adversary();
    if (id == "reassembly") return halfkey_attacker(scheme("lwe-toy"));
    fail(Errc::UnknownId, "unknown adversary '" + id + "'");
}

namespace {

Bridge sampler_bridge(const Registry& reg) {
    // identity on the toy inner scheme composed with the recryption bridge
    Bridge f = reg.bridge("identity:lwe-n1q4");
    Bridge g = reg.bridge("gentry:lwe-n1q4:gsw-fche");
    return compose(f, g);
}

} // namespace

ValueSampler Registry::sampler(const std::string& id) const {
    if (id == "gentry-real") {
        auto dist = std::make_shared<PkDistribution>(
            zero_substituted_bridge_key(sampler_bridge(*this)));
        return [dist](Rng& rng) { return dist->real(rng); };
    }
    if (id == "gentry-zero") {
        auto dist = std::make_shared<PkDistribution>(
            zero_substituted_bridge_key(sampler_bridge(*this)));
        return [dist](Rng& rng) { return dist->zero_sub(rng); };
    }
    if (id == "uniform-bits") {
        return [](Rng& rng) {
            std::vector<u64> w(64);
            for (auto& x : w) x = static_cast<u64>(rng.bit());
            return Value::leaf("bits64", std::move(w));
        };
    }
    if (id == "const-zero") {
        return [](Rng&) { return Value::leaf("bits64", std::vector<u64>(64, 0)); };
    }
    fail(Errc::UnknownId, "unknown sampler '" + id + "'");
}

Distinguisher Registry::distinguisher(const std::string& id) const {
    if (id == "byte-parity") {
        return [](const Value& v) {
            auto w = v.flat_words();
            return w.empty() ? 0 : static_cast<int>((w[0] & 0xff) % 2);
        };
    }
    if (id == "first-bit") {
        return [](const Value& v) {
            auto w = v.flat_words();
            return w.empty() ? 0 : static_cast<int>(w[0] & 1);
        };
    }
    if (id == "bit-marginal") {
        return [](const Value& v) {
            auto w = v.flat_words();
            if (w.empty()) return 0;
            std::size_t odd = 0;
            for (u64 x : w) odd += x & 1;
            return odd * 2 > w.size() ? 1 : 0;
        };
    }
    fail(Errc::UnknownId, "unknown distinguisher '" + id + "'");
}

std::vector<std::string> Registry::scheme_ids() const {
    std::vector<std::string> ids = {"trivial"};
    for (const auto& [id, kv] : presets_) ids.push_back(id);
    return ids;
}

std::vector<std::string> Registry::hom_ids() const {
    std::vector<std::string> ids = {"trivial", "fche:trivial"};
    for (const auto& [id, kv] : presets_)
        if (kv.at("type") == "gsw") {
            ids.push_back(id);
            ids.push_back("fche:" + id);
            ids.push_back("bootstrap:" + id);
        }
    return ids;
}

std::vector<std::string> Registry::bridge_ids() const {
    return {"identity",         "identity:trivial",       "gm-identity",
            "lwe-additive",     "lwe-additive-x2",        "double-additive",
            "modswitch",        "modswitch2",             "halfkey-f",
            "halfkey-g",        "halfkey-composed",       "gentry:lwe-n1q4:trivial",
            "gentry:lwe-n1q4:gsw-fche",                   "gentry:lwe-n1q4:gsw-fche:ctbits",
            "circuit-xor:trivial", "circuit-and:trivial", "circuit-addersum:trivial",
            "circuit-xor:gsw-toy", "circuit-and:gsw-toy"};
}

std::vector<std::string> Registry::adversary_ids() const {
    return {"random-guess", "plaintext-reader", "omniscient", "reassembly"};
}

std::vector<std::string> Registry::sampler_ids() const {
    return {"gentry-real", "gentry-zero", "uniform-bits", "const-zero"};
}

std::vector<std::string> Registry::distinguisher_ids() const {
    return {"byte-parity", "first-bit", "bit-marginal"};
}

} // namespace bridgelab
