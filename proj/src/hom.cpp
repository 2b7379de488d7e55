#include "bridgelab/hom.hpp"

namespace bridgelab {

Value hom_eval(const HomScheme& h, const Value& evk, const BooleanCircuit& c,
               std::span<const Value> inputs, Rng& rng) {
    require(inputs.size() == c.inputs, Errc::ArityMismatch,
            "eval: circuit arity " + std::to_string(c.inputs) + ", got " +
                std::to_string(inputs.size()) + " ciphertexts");
    return h.eval(evk, c, inputs, rng);
}

bool compactness_check(const HomScheme& h, std::span<const BooleanCircuit> circuits,
                       u64 seed) {
    Rng rng = Rng::derive(seed, {0});
    HomKeys keys = h.keygen(SecurityParameter{}, rng);
    const std::string mtag = h.base.plaintext.tag();
    for (const BooleanCircuit& c : circuits) {
        std::vector<Value> inputs;
        inputs.reserve(c.inputs);
        for (std::uint32_t i = 0; i < c.inputs; ++i) {
            Value m = Value::scalar(mtag, static_cast<u64>(rng.bit()));
            inputs.push_back(h.base.encrypt(keys.pk, m, rng));
        }
        Value out = hom_eval(h, keys.evk, c, inputs, rng);
        // multi-output circuits yield one ciphertext per declared output; a
        // single-output circuit is measured as one object
        std::vector<Value> outs = c.output_count() == 1
                                      ? std::vector<Value>{out}
                                      : out.parts();
        for (const Value& o : outs)
            if (h.ct_serialized_bits(o) > h.compact_bound_bits) return false;
    }
    return true;
}

HomScheme make_trivial_fhe() {
    const std::string name = "trivial";
    const std::string mt = name + "/m";
    const std::string ct = name + "/ct";
    const std::string skt = name + "/sk";

    Scheme base;
    base.name = name;
    base.plaintext = Space::residues(mt, 2);
    base.ciphertext = Space::residues(ct, 2);
    base.symmetric = false;
    base.keygen = [skt](const SecurityParameter&, Rng& rng) {
        // Nominal one-bit key; encryption and decryption ignore it.
        return KeyPair{Value::scalar(skt, static_cast<u64>(rng.bit())),
                       Value::leaf("trivial/pk", {})};
    };
    base.encrypt = [mt, ct](const Value&, const Value& m, Rng&) {
        check_tag(m, mt, "trivial encrypt");
        return Value::scalar(ct, m.word(0) & 1);
    };
    base.decrypt = [mt, ct](const Value&, const Value& c) {
        check_tag(c, ct, "trivial decrypt");
        return Value::scalar(mt, c.word(0) & 1);
    };
    base.sk_bits = 1;
    base.sk_to_bits = [](const Value& sk) { return std::vector<u8>{static_cast<u8>(sk.word(0) & 1)}; };
    base.sk_from_bits = [skt](const std::vector<u8>& bits) {
        return Value::scalar(skt, bits.at(0) & 1);
    };
    base.ct_bits = 1;
    base.ct_to_bits = [](const Value& c) { return std::vector<u8>{static_cast<u8>(c.word(0) & 1)}; };
    base.ct_from_bits = [ct](const std::vector<u8>& bits) {
        return Value::scalar(ct, bits.at(0) & 1);
    };
    base.sk_space = Space::residues(skt, 2);
    base.pk_of_sk = [](const Value&) { return Value::leaf("trivial/pk", {}); };

    HomScheme h;
    h.base = base;
    h.keygen = [base](const SecurityParameter& lambda, Rng& rng) {
        KeyPair kp = base.keygen(lambda, rng);
        return HomKeys{kp.sk, kp.pk, Value::none()};
    };
    h.eval = [ct](const Value&, const BooleanCircuit& c, std::span<const Value> inputs,
                  Rng&) {
        std::vector<u8> bits;
        bits.reserve(inputs.size());
        for (const Value& v : inputs) {
            check_tag(v, ct, "trivial eval");
            bits.push_back(static_cast<u8>(v.word(0) & 1));
        }
        std::vector<u8> out = eval_boolean(c, bits);
        if (out.size() == 1) return Value::scalar(ct, out[0]);
        std::vector<Value> parts;
        parts.reserve(out.size());
        for (u8 b : out) parts.push_back(Value::scalar(ct, b));
        return Value::tuple(ct + "^out", std::move(parts));
    };
    h.eval_ex = [h0 = h.eval](const Value& evk, const BooleanCircuit& c,
                              std::span<const Value> inputs, std::span<const u8>, Rng& rng,
                              u64* cert) {
        if (cert) *cert = 0;
        return h0(evk, c, inputs, rng);
    };
    h.trivial_encrypt = [ct](int bit) { return Value::scalar(ct, static_cast<u64>(bit & 1)); };
    h.evk_of = [](const Value&, const Value&, Rng&) { return Value::none(); };
    h.admit = nullptr;
    h.measure_noise = [](const Value&, const Value&) { return u64{0}; };
    h.evaluable.all = true;
    h.compact_bound_bits = 1;
    h.ct_serialized_bits = [](const Value&) { return std::size_t{1}; };
    return h;
}

} // namespace bridgelab
