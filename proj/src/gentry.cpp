#include "bridgelab/gentry.hpp"

namespace bridgelab {

namespace {

std::function<u8(const Value&)> iota_as_bit(const std::function<Value(const Value&)>& iota) {
    return [iota](const Value& m) { return static_cast<u8>(iota(m).word(0) & 1); };
}

Value encrypt_bits(const Scheme& scheme, const Value& pk, std::span<const u8> bits,
                   const std::string& tag, Rng& rng) {
    std::vector<Value> encs;
    encs.reserve(bits.size());
    const std::string mt = scheme.plaintext.tag();
    for (u8 b : bits)
        encs.push_back(scheme.encrypt(pk, Value::scalar(mt, b & 1u), rng));
    return Value::tuple(tag, std::move(encs));
}

} // namespace

Bridge gentry_bridge(const GentryBridgeSpec& spec) {
    const std::size_t e = spec.inner.sk_bits;
    require(e > 0, Errc::NonEnumerableSpace, "inner scheme has no key bit representation");
    require(spec.key_mode != KeyMode::derived, Errc::WrongKeyMode,
            "recryption bridges use independent or shared keys");

    auto info = std::make_shared<GentryInfo>();
    info->inner = spec.inner;
    info->outer = spec.outer;
    info->key_mode = spec.key_mode;
    info->key_bits = e;
    info->fold_ciphertext = spec.fold_ciphertext;
    info->dec_circuit = compile_decryption_circuit(spec.inner, iota_as_bit(spec.iota));

    // Admission under the conversion-time input profile: encrypted key bits
    // are fresh, folded ciphertext bits are noiseless.
    {
        std::vector<u8> mask(e + spec.inner.ct_bits, 0);
        for (std::size_t i = e; i < mask.size(); ++i) mask[i] = 1;
        if (spec.outer.admit) spec.outer.admit(info->dec_circuit, mask);
    }

    Bridge b;
    b.id = std::string("gentry[") + spec.inner.name + "->" + spec.outer.base.name +
           (spec.key_mode == KeyMode::shared ? ",sharedkeys" : "") +
           (spec.fold_ciphertext ? "" : ",ctbits") + "]";
    b.source = spec.inner;
    b.target = spec.outer.base;
    b.key_mode = spec.key_mode;
    b.iota = spec.iota;
    b.gentry = info;

    const std::string bk_tag = "bk(" + b.id + ")";
    const std::string encs_tag = bk_tag + "/keybits";
    const Scheme inner = spec.inner;
    const HomScheme outer = spec.outer;
    const KeyMode mode = spec.key_mode;

    b.stages23 = [inner, outer, mode, bk_tag, encs_tag](const Value& sk1, const Value& pk1,
                                                        const SecurityParameter& lambda,
                                                        Rng& rng) {
        Value sk2, pk2, evk;
        if (mode == KeyMode::independent) {
            HomKeys hk = outer.keygen(lambda, rng);
            sk2 = hk.sk;
            pk2 = hk.pk;
            evk = hk.evk;
        } else {
            sk2 = sk1;
            pk2 = pk1;
            evk = outer.evk_of ? outer.evk_of(sk1, pk1, rng) : Value::none();
        }
        std::vector<u8> bits = inner.sk_to_bits(sk1);
        Value encs = encrypt_bits(outer.base, pk2, bits, encs_tag, rng);
        return StageTwoThree{sk2, pk2, Value::tuple(bk_tag, {evk, encs})};
    };

    auto dec_circuit = std::make_shared<BooleanCircuit>(info->dec_circuit);
    const bool fold = spec.fold_ciphertext;
    b.convert = [inner, outer, dec_circuit, fold](const Value& bk, const Value& c1,
                                                  Rng& rng) {
        const Value& evk = bk.part(0);
        const std::vector<Value>& keybits = bk.part(1).parts();
        std::vector<u8> cbits = inner.ct_to_bits(c1);
        if (fold) {
            BooleanCircuit restricted = partial_apply(*dec_circuit, cbits);
            std::vector<Value> inputs(keybits.begin(), keybits.end());
            return outer.eval_ex(evk, restricted, inputs, {}, rng, nullptr);
        }
        std::vector<Value> inputs(keybits.begin(), keybits.end());
        std::vector<u8> mask(keybits.size(), 0);
        for (u8 bit : cbits) {
            inputs.push_back(outer.trivial_encrypt(bit));
            mask.push_back(1);
        }
        return outer.eval_ex(evk, *dec_circuit, inputs, mask, rng, nullptr);
    };
    return b;
}

Bridge circuit_bridge(const HomScheme& h, const BooleanCircuit& circuit,
                      const std::string& label) {
    circuit.validate();
    require(circuit.outputs.size() == 1, Errc::ArityMismatch,
            "circuit bridges are single-output (bundle several for tuples)");
    if (h.admit) h.admit(circuit, {});

    const unsigned r = circuit.inputs;
    Bridge b;
    b.id = "circuit-" + label + ":" + h.base.name;
    b.source = fiber_power(h.base, r);
    b.target = h.base;
    b.key_mode = KeyMode::shared;

    const std::string mt = h.base.plaintext.tag();
    auto circ = std::make_shared<BooleanCircuit>(circuit);
    b.iota = [circ, mt](const Value& m) {
        std::vector<u8> bits;
        if (m.is_leaf()) {
            bits.push_back(static_cast<u8>(m.word(0) & 1));
        } else {
            for (const Value& p : m.parts()) bits.push_back(static_cast<u8>(p.word(0) & 1));
        }
        return Value::scalar(mt, eval_boolean1(*circ, bits));
    };
    const HomScheme hom = h;
    b.stages23 = [hom](const Value& sk1, const Value& pk1, const SecurityParameter&,
                       Rng& rng) {
        Value evk = hom.evk_of ? hom.evk_of(sk1, pk1, rng) : Value::none();
        return StageTwoThree{sk1, pk1, evk};
    };
    b.convert = [hom, circ](const Value& bk, const Value& c1, Rng& rng) {
        std::vector<Value> inputs;
        if (c1.is_leaf()) {
            inputs.push_back(c1);
        } else {
            inputs.assign(c1.parts().begin(), c1.parts().end());
        }
        return hom_eval(hom, bk, *circ, inputs, rng);
    };
    return b;
}

// --- unrestricted-composition transform --------------------------------------

namespace {

struct FcheMaterial {
    Value evk;                  // backend evaluation key
    std::vector<Value> keybits; // encryptions of the scheme's own key bits
};

FcheMaterial parse_evk(const Value& evk_ext) {
    require(!evk_ext.is_leaf() && evk_ext.size() == 2, Errc::ShapeMismatch,
            "extended evaluation key expected");
    return FcheMaterial{evk_ext.part(0),
                        std::vector<Value>(evk_ext.part(1).parts().begin(),
                                           evk_ext.part(1).parts().end())};
}

Value make_evk_ext(const HomScheme& h, const Value& sk, const Value& pk, const Value& evk,
                   Rng& rng) {
    std::vector<u8> bits = h.base.sk_to_bits(sk);
    const std::string tag = h.base.name + "/evk+keybits";
    Value encs = encrypt_bits(h.base, pk, bits, tag + "/bits", rng);
    return Value::tuple(tag, {evk, encs});
}

u8 identity_bit(const Value& m) { return static_cast<u8>(m.word(0) & 1); }

// g = C composed with the per-ciphertext restrictions of the decryption map.
BooleanCircuit recryption_circuit(const Scheme& base, const BooleanCircuit& c,
                                  std::span<const Value> cts) {
    std::vector<BooleanCircuit> inner;
    inner.reserve(cts.size());
    for (const Value& ct : cts)
        inner.push_back(dec_circuit_for_ciphertext(base, identity_bit, ct));
    return compose_circuits(c, inner);
}

} // namespace

FcheScheme fche_transform(const HomScheme& h) {
    require(h.base.sk_bits > 0 && h.base.sk_bits <= 16, Errc::NonEnumerableSpace,
            "transform needs a short key bit representation");

    HomScheme t = h;
    const HomScheme raw = h;
    t.keygen = [raw](const SecurityParameter& lambda, Rng& rng) {
        HomKeys keys = raw.keygen(lambda, rng);
        keys.evk = make_evk_ext(raw, keys.sk, keys.pk, keys.evk, rng);
        return keys;
    };
    t.evk_of = [raw](const Value& sk, const Value& pk, Rng& rng) {
        Value evk = raw.evk_of ? raw.evk_of(sk, pk, rng) : Value::none();
        return make_evk_ext(raw, sk, pk, evk, rng);
    };
    t.eval_ex = [raw](const Value& evk_ext, const BooleanCircuit& c,
                      std::span<const Value> inputs, std::span<const u8>, Rng& rng,
                      u64* cert) {
        require(inputs.size() == c.inputs, Errc::ArityMismatch,
                "eval arity mismatch");
        FcheMaterial m = parse_evk(evk_ext);
        BooleanCircuit g = recryption_circuit(raw.base, c, inputs);
        return raw.eval_ex(m.evk, g, m.keybits, {}, rng, cert);
    };
    t.eval = [ex = t.eval_ex](const Value& evk, const BooleanCircuit& c,
                              std::span<const Value> inputs, Rng& rng) {
        return ex(evk, c, inputs, {}, rng, nullptr);
    };
    t.admit = nullptr; // admission decided per call from the composed circuit
    return FcheScheme{t, raw};
}

HomScheme bootstrap_wrap(const HomScheme& h) {
    require(h.base.sk_bits > 0 && h.base.sk_bits <= 16, Errc::NonEnumerableSpace,
            "wrapper needs a short key bit representation");

    HomScheme t = h;
    const HomScheme raw = h;
    t.keygen = [raw](const SecurityParameter& lambda, Rng& rng) {
        HomKeys keys = raw.keygen(lambda, rng);
        keys.evk = make_evk_ext(raw, keys.sk, keys.pk, keys.evk, rng);
        return keys;
    };
    t.evk_of = [raw](const Value& sk, const Value& pk, Rng& rng) {
        Value evk = raw.evk_of ? raw.evk_of(sk, pk, rng) : Value::none();
        return make_evk_ext(raw, sk, pk, evk, rng);
    };
    t.eval_ex = [raw](const Value& evk_ext, const BooleanCircuit& c,
                      std::span<const Value> inputs, std::span<const u8> mask, Rng& rng,
                      u64* cert) {
        FcheMaterial m = parse_evk(evk_ext);
        // raw evaluation first, then refresh each output by recryption
        Value out = raw.eval_ex(m.evk, c, inputs, mask, rng, nullptr);
        auto recrypt = [&](const Value& ct) {
            BooleanCircuit d = dec_circuit_for_ciphertext(raw.base, identity_bit, ct);
            return raw.eval_ex(m.evk, d, m.keybits, {}, rng, cert);
        };
        if (out.is_leaf()) return recrypt(out);
        std::vector<Value> parts;
        parts.reserve(out.parts().size());
        for (const Value& p : out.parts()) parts.push_back(recrypt(p));
        return Value::tuple(out.tag(), std::move(parts));
    };
    t.eval = [ex = t.eval_ex](const Value& evk, const BooleanCircuit& c,
                              std::span<const Value> inputs, Rng& rng) {
        return ex(evk, c, inputs, {}, rng, nullptr);
    };
    t.admit = nullptr;
    return t;
}

// --- composition-equation checks ----------------------------------------------

namespace {

bool equation_holds(const HomScheme& s, const HomKeys& keys, const BooleanCircuit& c,
                    std::span<const Value> cts, Rng& rng) {
    Value out = s.eval(keys.evk, c, cts, rng);
    std::vector<u8> bits;
    bits.reserve(cts.size());
    for (const Value& ct : cts)
        bits.push_back(static_cast<u8>(s.base.decrypt(keys.sk, ct).word(0) & 1));
    std::vector<u8> expect = eval_boolean(c, bits);
    std::vector<Value> outs = out.is_leaf() ? std::vector<Value>{out} : out.parts();
    if (outs.size() != expect.size()) return false;
    for (std::size_t i = 0; i < outs.size(); ++i)
        if ((s.base.decrypt(keys.sk, outs[i]).word(0) & 1) != expect[i]) return false;
    return true;
}

} // namespace

FcheCheckResult check_fche(const HomScheme& s, const CircuitSampler& sampler,
                           std::uint64_t trials, std::uint64_t seed) {
    require(trials >= 1, Errc::InvalidParams, "trials must be >= 1");
    Rng key_rng = Rng::derive(seed, {0});
    HomKeys keys = s.keygen(SecurityParameter{}, key_rng);

    FcheCheckResult res;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng = Rng::derive(seed, {t, 1});
        BooleanCircuit c = sampler(rng);
        std::vector<Value> cts;
        cts.reserve(c.inputs);
        for (std::uint32_t i = 0; i < c.inputs; ++i)
            cts.push_back(s.base.ciphertext.sample(rng));
        ++res.checked;
        if (!equation_holds(s, keys, c, cts, rng)) {
            res.holds = false;
            res.witness_circuit = c;
            res.witness_inputs = cts;
            return res;
        }
    }
    return res;
}

FcheCheckResult check_fche_exhaustive(const HomScheme& s, unsigned max_gates,
                                      unsigned max_arity) {
    Rng key_rng = Rng::derive(20, {0});
    HomKeys keys = s.keygen(SecurityParameter{}, key_rng);
    const u64 ct_card = s.base.ciphertext.cardinality();

    FcheCheckResult res;
    // Enumerate gate lists: per position XOR/AND over earlier wire pairs plus
    // the two constants; the last wire is the output.
    for (unsigned arity = 1; arity <= max_arity; ++arity) {
        std::vector<Gate> gates;
        std::function<bool(unsigned)> rec = [&](unsigned remaining) -> bool {
            BooleanCircuit c;
            c.inputs = arity;
            c.gates = gates;
            c.outputs = {c.wire_count() - 1};
            // every ciphertext tuple
            u64 combos = 1;
            for (unsigned i = 0; i < arity; ++i) combos *= ct_card;
            for (u64 idx = 0; idx < combos; ++idx) {
                u64 x = idx;
                std::vector<Value> cts;
                cts.reserve(arity);
                for (unsigned i = 0; i < arity; ++i) {
                    cts.push_back(s.base.ciphertext.at(x % ct_card));
                    x /= ct_card;
                }
                Rng rng = Rng::derive(21, {arity, gates.size(), idx});
                ++res.checked;
                if (!equation_holds(s, keys, c, cts, rng)) {
                    res.holds = false;
                    res.witness_circuit = c;
                    res.witness_inputs = cts;
                    return true;
                }
            }
            if (remaining == 0) return false;
            const std::uint32_t wires = arity + static_cast<std::uint32_t>(gates.size());
            for (int op = 0; op < 2; ++op)
                for (std::uint32_t a = 0; a < wires; ++a)
                    for (std::uint32_t b = a; b < wires; ++b) {
                        gates.push_back(Gate{op ? GateOp::And : GateOp::Xor, a, b});
                        if (rec(remaining - 1)) return true;
                        gates.pop_back();
                    }
            for (int k = 0; k < 2; ++k) {
                gates.push_back(Gate{k ? GateOp::Const1 : GateOp::Const0, 0, 0});
                if (rec(remaining - 1)) return true;
                gates.pop_back();
            }
            return false;
        };
        if (rec(max_gates)) return res;
    }
    return res;
}

Value fche_compose_eval(const HomScheme& s, const Value& evk, const BooleanCircuit& c1,
                        const BooleanCircuit& c2, std::span<const Value> inputs, Rng& rng) {
    require(c1.outputs.size() == c2.inputs, Errc::ArityMismatch,
            "stage arities do not chain");
    Value mid = hom_eval(s, evk, c1, inputs, rng);
    std::vector<Value> mids = mid.is_leaf() ? std::vector<Value>{mid} : mid.parts();
    return hom_eval(s, evk, c2, mids, rng);
}

// --- key-distribution samplers ---------------------------------------------------

PkDistribution zero_substituted_bridge_key(const Bridge& composed) {
    require(composed.composed_f && composed.composed_g, Errc::WrongKeyMode,
            "not a composite bridge");
    const Bridge f = *composed.composed_f;
    const Bridge g = *composed.composed_g;
    require(g.gentry != nullptr, Errc::WrongKeyMode,
            "second factor is not a recryption bridge");
    require(g.gentry->key_mode == KeyMode::independent, Errc::WrongKeyMode,
            "shared-key mode has no zero-substituted distribution without "
            "circularity assumptions");

    const HomScheme outer = g.gentry->outer;
    const std::size_t e = g.gentry->key_bits;
    const std::string tag = "pkdist(" + composed.id + ")";
    const std::string tail_tag = tag + "/tail";
    const std::string prefix_tag = tag + "/prefix";

    auto real = [composed, outer, tag](Rng& rng) {
        KeyBundle kb = composed.keygen(SecurityParameter{}, rng);
        // composite bk = (bk_f, view(pk_mid), bk_g) with bk_g = (evk, keybit encs)
        const Value& bkf = kb.bk.part(0);
        const Value& pk_mid = kb.bk.part(1);
        const Value& bk_tail = kb.bk.part(2).part(1);
        return Value::tuple(tag, {composed.source.public_view(kb.pk1), pk_mid, bkf,
                                  outer.base.public_view(kb.pk2), bk_tail});
    };

    auto zero_tail = [outer, e, tail_tag](const Value& pk_h, Rng& rng) {
        std::vector<Value> encs;
        encs.reserve(e);
        const std::string mt = outer.base.plaintext.tag();
        for (std::size_t i = 0; i < e; ++i)
            encs.push_back(outer.base.encrypt(pk_h, Value::scalar(mt, 0), rng));
        return Value::tuple(tail_tag, std::move(encs));
    };

    auto zero_with_sk = [f, outer, zero_tail, tag](Rng& rng) {
        KeyPair kp1 = f.source.keygen(SecurityParameter{}, rng);
        StageTwoThree fs = f.stages23(kp1.sk, kp1.pk, SecurityParameter{}, rng);
        HomKeys hk = outer.keygen(SecurityParameter{}, rng);
        Value sample = Value::tuple(
            tag, {f.source.public_view(kp1.pk), f.target.public_view(fs.pk2), fs.bk,
                  outer.base.public_view(hk.pk), zero_tail(hk.pk, rng)});
        return std::make_pair(sample, hk.sk);
    };

    PkDistribution d;
    d.key_bits = e;
    d.real = real;
    d.zero_sub_with_sk = zero_with_sk;
    d.zero_sub = [zero_with_sk](Rng& rng) { return zero_with_sk(rng).first; };
    d.prefix_of = [prefix_tag](const Value& sample) {
        return Value::tuple(prefix_tag, {sample.part(0), sample.part(1), sample.part(2)});
    };
    d.zero_sub_fiber = [outer, zero_tail, tag](const Value& prefix, Rng& rng) {
        HomKeys hk = outer.keygen(SecurityParameter{}, rng);
        return Value::tuple(tag, {prefix.part(0), prefix.part(1), prefix.part(2),
                                  outer.base.public_view(hk.pk), zero_tail(hk.pk, rng)});
    };
    return d;
}

} // namespace bridgelab
