#include "bridgelab/bridge.hpp"

namespace bridgelab {

double check_bridge_correct(const Bridge& b, std::uint64_t trials, std::uint64_t seed) {
    require(trials >= 1, Errc::InvalidParams, "trials must be >= 1");
    const SecurityParameter lambda;
    std::uint64_t failures = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng key_rng = Rng::derive(seed, {t, 0});
        KeyBundle kb = b.keygen(lambda, key_rng);
        Rng rng = Rng::derive(seed, {t, 1});
        Value m = b.source.plaintext.sample(rng);
        Value c1 = b.source.encrypt(kb.pk1, m, rng);
        Value c2 = b.convert(kb.bk, c1, rng);
        if (b.target.decrypt(kb.sk2, c2) != b.iota(m)) ++failures;
    }
    return static_cast<double>(failures) / static_cast<double>(trials);
}

namespace {

bool holds_on(const Bridge& b, const KeyBundle& kb, const Value& c1, Rng& rng) {
    Value c2 = b.convert(kb.bk, c1, rng);
    return b.target.decrypt(kb.sk2, c2) == b.iota(b.source.decrypt(kb.sk1, c1));
}

} // namespace

CompletenessReport check_complete(const Bridge& b, CheckMode mode, std::uint64_t budget,
                                  std::uint64_t seed, bool exhaust_keys,
                                  unsigned keysets) {
    const SecurityParameter lambda;
    CompletenessReport rep;
    rep.complete = true;
    rep.mode = mode == CheckMode::exhaustive ? "exhaustive" : "sampled";

    std::vector<KeyBundle> bundles;
    if (exhaust_keys) {
        require(b.source.sk_space.has_value(), Errc::NonEnumerableSpace,
                "source scheme has no enumerable key space");
        require(static_cast<bool>(b.source.pk_of_sk), Errc::NonEnumerableSpace,
                "source scheme cannot derive pk from sk");
        const Space& keys = *b.source.sk_space;
        for (u64 ki = 0; ki < keys.cardinality(); ++ki) {
            Value sk1 = keys.at(ki);
            Value pk1 = b.source.pk_of_sk(sk1);
            Rng rng = Rng::derive(seed, {7, ki});
            StageTwoThree st = b.stages23(sk1, pk1, lambda, rng);
            bundles.push_back(KeyBundle{sk1, pk1, st.sk2, st.pk2, st.bk});
        }
    } else {
        for (unsigned ks = 0; ks < keysets; ++ks) {
            Rng rng = Rng::derive(seed, {0, ks});
            bundles.push_back(b.keygen(lambda, rng));
        }
    }

    for (std::size_t ks = 0; ks < bundles.size(); ++ks) {
        const KeyBundle& kb = bundles[ks];
        if (mode == CheckMode::exhaustive) {
            const u64 card = b.source.ciphertext.cardinality();
            for (u64 i = 0; i < card; ++i) {
                Value c1 = b.source.ciphertext.at(i);
                Rng rng = Rng::derive(seed, {1, ks, i});
                ++rep.checked;
                if (!holds_on(b, kb, c1, rng)) {
                    rep.complete = false;
                    rep.witness = c1;
                    return rep;
                }
            }
        } else {
            for (u64 i = 0; i < budget; ++i) {
                Rng rng = Rng::derive(seed, {1, ks, i});
                Value c1 = b.source.ciphertext.sample(rng);
                ++rep.checked;
                if (!holds_on(b, kb, c1, rng)) {
                    rep.complete = false;
                    rep.witness = c1;
                    return rep;
                }
            }
        }
    }
    return rep;
}

void certify_complete(Bridge& b, const CompletenessReport& report) {
    b.complete_certificate = report.complete;
}

Bridge compose(const Bridge& f, const Bridge& g) {
    require(f.target.name == g.source.name, Errc::SchemeMismatch,
            "cannot compose: '" + f.target.name + "' feeds '" + g.source.name + "'");

    Bridge c;
    c.id = g.id + "*" + f.id;
    c.source = f.source;
    c.target = g.target;
    c.key_mode = KeyMode::derived;
    c.status = (g.complete_certificate && *g.complete_certificate)
                   ? BridgeStatus::constructed
                   : BridgeStatus::correctness_unverified;
    c.composed_f = std::make_shared<Bridge>(f);
    c.composed_g = std::make_shared<Bridge>(g);
    c.gentry = g.gentry;

    auto fio = f.iota;
    auto gio = g.iota;
    c.iota = [fio, gio](const Value& m) { return gio(fio(m)); };

    const Bridge fc = f, gc = g;
    c.stages23 = [fc, gc](const Value& sk1, const Value& pk1, const SecurityParameter& l,
                          Rng& rng) {
        StageTwoThree a = fc.stages23(sk1, pk1, l, rng);
        StageTwoThree b2 = gc.stages23(a.sk2, a.pk2, l, rng);
        Value bk = Value::tuple("bk(" + gc.id + "*" + fc.id + ")",
                                {a.bk, gc.source.public_view(a.pk2), b2.bk});
        return StageTwoThree{b2.sk2, b2.pk2, bk};
    };
    c.convert = [fc, gc](const Value& bk, const Value& c1, Rng& rng) {
        const Value& bkf = bk.part(0);
        const Value& bkg = bk.part(2);
        return gc.convert(bkg, fc.convert(bkf, c1, rng), rng);
    };
    return c;
}

Bridge identity_bridge(const Scheme& s) {
    Bridge b;
    b.id = "identity:" + s.name;
    b.source = s;
    b.target = s;
    b.key_mode = KeyMode::shared;
    b.iota = [](const Value& m) { return m; };
    b.stages23 = [](const Value& sk1, const Value& pk1, const SecurityParameter&, Rng&) {
        return StageTwoThree{sk1, pk1, Value::none()};
    };
    b.convert = [](const Value&, const Value& c1, Rng&) { return c1; };
    return b;
}

namespace {

Value lwe_sum(const LweParams& p, const std::string& tag, const Value& a, const Value& b) {
    std::vector<u64> w(p.n + 1);
    for (unsigned i = 0; i <= p.n; ++i) w[i] = (a.word(i) + b.word(i)) % p.q;
    return Value::leaf(tag, std::move(w));
}

} // namespace

namespace {

Bridge additive_bridge_over(const Scheme& e, const LweParams& p, const std::string& id) {
    Bridge b;
    b.id = id;
    b.source = fiber_power(e, 2);
    b.target = e;
    b.key_mode = KeyMode::shared;
    const std::string mt = e.plaintext.tag();
    const std::string ct = e.ciphertext.tag();
    const LweParams params = p;
    b.iota = [mt](const Value& m) {
        return Value::scalar(mt, (m.part(0).word(0) + m.part(1).word(0)) % 2);
    };
    b.stages23 = [](const Value& sk1, const Value& pk1, const SecurityParameter&, Rng&) {
        return StageTwoThree{sk1, pk1, Value::none()};
    };
    b.convert = [params, ct](const Value&, const Value& c1, Rng&) {
        return lwe_sum(params, ct, c1.part(0), c1.part(1));
    };
    return b;
}

} // namespace

Bridge lwe_additive_bridge(const LweParams& p) {
    return additive_bridge_over(make_lwe_scheme(p), p,
                                "lwe-additive[q=" + std::to_string(p.q) + "]");
}

Bridge lwe_additive_bridge_threshold(const LweParams& p) {
    require(4 * p.noise_bound < p.q / 2, Errc::InvalidParams,
            "fresh sums need 2B < q/4");
    return additive_bridge_over(make_lwe_threshold_scheme(p), p,
                                "lwe-additive-2q[q=" + std::to_string(p.q) + "]");
}

Bridge lwe_additive_pair_bridge(const LweParams& p) {
    Scheme e = make_lwe_scheme(p);
    Bridge b;
    b.id = "lwe-additive-x2[q=" + std::to_string(p.q) + "]";
    b.source = fiber_power(e, 4);
    b.target = fiber_power(e, 2);
    b.key_mode = KeyMode::shared;
    const std::string mt = b.target.plaintext.tag();
    const std::string mt1 = e.plaintext.tag();
    const std::string ct = b.target.ciphertext.tag();
    const std::string ct1 = e.ciphertext.tag();
    const LweParams params = p;
    b.iota = [mt, mt1](const Value& m) {
        return Value::tuple(
            mt, {Value::scalar(mt1, (m.part(0).word(0) + m.part(1).word(0)) % 2),
                 Value::scalar(mt1, (m.part(2).word(0) + m.part(3).word(0)) % 2)});
    };
    b.stages23 = [](const Value& sk1, const Value& pk1, const SecurityParameter&, Rng&) {
        return StageTwoThree{sk1, pk1, Value::none()};
    };
    b.convert = [params, ct, ct1](const Value&, const Value& c1, Rng&) {
        return Value::tuple(ct, {lwe_sum(params, ct1, c1.part(0), c1.part(1)),
                                 lwe_sum(params, ct1, c1.part(2), c1.part(3))});
    };
    return b;
}

Bridge modswitch_bridge(unsigned n, u64 q, u64 Q, u64 noise) {
    require(Q % q == 0, Errc::DivisibilityViolation,
            "modulus switch needs q | Q (got q=" + std::to_string(q) +
                ", Q=" + std::to_string(Q) + ")");
    LweParams src{n, q, noise};
    LweParams dst{n, Q, noise};
    Scheme s1 = make_lwe_threshold_scheme(src);
    Scheme s2 = make_lwe_threshold_scheme(dst);
    const u64 factor = Q / q;
    const std::string ct2 = s2.ciphertext.tag();
    const std::string sk2t = ct2 + "/sk";
    const std::string mt2 = s2.plaintext.tag();

    Bridge b;
    b.id = "modswitch[" + std::to_string(q) + "->" + std::to_string(Q) + "]";
    b.source = s1;
    b.target = s2;
    b.key_mode = KeyMode::derived;
    b.iota = [mt2](const Value& m) { return Value::scalar(mt2, m.word(0)); };
    b.stages23 = [sk2t](const Value& sk1, const Value& pk1, const SecurityParameter&,
                        Rng&) {
        // the same key vector viewed in Z_Q
        Value sk2 = Value::leaf(sk2t, sk1.words());
        (void)pk1;
        return StageTwoThree{sk2, sk2, Value::none()};
    };
    b.convert = [factor, Q, ct2](const Value&, const Value& c1, Rng&) {
        std::vector<u64> w(c1.words().size());
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = c1.word(i) * factor % Q;
        return Value::leaf(ct2, std::move(w));
    };
    return b;
}

namespace {

// base with ciphertexts padded by `pad` uniformly random bits; decryption
// reads the original part.
Scheme pad_scheme(const Scheme& base, std::size_t pad) {
    Scheme s = base;
    s.name = base.name + "+pad" + std::to_string(pad);
    const std::string ct = s.name + "/ct";
    const std::string padt = ct + "/pad";
    s.ciphertext = Space::product(ct, {base.ciphertext, Space::bits(padt, pad)});
    const Scheme b = base;
    s.encrypt = [b, ct, padt, pad](const Value& pk, const Value& m, Rng& rng) {
        Value inner = b.encrypt(pk, m, rng);
        std::vector<u64> bits(pad);
        for (auto& x : bits) x = static_cast<u64>(rng.bit());
        return Value::tuple(ct, {inner, Value::leaf(padt, std::move(bits))});
    };
    s.decrypt = [b, ct](const Value& sk, const Value& c) {
        check_tag(c, ct, "padded decrypt");
        return b.decrypt(sk, c.part(0));
    };
    // bit representations are not carried through padding (not needed here)
    s.ct_bits = 0;
    s.ct_to_bits = nullptr;
    s.ct_from_bits = nullptr;
    return s;
}

Bridge halfkey_half(const Scheme& from, const Scheme& to, const Scheme& base,
                    bool high_half, const std::string& id) {
    const std::size_t e = base.sk_bits;
    const std::size_t half = e / 2;
    const std::string ct = to.ciphertext.tag();
    const std::string padt = to.ciphertext.components()[1].tag();

    Bridge b;
    b.id = id;
    b.source = from;
    b.target = to;
    b.key_mode = KeyMode::shared;
    b.iota = [](const Value& m) { return m; };
    const Scheme bs = base;
    b.stages23 = [bs, half, high_half, padt](const Value& sk1, const Value& pk1,
                                             const SecurityParameter&, Rng&) {
        std::vector<u8> bits = bs.sk_to_bits(sk1);
        std::vector<u64> w(half);
        for (std::size_t i = 0; i < half; ++i)
            w[i] = bits.at(high_half ? half + i : i) & 1u;
        return StageTwoThree{sk1, pk1, Value::leaf(padt, std::move(w))};
    };
    b.convert = [ct](const Value& bk, const Value& c1, Rng&) {
        return Value::tuple(ct, {c1, bk});
    };
    return b;
}

} // namespace

HalfkeyBridges halfkey_bridges(const Scheme& base) {
    require(base.sk_bits % 2 == 0, Errc::OddKeyLength,
            "half-key construction needs an even key bit length");
    const std::size_t half = base.sk_bits / 2;
    Scheme mid = pad_scheme(base, half);
    Scheme far = pad_scheme(mid, half);
    HalfkeyBridges hk{halfkey_half(base, mid, base, false, "halfkey-f"),
                      halfkey_half(mid, far, base, true, "halfkey-g"), mid, far};
    return hk;
}

Bridge concat_bridges(std::span<const Bridge> bs) {
    require(!bs.empty(), Errc::KeyBundleMismatch, "no bridges to bundle");
    const Bridge& first = bs[0];
    for (const Bridge& b : bs) {
        require(b.source.name == first.source.name && b.target.name == first.target.name,
                Errc::KeyBundleMismatch, "bundled bridges must share source and target");
        require(b.key_mode == KeyMode::shared, Errc::KeyBundleMismatch,
                "bundled bridges must share one key bundle");
    }
    const unsigned s = static_cast<unsigned>(bs.size());
    if (s == 1) {
        // 1-tuple wrapping: keep the single bridge but present tuple spaces
        Bridge b = first;
        b.id = "concat(" + first.id + ")";
        return b;
    }

    Bridge out;
    out.id = "concat(";
    for (std::size_t i = 0; i < bs.size(); ++i) out.id += (i ? "," : "") + bs[i].id;
    out.id += ")";
    out.source = first.source;
    out.target = fiber_power(first.target, s);
    out.key_mode = KeyMode::shared;
    out.stages23 = first.stages23;

    std::vector<std::function<Value(const Value&)>> iotas;
    std::vector<std::function<Value(const Value&, const Value&, Rng&)>> convs;
    for (const Bridge& b : bs) {
        iotas.push_back(b.iota);
        convs.push_back(b.convert);
    }
    const std::string mt = out.target.plaintext.tag();
    const std::string ct = out.target.ciphertext.tag();
    out.iota = [iotas, mt](const Value& m) {
        std::vector<Value> parts;
        parts.reserve(iotas.size());
        for (const auto& io : iotas) parts.push_back(io(m));
        return Value::tuple(mt, std::move(parts));
    };
    out.convert = [convs, ct](const Value& bk, const Value& c1, Rng& rng) {
        std::vector<Value> parts;
        parts.reserve(convs.size());
        for (const auto& cv : convs) parts.push_back(cv(bk, c1, rng));
        return Value::tuple(ct, std::move(parts));
    };
    return out;
}

Scheme graph_scheme(const Bridge& b, bool shared_randomness) {
    const Bridge bridge = b;
    const std::string name = "graph(" + b.id + ")";
    const std::string ct = name + "/ct";
    const std::string skt = name + "/sk";
    const std::string pkt = name + "/pk";

    Scheme s;
    s.name = name;
    s.plaintext = b.source.plaintext;
    s.ciphertext = Space::product(ct, {b.source.ciphertext, b.target.ciphertext});
    s.symmetric = false; // the view function below does the redaction
    s.keygen = [bridge, skt, pkt](const SecurityParameter& lambda, Rng& rng) {
        KeyBundle kb = bridge.keygen(lambda, rng);
        return KeyPair{Value::tuple(skt, {kb.sk1, kb.sk2}),
                       Value::tuple(pkt, {kb.pk1, kb.pk2, kb.bk})};
    };
    s.encrypt = [bridge, ct, shared_randomness](const Value& pk, const Value& m, Rng& rng) {
        const Value& pk1 = pk.part(0);
        const Value& bk = pk.part(2);
        Value a = bridge.source.encrypt(pk1, m, rng);
        Value inner = shared_randomness ? a : bridge.source.encrypt(pk1, m, rng);
        Value bpart = bridge.convert(bk, inner, rng);
        return Value::tuple(ct, {a, bpart});
    };
    s.decrypt = [bridge, ct](const Value& sk, const Value& c) {
        check_tag(c, ct, "graph decrypt");
        return bridge.source.decrypt(sk.part(0), c.part(0));
    };
    // What an adversary may see of the key triple: redacted pk1/pk2, bk public.
    const Scheme src = b.source, tgt = b.target;
    s.public_view_fn = [src, tgt, pkt](const Value& pk) {
        return Value::tuple(pkt, {src.public_view(pk.part(0)), tgt.public_view(pk.part(1)),
                                  pk.part(2)});
    };
    return s;
}

} // namespace bridgelab
