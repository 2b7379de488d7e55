#include "bridgelab/scheme.hpp"

namespace bridgelab {

double check_correctness(const Scheme& scheme, const SecurityParameter& lambda,
                         std::uint64_t trials, std::uint64_t seed) {
    require(trials >= 1, Errc::InvalidParams, "trials must be >= 1");
    scheme.plaintext.cardinality(); // rejects empty / non-denumerable plaintext

    Rng key_rng = Rng::derive(seed, {0});
    KeyPair kp = scheme.keygen(lambda, key_rng);
    std::uint64_t failures = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng = Rng::derive(seed, {t, 1});
        Value m = scheme.plaintext.sample(rng);
        Value c = scheme.encrypt(kp.pk, m, rng);
        if (scheme.decrypt(kp.sk, c) != m) ++failures;
    }
    return static_cast<double>(failures) / static_cast<double>(trials);
}

Scheme fiber_power(const Scheme& scheme, unsigned k) {
    require(k >= 1, Errc::InvalidParams, "fiber power requires k >= 1");
    if (k == 1) return scheme;

    Scheme out = scheme;
    out.name = scheme.name + "^" + std::to_string(k);
    out.plaintext = Space::product(scheme.plaintext.tag() + "^" + std::to_string(k),
                                   std::vector<Space>(k, scheme.plaintext));
    out.ciphertext = Space::product(scheme.ciphertext.tag() + "^" + std::to_string(k),
                                    std::vector<Space>(k, scheme.ciphertext));
    out.aux_public = scheme.aux_public;

    const std::string mt = out.plaintext.tag();
    const std::string ct = out.ciphertext.tag();
    const Scheme base = scheme; // captured by value; schemes are immutable bundles

    out.encrypt = [base, k, mt, ct](const Value& pk, const Value& m, Rng& rng) {
        check_tag(m, mt, "fiber encrypt");
        std::vector<Value> parts;
        parts.reserve(k);
        for (unsigned i = 0; i < k; ++i) parts.push_back(base.encrypt(pk, m.part(i), rng));
        return Value::tuple(ct, std::move(parts));
    };
    out.decrypt = [base, k, mt, ct](const Value& sk, const Value& c) {
        check_tag(c, ct, "fiber decrypt");
        std::vector<Value> parts;
        parts.reserve(k);
        for (unsigned i = 0; i < k; ++i) parts.push_back(base.decrypt(sk, c.part(i)));
        return Value::tuple(mt, std::move(parts));
    };

    if (scheme.ct_bits > 0) {
        out.ct_bits = scheme.ct_bits * k;
        out.ct_to_bits = [base, k](const Value& c) {
            std::vector<u8> bits;
            bits.reserve(base.ct_bits * k);
            for (unsigned i = 0; i < k; ++i) {
                auto part = base.ct_to_bits(c.part(i));
                bits.insert(bits.end(), part.begin(), part.end());
            }
            return bits;
        };
        out.ct_from_bits = [base, k, ct](const std::vector<u8>& bits) {
            std::vector<Value> parts;
            parts.reserve(k);
            for (unsigned i = 0; i < k; ++i) {
                std::vector<u8> piece(bits.begin() + i * base.ct_bits,
                                      bits.begin() + (i + 1) * base.ct_bits);
                parts.push_back(base.ct_from_bits(piece));
            }
            return Value::tuple(ct, std::move(parts));
        };
    }
    return out;
}

Scheme augment(const Scheme& scheme, const std::vector<Value>& aux) {
    Scheme out = scheme;
    out.aux_public.insert(out.aux_public.end(), aux.begin(), aux.end());
    return out;
}

} // namespace bridgelab
