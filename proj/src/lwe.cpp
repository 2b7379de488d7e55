#include "bridgelab/lwe.hpp"

#include <bit>

namespace bridgelab {

std::int64_t centered(u64 x, u64 q) {
    u64 r = x % q;
    if (r > q / 2) return static_cast<std::int64_t>(r) - static_cast<std::int64_t>(q);
    return static_cast<std::int64_t>(r);
}

namespace {

unsigned coeff_bits(u64 q) { return static_cast<unsigned>(std::bit_width(q - 1)); }

std::string scheme_name(const LweParams& p, bool threshold) {
    return std::string(threshold ? "lwe2q" : "lwe") + "[n=" + std::to_string(p.n) +
           ",q=" + std::to_string(p.q) + ",B=" + std::to_string(p.noise_bound) + "]";
}

std::int64_t phase(const LweParams& p, const Value& sk, const Value& c) {
    u64 acc = 0;
    for (unsigned i = 0; i < p.n; ++i)
        acc = (acc + (c.word(i) % p.q) * (sk.word(i) % p.q)) % p.q;
    u64 b = c.word(p.n) % p.q;
    return centered((b + p.q - acc) % p.q, p.q);
}

// round(2d/q) with ties away from zero, for centered d.
std::int64_t round_scaled(std::int64_t d, u64 q) {
    bool neg = d < 0;
    u64 a = static_cast<u64>(neg ? -d : d);
    u64 r = (4 * a + q) / (2 * q);
    return neg ? -static_cast<std::int64_t>(r) : static_cast<std::int64_t>(r);
}

Scheme build_scheme(const LweParams& p, bool threshold) {
    const std::string name = scheme_name(p, threshold);
    const std::string mt = name + "/m";
    const std::string ct = name + "/ct";
    const unsigned w = coeff_bits(p.q);

    Scheme s;
    s.name = name;
    s.plaintext = Space::residues(mt, 2);
    {
        // Single leaf [a_0..a_{n-1}, b]; enumeration order puts a-coordinates
        // most significant and b least significant.
        const u64 q = p.q;
        const unsigned n = p.n;
        u64 card = 1;
        for (unsigned i = 0; i <= n; ++i) card *= q;
        s.ciphertext = Space::enumerable(ct, card, [q, n, ct](u64 idx) {
            std::vector<u64> words(n + 1);
            for (unsigned i = n + 1; i-- > 0;) {
                words[i] = idx % q;
                idx /= q;
            }
            return Value::leaf(ct, std::move(words));
        });
    }
    s.symmetric = true;

    const LweParams params = p;
    s.keygen = [params, ct](const SecurityParameter&, Rng& rng) {
        std::vector<u64> skw(params.n);
        for (auto& x : skw) x = rng.below(params.q);
        Value sk = Value::leaf(ct + "/sk", std::move(skw));
        return KeyPair{sk, sk};
    };
    s.encrypt = [params, mt, ct](const Value& pk, const Value& m, Rng& rng) {
        check_tag(m, mt, "lwe encrypt");
        Value raw = lwe_encrypt(params, pk, static_cast<int>(m.word(0)), rng);
        return Value::leaf(ct, raw.words());
    };
    if (threshold) {
        s.decrypt = [params, mt, ct](const Value& sk, const Value& c) {
            check_tag(c, ct, "lwe decrypt");
            return Value::scalar(mt, static_cast<u64>(lwe_threshold_decrypt(params, sk, c)));
        };
    } else {
        s.decrypt = [params, mt, ct](const Value& sk, const Value& c) {
            check_tag(c, ct, "lwe decrypt");
            return Value::scalar(mt, static_cast<u64>(lwe_decrypt(params, sk, c)));
        };
    }

    s.sk_bits = params.n * w;
    s.sk_to_bits = [params, w](const Value& sk) {
        std::vector<u8> bits;
        bits.reserve(params.n * w);
        for (unsigned i = 0; i < params.n; ++i)
            for (unsigned b = 0; b < w; ++b) bits.push_back((sk.word(i) >> b) & 1u);
        return bits;
    };
    s.sk_from_bits = [params, w, ct](const std::vector<u8>& bits) {
        std::vector<u64> words(params.n);
        for (unsigned i = 0; i < params.n; ++i) {
            u64 v = 0;
            for (unsigned b = 0; b < w; ++b) v |= static_cast<u64>(bits.at(i * w + b) & 1u) << b;
            words[i] = v % params.q;
        }
        return Value::leaf(ct + "/sk", std::move(words));
    };

    s.ct_bits = (params.n + 1) * w;
    s.ct_to_bits = [params, w](const Value& c) {
        std::vector<u8> bits;
        bits.reserve((params.n + 1) * w);
        for (unsigned i = 0; i <= params.n; ++i)
            for (unsigned b = 0; b < w; ++b) bits.push_back((c.word(i) >> b) & 1u);
        return bits;
    };
    s.ct_from_bits = [params, w, ct](const std::vector<u8>& bits) {
        std::vector<u64> words(params.n + 1);
        for (unsigned i = 0; i <= params.n; ++i) {
            u64 v = 0;
            for (unsigned b = 0; b < w; ++b) v |= static_cast<u64>(bits.at(i * w + b) & 1u) << b;
            words[i] = v % params.q;
        }
        return Value::leaf(ct, std::move(words));
    };

    {
        const std::string skt = ct + "/sk";
        const u64 q = params.q;
        const unsigned n = params.n;
        u64 card = 1;
        for (unsigned i = 0; i < n; ++i) card *= q;
        s.sk_space = Space::enumerable(skt, card, [q, n, skt](u64 idx) {
            std::vector<u64> words(n);
            for (unsigned i = n; i-- > 0;) {
                words[i] = idx % q;
                idx /= q;
            }
            return Value::leaf(skt, std::move(words));
        });
    }
    s.pk_of_sk = [](const Value& sk) { return sk; };
    return s;
}

} // namespace

Value lwe_encrypt(const LweParams& p, const Value& sk, int m, Rng& rng) {
    require(m == 0 || m == 1, Errc::InvalidParams, "LWE message must be a bit");
    std::vector<u64> c(p.n + 1);
    u64 acc = 0;
    for (unsigned i = 0; i < p.n; ++i) {
        c[i] = rng.below(p.q);
        acc = (acc + c[i] * (sk.word(i) % p.q)) % p.q;
    }
    std::int64_t e = p.noise_bound ? rng.signed_below(p.noise_bound) : 0;
    u64 b = (acc + static_cast<u64>(m) * (p.q / 2)) % p.q;
    b = (b + static_cast<u64>(e + static_cast<std::int64_t>(p.q))) % p.q;
    c[p.n] = b;
    // Raw layout; scheme wrappers re-tag for their own ciphertext space.
    return Value::leaf(scheme_name(p, false) + "/ct", std::move(c));
}

int lwe_decrypt(const LweParams& p, const Value& sk, const Value& c) {
    std::int64_t d = phase(p, sk, c);
    return static_cast<int>(((round_scaled(d, p.q) % 2) + 2) % 2);
}

int lwe_threshold_decrypt(const LweParams& p, const Value& sk, const Value& c) {
    std::int64_t d = phase(p, sk, c);
    // open interval (-q/4, q/4), i.e. 4|d| < q
    return (4 * (d < 0 ? -d : d) < static_cast<std::int64_t>(p.q)) ? 0 : 1;
}

Scheme make_lwe_scheme(const LweParams& p) {
    p.validate_base();
    require(8 * p.noise_bound < p.q, Errc::InvalidParams,
            "additive LWE needs noise_bound < q/8");
    return build_scheme(p, false);
}

Scheme make_lwe_threshold_scheme(const LweParams& p) {
    p.validate_base();
    require(p.q % 4 == 2, Errc::InvalidParams, "modulus-switch family needs q = 2 (mod 4)");
    require(4 * p.noise_bound < p.q, Errc::InvalidParams,
            "threshold LWE needs noise_bound < q/4");
    return build_scheme(p, true);
}

Scheme make_lwe_scheme_raw(const LweParams& p) {
    p.validate_base();
    return build_scheme(p, false);
}

} // namespace bridgelab
