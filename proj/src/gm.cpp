#include "bridgelab/gm.hpp"

#include <algorithm>
#include <memory>
#include <bit>
#include <numeric>

namespace bridgelab {

u64 pow_mod(u64 base, u64 exp, u64 mod) {
    u64 r = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

int jacobi(u64 a, u64 n) {
    require(n % 2 == 1, Errc::InvalidParams, "Jacobi symbol needs odd n");
    a %= n;
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            u64 r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

bool is_quadratic_residue_mod_prime(u64 a, u64 p) {
    return pow_mod(a % p, (p - 1) / 2, p) == 1;
}

void GmParams::validate() const {
    require(p > 2 && q_prime > 2 && p != q_prime, Errc::InvalidParams,
            "GM needs two distinct odd primes");
    auto is_prime = [](u64 x) {
        if (x < 2) return false;
        for (u64 d = 2; d * d <= x; ++d)
            if (x % d == 0) return false;
        return true;
    };
    require(is_prime(p) && is_prime(q_prime), Errc::InvalidParams, "GM parameters must be prime");
}

u64 GmParams::pseudo_square() const {
    const u64 N = n();
    for (u64 z = 2; z < N; ++z) {
        if (std::gcd(z, N) != 1) continue;
        if (jacobi(z, N) == 1 && !is_quadratic_residue_mod_prime(z, p)) return z;
    }
    fail(Errc::InvalidParams, "no pseudo-square found");
}

u64 gm_encrypt(const GmParams& p, int m, Rng& rng) {
    require(m == 0 || m == 1, Errc::InvalidParams, "GM message must be a bit");
    const u64 N = p.n();
    const u64 z = p.pseudo_square();
    u64 r;
    do {
        r = 1 + rng.below(N - 1);
    } while (std::gcd(r, N) != 1);
    u64 c = r * r % N;
    if (m) c = c * z % N;
    return c;
}

int gm_decrypt(const GmParams& p, u64 c) {
    return is_quadratic_residue_mod_prime(c % p.p, p.p) ? 0 : 1;
}

Scheme make_gm_scheme(const GmParams& params) {
    params.validate();
    const u64 N = params.n();
    const u64 z = params.pseudo_square();
    const std::string name = "gm[p=" + std::to_string(params.p) +
                             ",q'=" + std::to_string(params.q_prime) + "]";
    const std::string mt = name + "/m";
    const std::string ct = name + "/ct";

    // The ciphertext space J_1(N), enumerated in increasing residue order.
    std::vector<u64> j1;
    for (u64 x = 1; x < N; ++x)
        if (std::gcd(x, N) == 1 && jacobi(x, N) == 1) j1.push_back(x);

    Scheme s;
    s.name = name;
    s.plaintext = Space::residues(mt, 2);
    {
        auto list = std::make_shared<std::vector<u64>>(j1);
        s.ciphertext = Space::enumerable(ct, list->size(), [list, ct](u64 i) {
            return Value::scalar(ct, (*list)[i]);
        });
    }
    s.symmetric = false;

    s.keygen = [params, N, z, ct](const SecurityParameter&, Rng&) {
        // Toy primes are parameters, so keys are a deterministic function of
        // the preset.
        Value sk = Value::leaf(ct + "/sk", {params.p, params.q_prime});
        Value pk = Value::leaf(ct + "/pk", {N, z});
        return KeyPair{sk, pk};
    };
    s.encrypt = [params, mt, ct](const Value&, const Value& m, Rng& rng) {
        check_tag(m, mt, "gm encrypt");
        return Value::scalar(ct, gm_encrypt(params, static_cast<int>(m.word(0)), rng));
    };
    s.decrypt = [params, mt, ct](const Value&, const Value& c) {
        check_tag(c, ct, "gm decrypt");
        return Value::scalar(mt, static_cast<u64>(gm_decrypt(params, c.word(0))));
    };

    // Fixed-width little-endian encoding of (p, q').
    s.sk_bits = 32;
    s.sk_to_bits = [params](const Value& sk) {
        std::vector<u8> bits(32);
        for (unsigned b = 0; b < 16; ++b) bits[b] = (sk.word(0) >> b) & 1u;
        for (unsigned b = 0; b < 16; ++b) bits[16 + b] = (sk.word(1) >> b) & 1u;
        return bits;
    };
    s.sk_from_bits = [ct](const std::vector<u8>& bits) {
        u64 p = 0, q = 0;
        for (unsigned b = 0; b < 16; ++b) p |= static_cast<u64>(bits.at(b) & 1u) << b;
        for (unsigned b = 0; b < 16; ++b) q |= static_cast<u64>(bits.at(16 + b) & 1u) << b;
        return Value::leaf(ct + "/sk", {p, q});
    };

    // Ciphertext bits index into the J_1(N) list, so every pattern decodes.
    {
        auto list = std::make_shared<std::vector<u64>>(std::move(j1));
        const unsigned width = static_cast<unsigned>(std::bit_width(list->size() - 1));
        s.ct_bits = width;
        s.ct_to_bits = [list, width](const Value& c) {
            u64 idx = static_cast<u64>(
                std::lower_bound(list->begin(), list->end(), c.word(0)) - list->begin());
            std::vector<u8> bits(width);
            for (unsigned b = 0; b < width; ++b) bits[b] = (idx >> b) & 1u;
            return bits;
        };
        s.ct_from_bits = [list, width, ct](const std::vector<u8>& bits) {
            u64 idx = 0;
            for (unsigned b = 0; b < width; ++b) idx |= static_cast<u64>(bits.at(b) & 1u) << b;
            return Value::scalar(ct, (*list)[idx % list->size()]);
        };
    }
    s.pk_of_sk = [N, z, ct](const Value&) { return Value::leaf(ct + "/pk", {N, z}); };
    return s;
}

} // namespace bridgelab
