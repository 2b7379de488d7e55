#include "bridgelab/gsw.hpp"

#include <bit>

#include "bridgelab/lwe.hpp" // centered()

namespace bridgelab {

namespace {

using u128 = unsigned __int128;
constexpr u64 kSat = u64{1} << 63; // saturation cap for noise bounds

u64 sat_add(u64 a, u64 b) { return (a > kSat - b) ? kSat : a + b; }
u64 sat_mul(u64 a, u64 b) {
    if (a == 0 || b == 0) return 0;
    if (a > kSat / b) return kSat;
    return a * b;
}

std::string gsw_name(const GswParams& p) {
    return "gsw[n=" + std::to_string(p.n) + ",logq=" + std::to_string(p.log2q) +
           ",B=" + std::to_string(p.noise) + ",D=" + std::to_string(p.depth) + "]";
}

// Phase vector C*t with t = (-s, 1): per row, C[row][n] - sum_i C[row][i]*s_i.
u64 row_phase(const GswParams& p, const Value& sk, const GswCt& c, unsigned row) {
    const unsigned cols = p.n + 1;
    u64 acc = c.w[static_cast<std::size_t>(row) * cols + p.n];
    for (unsigned i = 0; i < p.n; ++i)
        acc -= c.w[static_cast<std::size_t>(row) * cols + i] * sk.word(i);
    return acc & p.mask();
}

// G*t at a given row: block b, digit d contributes 2^d * t_b.
u64 gadget_phase(const GswParams& p, const Value& sk, unsigned row) {
    const unsigned b = row / p.ell();
    const unsigned d = row % p.ell();
    u64 t = (b == p.n) ? 1 : (0 - sk.word(b)); // t = (-s, 1), wrap-around
    return (d >= 64 ? 0 : (t << d)) & p.mask();
}

} // namespace

bool GswParams::respects_level_budget() const {
    u128 bound = noise ? noise : 1;
    for (unsigned i = 0; i < depth; ++i) {
        bound *= big_n();
        if (bound > (u128{1} << 100)) return false;
    }
    if (noise == 0) bound = 0;
    return bound < u128{q()} / 8;
}

NoiseBudgetReport noise_budget_check(const GswParams& p, const BooleanCircuit& c) {
    p.validate();
    const unsigned d = c.depth();
    u128 bound = p.noise;
    for (unsigned i = 0; i < d && bound; ++i) {
        if (bound > (u128{1} << 110)) break;
        bound *= p.big_n();
    }
    NoiseBudgetReport r;
    r.ok = bound < u128{p.q()} / 8;
    u64 hint = 0;
    for (u128 x = bound; x > 1; x >>= 1) ++hint;
    r.bound_log2_hint = hint;
    if (r.ok) {
        r.required_log2q = p.log2q;
    } else {
        // smallest power of two q' with bound < q'/8, N kept from params
        unsigned k = 3;
        while (k < 127 && (u128{1} << k) / 8 <= bound) ++k;
        r.required_log2q = k;
    }
    return r;
}

GswCt gsw_encrypt(const GswParams& p, const Value& sk, int m, Rng& rng) {
    require(m == 0 || m == 1, Errc::InvalidParams, "GSW message must be a bit");
    const unsigned N = p.big_n(), cols = p.n + 1;
    GswCt c;
    c.w.assign(static_cast<std::size_t>(N) * cols, 0);
    for (unsigned r = 0; r < N; ++r) {
        u64 dot = 0;
        for (unsigned i = 0; i < p.n; ++i) {
            u64 a = rng.below(p.q());
            c.w[static_cast<std::size_t>(r) * cols + i] = a;
            dot += a * sk.word(i);
        }
        std::int64_t e = p.noise ? rng.signed_below(p.noise) : 0;
        c.w[static_cast<std::size_t>(r) * cols + p.n] =
            (dot + static_cast<u64>(e)) & p.mask();
    }
    if (m) {
        // add the gadget matrix
        for (unsigned b = 0; b < cols; ++b)
            for (unsigned d = 0; d < p.ell(); ++d) {
                std::size_t r = static_cast<std::size_t>(b) * p.ell() + d;
                c.w[r * cols + b] = (c.w[r * cols + b] + (d >= 64 ? 0 : (u64{1} << d))) & p.mask();
            }
    }
    return c;
}

GswCt gsw_trivial(const GswParams& p, int m) {
    const unsigned N = p.big_n(), cols = p.n + 1;
    GswCt c;
    c.w.assign(static_cast<std::size_t>(N) * cols, 0);
    if (m)
        for (unsigned b = 0; b < cols; ++b)
            for (unsigned d = 0; d < p.ell(); ++d) {
                std::size_t r = static_cast<std::size_t>(b) * p.ell() + d;
                c.w[r * cols + b] = (u64{1} << d) & p.mask();
            }
    return c;
}

int gsw_decrypt(const GswParams& p, const Value& sk, const GswCt& c) {
    // Read the row whose gadget entry is q/2 on the t = 1 coordinate.
    const unsigned row = p.n * p.ell() + (p.log2q - 1);
    u64 phi = row_phase(p, sk, c, row);
    std::int64_t d = centered(phi, p.q());
    // round(2d/q) mod 2, ties away from zero — same convention as the LWE family
    bool neg = d < 0;
    u64 a = static_cast<u64>(neg ? -d : d);
    u64 r = (4 * a + p.q()) / (2 * p.q());
    return static_cast<int>(r & 1);
}

u64 gsw_noise(const GswParams& p, const Value& sk, const GswCt& c) {
    const int m = gsw_decrypt(p, sk, c);
    u64 worst = 0;
    for (unsigned r = 0; r < p.big_n(); ++r) {
        u64 phi = row_phase(p, sk, c, r);
        if (m) phi = (phi - gadget_phase(p, sk, r)) & p.mask();
        std::int64_t e = centered(phi, p.q());
        u64 a = static_cast<u64>(e < 0 ? -e : e);
        worst = std::max(worst, a);
    }
    return worst;
}

GswCt gsw_add(const GswParams& p, const GswCt& a, const GswCt& b) {
    GswCt c;
    c.w.resize(a.w.size());
    for (std::size_t i = 0; i < a.w.size(); ++i) c.w[i] = (a.w[i] + b.w[i]) & p.mask();
    return c;
}

GswCt gsw_sub(const GswParams& p, const GswCt& a, const GswCt& b) {
    GswCt c;
    c.w.resize(a.w.size());
    for (std::size_t i = 0; i < a.w.size(); ++i) c.w[i] = (a.w[i] - b.w[i]) & p.mask();
    return c;
}

GswCt gsw_mult(const GswParams& p, const GswCt& a, const GswCt& b) {
    const unsigned N = p.big_n(), cols = p.n + 1, ell = p.ell();
    GswCt c;
    c.w.assign(static_cast<std::size_t>(N) * cols, 0);
    for (unsigned r = 0; r < N; ++r) {
        u64* out = &c.w[static_cast<std::size_t>(r) * cols];
        for (unsigned col = 0; col < cols; ++col) {
            u64 entry = a.w[static_cast<std::size_t>(r) * cols + col];
            // bit-decompose entry; digit d selects row col*ell + d of b
            for (unsigned d = 0; d < ell && entry; ++d, entry >>= 1) {
                if (!(entry & 1)) continue;
                const u64* brow = &b.w[(static_cast<std::size_t>(col) * ell + d) * cols];
                for (unsigned j = 0; j < cols; ++j) out[j] += brow[j];
            }
        }
        for (unsigned j = 0; j < cols; ++j) out[j] &= p.mask();
    }
    return c;
}

namespace {

struct TrackedCt {
    GswCt ct;
    u64 bound;
};

// Products route the noisier operand through the |message| side: the result
// bound is V_big + N * V_small for bit-valued wires.
TrackedCt tracked_mult(const GswParams& p, const TrackedCt& x, const TrackedCt& y) {
    const TrackedCt& big = x.bound >= y.bound ? x : y;
    const TrackedCt& small = x.bound >= y.bound ? y : x;
    return {gsw_mult(p, big.ct, small.ct),
            sat_add(big.bound, sat_mul(p.big_n(), small.bound))};
}

TrackedCt tracked_xor(const GswParams& p, const TrackedCt& x, const TrackedCt& y) {
    // On bit wires XOR(x,y) = x + y - 2xy.
    TrackedCt m = tracked_mult(p, x, y);
    GswCt two_m = gsw_add(p, m.ct, m.ct);
    GswCt s = gsw_add(p, x.ct, y.ct);
    return {gsw_sub(p, s, two_m),
            sat_add(sat_add(x.bound, y.bound), sat_add(m.bound, m.bound))};
}

} // namespace

u64 gsw_noise_bound(const GswParams& p, const BooleanCircuit& c,
                    std::span<const u64> input_bounds) {
    require(input_bounds.size() == c.inputs, Errc::ArityMismatch,
            "bound vector does not match circuit arity");
    std::vector<u64> v(c.wire_count(), 0);
    for (std::size_t i = 0; i < input_bounds.size(); ++i) v[i] = input_bounds[i];
    for (std::size_t g = 0; g < c.gates.size(); ++g) {
        const Gate& gate = c.gates[g];
        u64 out = 0;
        switch (gate.op) {
            case GateOp::Const0:
            case GateOp::Const1: out = 0; break;
            case GateOp::And: {
                u64 big = std::max(v[gate.a], v[gate.b]);
                u64 small = std::min(v[gate.a], v[gate.b]);
                out = sat_add(big, sat_mul(p.big_n(), small));
                break;
            }
            case GateOp::Xor: {
                u64 big = std::max(v[gate.a], v[gate.b]);
                u64 small = std::min(v[gate.a], v[gate.b]);
                u64 m = sat_add(big, sat_mul(p.big_n(), small));
                out = sat_add(sat_add(v[gate.a], v[gate.b]), sat_add(m, m));
                break;
            }
        }
        v[c.inputs + g] = out;
    }
    u64 worst = 0;
    for (std::uint32_t o : c.outputs) worst = std::max(worst, v[o]);
    return worst;
}

std::vector<GswCt> gsw_eval(const GswParams& p, const BooleanCircuit& c,
                            std::span<const GswCt> inputs,
                            std::span<const u64> input_bounds, u64* cert_bound) {
    require(inputs.size() == c.inputs, Errc::ArityMismatch, "eval arity mismatch");
    u64 bound = gsw_noise_bound(p, c, input_bounds);
    if (cert_bound) *cert_bound = bound;
    require(bound < p.q() / 4, Errc::CircuitOutOfClass,
            "worst-case noise " + std::to_string(bound) + " reaches q/4 = " +
                std::to_string(p.q() / 4) + " for " + gsw_name(p));

    std::vector<TrackedCt> w(c.wire_count());
    for (std::size_t i = 0; i < inputs.size(); ++i) w[i] = {inputs[i], input_bounds[i]};
    for (std::size_t g = 0; g < c.gates.size(); ++g) {
        const Gate& gate = c.gates[g];
        switch (gate.op) {
            case GateOp::Const0: w[c.inputs + g] = {gsw_trivial(p, 0), 0}; break;
            case GateOp::Const1: w[c.inputs + g] = {gsw_trivial(p, 1), 0}; break;
            case GateOp::And:
                w[c.inputs + g] = tracked_mult(p, w[gate.a], w[gate.b]);
                break;
            case GateOp::Xor:
                w[c.inputs + g] = tracked_xor(p, w[gate.a], w[gate.b]);
                break;
        }
    }
    std::vector<GswCt> out;
    out.reserve(c.outputs.size());
    for (std::uint32_t o : c.outputs) out.push_back(w[o].ct);
    return out;
}

Value gsw_to_value(const GswParams&, const GswCt& c, const std::string& tag) {
    return Value::leaf(tag, c.w);
}

GswCt gsw_from_value(const GswParams& p, const Value& v) {
    const std::size_t expect = static_cast<std::size_t>(p.big_n()) * (p.n + 1);
    require(v.is_leaf() && v.words().size() == expect, Errc::SpaceMismatch,
            "not a ciphertext matrix of " + gsw_name(p));
    GswCt c;
    c.w = v.words();
    for (u64& x : c.w) x &= p.mask();
    return c;
}

HomScheme make_gsw_scheme(const GswParams& p) {
    p.validate();
    const std::string name = gsw_name(p);
    const std::string mt = name + "/m";
    const std::string ct = name + "/ct";
    const std::string skt = name + "/sk";
    const GswParams params = p;

    Scheme base;
    base.name = name;
    base.plaintext = Space::residues(mt, 2);
    base.ciphertext = Space::samplable(ct, [params, ct](Rng& rng) {
        const std::size_t len = static_cast<std::size_t>(params.big_n()) * (params.n + 1);
        std::vector<u64> w(len);
        for (u64& x : w) x = rng.below(params.q());
        return Value::leaf(ct, std::move(w));
    });
    base.symmetric = true;
    base.keygen = [params, skt](const SecurityParameter&, Rng& rng) {
        std::vector<u64> s(params.n);
        for (u64& x : s) x = static_cast<u64>(rng.bit());
        Value sk = Value::leaf(skt, std::move(s));
        return KeyPair{sk, sk};
    };
    base.encrypt = [params, mt, ct](const Value& pk, const Value& m, Rng& rng) {
        check_tag(m, mt, "gsw encrypt");
        return gsw_to_value(params, gsw_encrypt(params, pk, static_cast<int>(m.word(0)), rng), ct);
    };
    base.decrypt = [params, mt, ct](const Value& sk, const Value& c) {
        check_tag(c, ct, "gsw decrypt");
        return Value::scalar(mt, static_cast<u64>(gsw_decrypt(params, sk, gsw_from_value(params, c))));
    };
    base.sk_bits = params.n;
    base.sk_to_bits = [params](const Value& sk) {
        std::vector<u8> bits(params.n);
        for (unsigned i = 0; i < params.n; ++i) bits[i] = static_cast<u8>(sk.word(i) & 1);
        return bits;
    };
    base.sk_from_bits = [params, skt](const std::vector<u8>& bits) {
        std::vector<u64> s(params.n);
        for (unsigned i = 0; i < params.n; ++i) s[i] = bits.at(i) & 1;
        return Value::leaf(skt, std::move(s));
    };
    base.sk_space = Space::bits(skt, params.n);
    base.pk_of_sk = [](const Value& sk) { return sk; };

    HomScheme h;
    h.base = base;
    h.keygen = [base](const SecurityParameter& lambda, Rng& rng) {
        KeyPair kp = base.keygen(lambda, rng);
        return HomKeys{kp.sk, kp.pk, Value::none()};
    };
    h.eval_ex = [params, ct](const Value&, const BooleanCircuit& c,
                             std::span<const Value> inputs, std::span<const u8> noiseless,
                             Rng&, u64* cert) {
        std::vector<GswCt> in;
        in.reserve(inputs.size());
        std::vector<u64> bounds(inputs.size(), params.noise);
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            check_tag(inputs[i], ct, "gsw eval");
            in.push_back(gsw_from_value(params, inputs[i]));
            if (i < noiseless.size() && noiseless[i]) bounds[i] = 0;
        }
        std::vector<GswCt> out = gsw_eval(params, c, in, bounds, cert);
        if (out.size() == 1) return gsw_to_value(params, out[0], ct);
        std::vector<Value> parts;
        parts.reserve(out.size());
        for (const GswCt& o : out) parts.push_back(gsw_to_value(params, o, ct));
        return Value::tuple(ct + "^out", std::move(parts));
    };
    h.eval = [ex = h.eval_ex](const Value& evk, const BooleanCircuit& c,
                              std::span<const Value> inputs, Rng& rng) {
        return ex(evk, c, inputs, {}, rng, nullptr);
    };
    h.trivial_encrypt = [params, ct](int bit) {
        return gsw_to_value(params, gsw_trivial(params, bit), ct);
    };
    h.evk_of = [](const Value&, const Value&, Rng&) { return Value::none(); };
    h.admit = [params](const BooleanCircuit& c, std::span<const u8> noiseless) {
        std::vector<u64> bounds(c.inputs, params.noise);
        for (std::size_t i = 0; i < noiseless.size() && i < bounds.size(); ++i)
            if (noiseless[i]) bounds[i] = 0;
        u64 bound = gsw_noise_bound(params, c, bounds);
        require(bound < params.q() / 4, Errc::CircuitOutOfClass,
                "worst-case noise " + std::to_string(bound) + " reaches q/4 for " +
                    gsw_name(params));
    };
    h.measure_noise = [params](const Value& sk, const Value& c) {
        return gsw_noise(params, sk, gsw_from_value(params, c));
    };
    h.evaluable.all = false;
    h.evaluable.max_depth = params.depth;
    h.compact_bound_bits =
        static_cast<std::size_t>(params.big_n()) * (params.n + 1) * params.log2q;
    h.ct_serialized_bits = [params](const Value& v) {
        // packed size: one log2q-bit word per matrix entry
        return v.flat_words().size() * params.log2q;
    };
    return h;
}

} // namespace bridgelab
