#pragma once

#include "bridgelab/hom.hpp"

namespace bridgelab {

// Leveled GSW-style bit FHE. Ciphertexts are N x (n+1) matrices over Z_q with
// q a power of two (wrap-around arithmetic stays exact after masking), gadget
// base 2, binary secret key. Worst-case noise is tracked per wire during
// evaluation; a circuit is admitted only if the bound from fresh inputs stays
// below q/4.
struct GswParams {
    unsigned n = 1;       // secret dimension
    unsigned log2q = 16;  // q = 2^log2q, log2q <= 62
    u64 noise = 1;        // fresh noise bound B, e uniform in [-B, B]
    unsigned depth = 1;   // advertised level budget D

    u64 q() const { return u64{1} << log2q; }
    u64 mask() const { return q() - 1; }
    unsigned ell() const { return log2q + 1; } // gadget digits, bits of q
    unsigned big_n() const { return (n + 1) * ell(); }

    void validate() const {
        require(n >= 1 && log2q >= 3 && log2q <= 62, Errc::InvalidParams,
                "GSW needs n >= 1 and 3 <= log2q <= 62");
    }
    // The advertised-budget inequality N^depth * B < q/8, evaluated exactly.
    bool respects_level_budget() const;
};

struct GswCt {
    std::vector<u64> w; // row-major, big_n rows by n+1 columns
};

struct NoiseBudgetReport {
    bool ok = false;
    unsigned required_log2q = 0; // smallest power-of-two modulus that passes
    u64 bound_log2_hint = 0;     // floor(log2) of N^depth*B, saturated
};

// ok iff N^depth(circuit) * B < q/8 with N fixed from params; otherwise the
// minimal power-of-two modulus that would pass with that same N.
NoiseBudgetReport noise_budget_check(const GswParams& p, const BooleanCircuit& c);

GswCt gsw_encrypt(const GswParams& p, const Value& sk, int m, Rng& rng);
// Noiseless public encoding m * G.
GswCt gsw_trivial(const GswParams& p, int m);
int gsw_decrypt(const GswParams& p, const Value& sk, const GswCt& c);
// Max row deviation of C - m*G from a key-orthogonal matrix, m = decrypt(c).
u64 gsw_noise(const GswParams& p, const Value& sk, const GswCt& c);

GswCt gsw_add(const GswParams& p, const GswCt& a, const GswCt& b);
GswCt gsw_sub(const GswParams& p, const GswCt& a, const GswCt& b);
// G^{-1}(a) * b; noise |m_b|*V_a + N*V_b for bit plaintexts.
GswCt gsw_mult(const GswParams& p, const GswCt& a, const GswCt& b);

// Worst-case output noise of the circuit on inputs with the given bounds
// (bit-plaintext wires assumed). Saturating arithmetic.
u64 gsw_noise_bound(const GswParams& p, const BooleanCircuit& c,
                    std::span<const u64> input_bounds);

// Gate-by-gate homomorphic evaluation; throws CircuitOutOfClass if the
// worst-case bound from the given input bounds reaches q/4.
std::vector<GswCt> gsw_eval(const GswParams& p, const BooleanCircuit& c,
                            std::span<const GswCt> inputs,
                            std::span<const u64> input_bounds, u64* cert_bound);

Value gsw_to_value(const GswParams& p, const GswCt& c, const std::string& tag);
GswCt gsw_from_value(const GswParams& p, const Value& v);

HomScheme make_gsw_scheme(const GswParams& p);

} // namespace bridgelab
