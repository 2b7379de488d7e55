#pragma once

#include <cstdint>

#include "bridgelab/scheme.hpp"

namespace bridgelab {

// Toy LWE over Z_2 plaintexts: ciphertexts (a, b) in Z_q^{n+1} with
// b = a.sk + m*q/2 + e. Symmetric (pk = sk) behind an encryption oracle.
// Two decryption conventions ship: rounding (additive family) and interval
// membership (modulus-switch family); see lwe_decrypt / lwe_threshold_decrypt.
struct LweParams {
    unsigned n = 1;         // dimension
    u64 q = 4;              // ciphertext modulus, even
    u64 noise_bound = 0;    // e drawn uniformly from [-noise_bound, noise_bound]

    void validate_base() const {
        require(n >= 1 && q >= 2 && q % 2 == 0, Errc::InvalidParams,
                "LWE needs n >= 1 and even q >= 2");
    }
};

// Centered representative of x mod q in (-q/2, q/2].
std::int64_t centered(u64 x, u64 q);

// Ciphertext as a raw word vector [a_0..a_{n-1}, b].
Value lwe_encrypt(const LweParams& p, const Value& sk, int m, Rng& rng);
// Rounding decryption: round(2*(b - a.sk)/q) mod 2, ties away from zero.
int lwe_decrypt(const LweParams& p, const Value& sk, const Value& c);
// Interval decryption: 0 iff centered(b - a.sk) lies in the open (-q/4, q/4).
int lwe_threshold_decrypt(const LweParams& p, const Value& sk, const Value& c);

// Additive-homomorphic scheme (rounding decryption). Requires 8B < q so that
// a sum of two fresh ciphertexts still decrypts.
Scheme make_lwe_scheme(const LweParams& p);
// Modulus-switch family member (interval decryption). Requires q = 2 (mod 4)
// and 4B < q.
Scheme make_lwe_threshold_scheme(const LweParams& p);
// No noise validation; for deliberately broken parameter demonstrations.
Scheme make_lwe_scheme_raw(const LweParams& p);

} // namespace bridgelab
