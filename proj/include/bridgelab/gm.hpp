#pragma once

#include "bridgelab/scheme.hpp"

namespace bridgelab {

// Goldwasser-Micali at toy primes: ciphertexts are the Jacobi-symbol-(+1)
// residues mod N = p*q'; m is hidden in quadratic residuosity. Every element
// of the ciphertext space is an encryption of some bit, so any bridge out of
// this scheme is complete.
struct GmParams {
    u64 p = 3;
    u64 q_prime = 7;
    u64 n() const { return p * q_prime; }

    // Smallest pseudo-square: Jacobi(z, N) = +1, non-residue mod p.
    u64 pseudo_square() const;
    void validate() const;
};

int jacobi(u64 a, u64 n);
u64 pow_mod(u64 base, u64 exp, u64 mod);
bool is_quadratic_residue_mod_prime(u64 a, u64 p);

u64 gm_encrypt(const GmParams& p, int m, Rng& rng);
int gm_decrypt(const GmParams& p, u64 c);

Scheme make_gm_scheme(const GmParams& p);

} // namespace bridgelab
