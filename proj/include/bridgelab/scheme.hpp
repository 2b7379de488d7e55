#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bridgelab/value.hpp"

namespace bridgelab {

struct SecurityParameter {
    unsigned lambda = 1;

    explicit SecurityParameter(unsigned l = 1) : lambda(l) {
        require(l >= 1, Errc::InvalidParams, "security parameter must be >= 1");
    }
};

struct KeyPair {
    Value sk;
    Value pk;
};

// A public-key encryption scheme as a bundle of procedures with declared
// plaintext/ciphertext spaces. Symmetric schemes keep pk = sk behind an
// encryption oracle: public_view() redacts the key wherever pk material is
// published (aux lists, graph-scheme keys, composite bridge keys).
struct Scheme {
    std::string name;
    Space plaintext;
    Space ciphertext;
    bool symmetric = false;
    std::vector<Value> aux_public;

    std::function<KeyPair(const SecurityParameter&, Rng&)> keygen;
    std::function<Value(const Value& pk, const Value& m, Rng&)> encrypt;
    std::function<Value(const Value& sk, const Value& c)> decrypt;

    // Canonical little-endian bit serialization of secret keys; length e is a
    // scheme constant. from_bits is total on {0,1}^e.
    std::size_t sk_bits = 0;
    std::function<std::vector<u8>(const Value& sk)> sk_to_bits;
    std::function<Value(const std::vector<u8>&)> sk_from_bits;

    // Fixed-width bit representation of ciphertexts where supported
    // (needed to compile decryption circuits). from_bits is total.
    std::size_t ct_bits = 0;
    std::function<std::vector<u8>(const Value& c)> ct_to_bits;
    std::function<Value(const std::vector<u8>&)> ct_from_bits;

    // Enumerable key space plus deterministic pk derivation, where meaningful
    // (used by exhaustive per-key checks at toy sizes).
    std::optional<Space> sk_space;
    std::function<Value(const Value& sk)> pk_of_sk;

    // Custom redaction for composite keys (graph schemes); by default a
    // symmetric scheme's pk is never shown.
    std::function<Value(const Value& pk)> public_view_fn;
    Value public_view(const Value& pk) const {
        if (public_view_fn) return public_view_fn(pk);
        return symmetric ? Value::none() : pk;
    }
};

// Fraction of trials where decrypt(encrypt(m)) != m; one keygen per run,
// messages sampled uniformly from the plaintext space.
double check_correctness(const Scheme& scheme, const SecurityParameter& lambda,
                         std::uint64_t trials, std::uint64_t seed);

// The k-th fiber power: k-tuples of plaintexts/ciphertexts under one key pair,
// componentwise encryption and decryption.
Scheme fiber_power(const Scheme& scheme, unsigned k);

// The same scheme with extra opaque public values appended.
Scheme augment(const Scheme& scheme, const std::vector<Value>& aux);

} // namespace bridgelab
