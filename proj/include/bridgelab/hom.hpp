#pragma once

#include <span>

#include "bridgelab/circuit.hpp"
#include "bridgelab/scheme.hpp"

namespace bridgelab {

struct HomKeys {
    Value sk;
    Value pk;
    Value evk;
};

// Which circuits a backend admits.
struct EvaluableClass {
    bool all = false;
    unsigned max_depth = 0;

    std::string describe() const {
        return all ? "all" : ("depth<=" + std::to_string(max_depth));
    }
};

// A homomorphic scheme: a PKE plus an evaluation algorithm over boolean
// circuits. `eval` admits a circuit only if its worst-case output noise under
// the fresh-input assumption stays decodable; feeding non-fresh ciphertexts
// silently voids that certificate, which is exactly what the composability
// demonstrations exploit.
struct HomScheme {
    Scheme base;
    std::function<HomKeys(const SecurityParameter&, Rng&)> keygen;
    // Single-output circuits yield one ciphertext; multi-output circuits a tuple.
    std::function<Value(const Value& evk, const BooleanCircuit&, std::span<const Value>,
                        Rng&)>
        eval;
    // Like eval, but marks a subset of inputs as noiseless public encodings
    // (empty mask = all fresh). Backends without the distinction alias eval.
    std::function<Value(const Value& evk, const BooleanCircuit&, std::span<const Value>,
                        std::span<const u8> noiseless_mask, Rng&, u64* cert_bound)>
        eval_ex;
    // Noiseless public encoding of a constant bit.
    std::function<Value(int bit)> trivial_encrypt;
    // Rebuilds the evaluation key for an existing key pair (the staged key
    // generation of circuit bridges needs this).
    std::function<Value(const Value& sk, const Value& pk, Rng&)> evk_of;
    // Construction-time admission: throws CircuitOutOfClass when the circuit
    // cannot be evaluated from fresh inputs (mask marks noiseless positions).
    // Null means everything is admitted.
    std::function<void(const BooleanCircuit&, std::span<const u8> noiseless_mask)> admit;
    // Worst-case noise magnitude of a ciphertext relative to its decryption
    // (diagnostic; 0 for exact backends).
    std::function<u64(const Value& sk, const Value& ct)> measure_noise;

    EvaluableClass evaluable;
    std::size_t compact_bound_bits = 0;
    std::function<std::size_t(const Value& ct)> ct_serialized_bits;
};

// Checked entry point: arity match, then backend eval.
Value hom_eval(const HomScheme& h, const Value& evk, const BooleanCircuit& c,
               std::span<const Value> inputs, Rng& rng);

// True iff every eval output across the sample circuits serializes to at most
// compact_bound_bits, using fresh encryptions of seeded random inputs.
bool compactness_check(const HomScheme& h, std::span<const BooleanCircuit> circuits,
                       u64 seed);

// Identity-encryption FHE over Z_2: ciphertext equals plaintext, a nominal
// one-bit key is ignored by Enc/Dec. Satisfies the unrestricted-composition
// equation exactly, which makes it the exhaustive framework oracle.
HomScheme make_trivial_fhe();

} // namespace bridgelab
