#pragma once

#include "bridgelab/bridge.hpp"
#include "bridgelab/dec_circuit.hpp"
#include "bridgelab/hom.hpp"

namespace bridgelab {

// Introspection record attached to recryption bridges.
struct GentryInfo {
    Scheme inner;
    HomScheme outer;
    KeyMode key_mode = KeyMode::independent;
    std::size_t key_bits = 0;
    bool fold_ciphertext = true;
    BooleanCircuit dec_circuit;
};

struct GentryBridgeSpec {
    Scheme inner;
    HomScheme outer;
    // Plaintext map from the inner message space into the outer one.
    std::function<Value(const Value& m)> iota;
    // independent: outer keys generated on their own (the recryption bridge
    // proper). shared: outer keys equal the inner ones; reports generated
    // under this mode carry circular_security_assumed.
    KeyMode key_mode = KeyMode::independent;
    // fold: specialize the compiled decryption circuit per ciphertext via
    // partial application. Otherwise feed the ciphertext bits as noiseless
    // public encodings next to the encrypted key bits.
    bool fold_ciphertext = true;
};

// The recryption bridge: bridge key = encryptions of the inner secret key
// bits under the outer scheme; conversion homomorphically evaluates the
// compiled inner decryption circuit. Complete by construction on every inner
// ciphertext — the checks verify rather than assume this.
Bridge gentry_bridge(const GentryBridgeSpec& spec);

// The bridge E^(r) -> E induced by a homomorphically evaluable single-output
// circuit: shared keys, bridge key = evaluation key, conversion = eval.
Bridge circuit_bridge(const HomScheme& h, const BooleanCircuit& circuit,
                      const std::string& label);

// ---------------------------------------------------------------------------
// Unrestricted-composition transform: keygen additionally encrypts the
// scheme's own key bits into the evaluation key; eval folds the input
// ciphertexts into the decryption circuit and evaluates on that key material,
// so the composition equation holds on arbitrary (garbage) inputs.

struct FcheScheme {
    HomScheme hom; // transformed scheme: shared Enc/Dec, new keygen/eval
    HomScheme raw; // the backend it was built from
};

FcheScheme fche_transform(const HomScheme& h);

// Raw eval followed by recryption of each output. Sequential circuit
// evaluation along fresh chains stays correct, but the composition equation
// on arbitrary inputs can still fail — this is the cautionary wrapper.
HomScheme bootstrap_wrap(const HomScheme& h);

using CircuitSampler = std::function<BooleanCircuit(Rng&)>;

struct FcheCheckResult {
    bool holds = true;
    std::uint64_t checked = 0;
    std::optional<BooleanCircuit> witness_circuit;
    std::vector<Value> witness_inputs;
};

// Samples circuits and arbitrary ciphertext tuples (uniform over the
// ciphertext space, fresh encryptions nowhere required) and checks
// decrypt(eval(C, cts)) = C(decrypt(cts)). Returns the first counterexample.
FcheCheckResult check_fche(const HomScheme& s, const CircuitSampler& sampler,
                           std::uint64_t trials, std::uint64_t seed);

// Exhaustive variant over all circuits with up to max_gates gates and arity
// in [1, max_arity], crossed with every ciphertext tuple. Needs an enumerable
// ciphertext space.
FcheCheckResult check_fche_exhaustive(const HomScheme& s, unsigned max_gates,
                                      unsigned max_arity);

// eval(C2, eval(C1, inputs)) with tuple plumbing between stages.
Value fche_compose_eval(const HomScheme& s, const Value& evk, const BooleanCircuit& c1,
                        const BooleanCircuit& c2, std::span<const Value> inputs, Rng& rng);

// ---------------------------------------------------------------------------
// Key-distribution samplers for the distinguisher harness: the real composite
// bridge-key distribution versus the variant whose key-bit encryptions are
// replaced by encryptions of zero. Requires the second factor to be a
// recryption bridge with independently generated keys.

struct PkDistribution {
    // tuple (pk1, pk2, bk_f, pk_H, bk_tail); pk components are public views
    std::function<Value(Rng&)> real;
    std::function<Value(Rng&)> zero_sub;
    // zero-substituted tail on a fixed (pk1, pk2, bk_f) prefix
    std::function<Value(const Value& prefix, Rng&)> zero_sub_fiber;
    std::function<Value(const Value& sample)> prefix_of;
    // test access: zero-substituted sample together with the outer secret key
    std::function<std::pair<Value, Value>(Rng&)> zero_sub_with_sk;
    std::size_t key_bits = 0;
};

PkDistribution zero_substituted_bridge_key(const Bridge& composed);

} // namespace bridgelab
