#pragma once

#include "bridgelab/circuit.hpp"
#include "bridgelab/scheme.hpp"

namespace bridgelab {

// Compiles iota(decrypt(sk, c)) into a boolean circuit over the concatenated
// bit representations (sk bits first, then ciphertext bits). Total on every
// bit pattern, so the compiled map is defined on the whole ciphertext space.
// iota_bit maps the decrypted message to the output bit.
BooleanCircuit compile_decryption_circuit(const Scheme& scheme,
                                          const std::function<u8(const Value& m)>& iota_bit);

// The restriction of the decryption map to a fixed ciphertext, synthesized
// directly from the 2^e key-space truth table. Equivalent to partially
// applying the compiled circuit, but does not need an enumerable ciphertext
// space — this is what lets a scheme recrypt its own ciphertexts.
BooleanCircuit dec_circuit_for_ciphertext(const Scheme& scheme,
                                          const std::function<u8(const Value& m)>& iota_bit,
                                          const Value& c);

} // namespace bridgelab
