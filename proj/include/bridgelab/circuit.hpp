#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bridgelab/error.hpp"
#include "bridgelab/rng.hpp"
#include "bridgelab/value.hpp"

namespace bridgelab {

// Gate-level multi-output circuit over XOR/AND. Explicit constant gates are
// allowed so partial application can fold fixed inputs. Wires 0..inputs-1 are
// the inputs; gate g drives wire inputs+g. Gates may only reference earlier
// wires, so the graph is acyclic by construction.
enum class GateOp : u8 { Xor, And, Const0, Const1 };

struct Gate {
    GateOp op;
    std::uint32_t a = 0;
    std::uint32_t b = 0;
};

struct BooleanCircuit {
    std::uint32_t inputs = 0;
    std::vector<Gate> gates;
    std::vector<std::uint32_t> outputs;

    std::uint32_t wire_count() const {
        return inputs + static_cast<std::uint32_t>(gates.size());
    }
    std::size_t arity() const { return inputs; }
    std::size_t output_count() const { return outputs.size(); }

    // Checks wire ranges and that outputs are nonempty.
    void validate() const;
    // Longest op-path feeding any output wire (inputs and constants count 0).
    std::uint32_t depth() const;

    bool operator==(const BooleanCircuit& o) const {
        if (inputs != o.inputs || outputs != o.outputs || gates.size() != o.gates.size())
            return false;
        for (std::size_t i = 0; i < gates.size(); ++i)
            if (gates[i].op != o.gates[i].op || gates[i].a != o.gates[i].a ||
                gates[i].b != o.gates[i].b)
                return false;
        return true;
    }
};

// Plain gate-by-gate evaluation over bits.
std::vector<u8> eval_boolean(const BooleanCircuit& c, std::span<const u8> bits);
// Single-output convenience.
u8 eval_boolean1(const BooleanCircuit& c, std::span<const u8> bits);

// Incremental builder with hash-consing of structurally equal gates.
class CircuitBuilder {
public:
    explicit CircuitBuilder(std::uint32_t inputs) { c_.inputs = inputs; }

    std::uint32_t input(std::uint32_t i) const;
    std::uint32_t constant(bool one);
    std::uint32_t gate_xor(std::uint32_t a, std::uint32_t b);
    std::uint32_t gate_and(std::uint32_t a, std::uint32_t b);
    std::uint32_t gate_not(std::uint32_t a) { return gate_xor(a, constant(true)); }

    void set_outputs(std::vector<std::uint32_t> outs) { c_.outputs = std::move(outs); }
    BooleanCircuit take();

private:
    std::uint32_t emit(GateOp op, std::uint32_t a, std::uint32_t b);

    BooleanCircuit c_;
    // key: op | a | b packed
    std::vector<std::pair<std::uint64_t, std::uint32_t>> cse_;
};

// Fixes the trailing `suffix` inputs to constants and constant-folds the
// result. The remaining arity is c.inputs - suffix.size().
BooleanCircuit partial_apply(const BooleanCircuit& c, std::span<const u8> suffix_bits);

// Plugs the single-output circuits `inner[i]` (all sharing one input vector)
// into the inputs of `outer`. Result arity = common arity of the inner
// circuits; result outputs = outer's outputs.
BooleanCircuit compose_circuits(const BooleanCircuit& outer,
                                std::span<const BooleanCircuit> inner);

// Logic synthesis from truth tables via Shannon expansion with shared
// subfunctions. tables[o] lists 2^arity output bits, input 0 = lowest index
// bit of the table position.
BooleanCircuit synthesize_from_truth_table(std::size_t arity,
                                           std::span<const std::vector<u8>> tables);

// Truth table of a single-output circuit (arity <= 20 guard).
std::vector<u8> truth_table(const BooleanCircuit& c, std::size_t output_index = 0);

// The identity circuit on `arity` wires.
BooleanCircuit identity_circuit(std::uint32_t arity);

// Seeded random circuit for property tests: XOR/AND gates over earlier wires.
BooleanCircuit random_circuit(std::uint32_t arity, std::uint32_t n_gates, Rng& rng,
                              std::uint32_t n_outputs = 1);

// ---------------------------------------------------------------------------
// Arithmetization into a ring: XOR(x,y) becomes 2(x+y) - (x+y)^2, AND(x,y)
// becomes x*y, and every output is wrapped in an equality-test-with-1 marker.
// On inputs restricted to {0,1} the lifted circuit reproduces the boolean
// evaluation exactly, so the equality test compiles to the identity wire; a
// literal ring-equality fallback exists for plaintext debugging only.

struct PlainRing {
    u64 modulus = 0; // 0 means arithmetic mod 2^64

    u64 reduce(u64 x) const { return modulus ? x % modulus : x; }
    u64 add(u64 x, u64 y) const { return reduce(x + y); }
    u64 sub(u64 x, u64 y) const { return modulus ? (x + modulus - y % modulus) % modulus : x - y; }
    u64 mul(u64 x, u64 y) const { return reduce(x * y); }
    u64 lift_xor(u64 x, u64 y) const {
        u64 s = add(x, y);
        return sub(add(s, s), mul(s, s));
    }
};

struct RingCircuit {
    BooleanCircuit source; // structurally isomorphic gate graph
};

RingCircuit arithmetize(const BooleanCircuit& c);

// Evaluates the lifted circuit over the given ring. With
// literal_equality_test, outputs are mapped through [x = 1] -> {0,1};
// otherwise raw ring values are returned (the structural reading).
std::vector<u64> eval_ring(const RingCircuit& rc, const PlainRing& ring,
                           std::span<const u64> inputs,
                           bool literal_equality_test = false);

// ---------------------------------------------------------------------------
// Serialization: line-oriented text ("g7 = AND g3 g5") and a JSON variant.
// NOT/OR appearing in the text form are desugared to XOR/AND at parse.

std::string circuit_to_text(const BooleanCircuit& c);
BooleanCircuit circuit_from_text(const std::string& text);
std::string circuit_to_json(const BooleanCircuit& c);
BooleanCircuit circuit_from_json(const std::string& json_text);

} // namespace bridgelab
