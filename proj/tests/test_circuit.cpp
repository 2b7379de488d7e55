#include <doctest.h>

#include "bridgelab/circuit.hpp"
#include "bridgelab/registry.hpp"

using namespace bridgelab;

namespace {

std::vector<u8> bits_of(unsigned x, std::size_t n) {
    std::vector<u8> b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = (x >> i) & 1u;
    return b;
}

} // namespace

TEST_CASE("single gates") {
    CHECK(eval_boolean1(xor_circuit(), std::vector<u8>{1, 1}) == 0);
    CHECK(eval_boolean1(xor_circuit(), std::vector<u8>{1, 0}) == 1);
    CHECK(eval_boolean1(and_circuit(), std::vector<u8>{1, 1}) == 1);
}

TEST_CASE("two-gate circuit AND(XOR(x0,x1), x0)") {
    BooleanCircuit c;
    c.inputs = 2;
    c.gates = {Gate{GateOp::Xor, 0, 1}, Gate{GateOp::And, 2, 0}};
    c.outputs = {3};
    // truth-table oracle
    for (unsigned x = 0; x < 4; ++x) {
        auto b = bits_of(x, 2);
        CHECK(eval_boolean1(c, b) == ((b[0] ^ b[1]) & b[0]));
    }
    CHECK(eval_boolean1(c, std::vector<u8>{1, 0}) == 1);
}

TEST_CASE("full adder matches arithmetic on all 8 inputs") {
    BooleanCircuit fa = full_adder_circuit();
    CHECK(fa.gates.size() == 5);
    for (unsigned x = 0; x < 8; ++x) {
        auto b = bits_of(x, 3);
        unsigned total = b[0] + b[1] + b[2];
        auto out = eval_boolean(fa, b);
        CHECK(out[0] == (total & 1));
        CHECK(out[1] == ((total >> 1) & 1));
    }
}

TEST_CASE("arity mismatch is rejected") {
    CHECK_THROWS_AS(eval_boolean(xor_circuit(), std::vector<u8>{1}), Error);
}

TEST_CASE("depth counts op levels feeding outputs") {
    BooleanCircuit c = full_adder_circuit();
    CHECK(c.depth() == 3); // carry path: XOR -> AND -> XOR
    CHECK(identity_circuit(2).depth() == 0);
}

TEST_CASE("synthesis reproduces arbitrary truth tables") {
    Rng rng(11);
    for (int round = 0; round < 40; ++round) {
        std::size_t arity = 1 + rng.below(6);
        std::vector<u8> table(std::size_t{1} << arity);
        for (auto& t : table) t = static_cast<u8>(rng.bit());
        BooleanCircuit c = synthesize_from_truth_table(arity, std::span(&table, 1));
        CHECK(truth_table(c) == table);
    }
}

TEST_CASE("synthesis of constants and projections is compact") {
    std::vector<u8> zeros(8, 0);
    BooleanCircuit c = synthesize_from_truth_table(3, std::span(&zeros, 1));
    CHECK(c.gates.size() == 1); // a single constant gate
    CHECK(truth_table(c) == zeros);
}

TEST_CASE("partial application fixes trailing inputs and folds") {
    Rng rng(13);
    for (int round = 0; round < 30; ++round) {
        BooleanCircuit c = random_circuit(5, 12, rng);
        // fixing everything yields a constant circuit matching full evaluation
        std::vector<u8> all(5);
        for (auto& b : all) b = static_cast<u8>(rng.bit());
        BooleanCircuit folded = partial_apply(c, all);
        CHECK(folded.inputs == 0);
        CHECK(eval_boolean1(folded, {}) == eval_boolean1(c, all));

        // fixing a suffix agrees with the unfolded circuit on all remaining inputs
        std::vector<u8> suffix(all.begin() + 2, all.end());
        BooleanCircuit part = partial_apply(c, suffix);
        CHECK(part.inputs == 2);
        for (unsigned x = 0; x < 4; ++x) {
            auto head = bits_of(x, 2);
            std::vector<u8> full(head);
            full.insert(full.end(), suffix.begin(), suffix.end());
            CHECK(eval_boolean1(part, head) == eval_boolean1(c, full));
        }
    }
}

TEST_CASE("suffix longer than arity is rejected") {
    std::vector<u8> six(6, 0);
    CHECK_THROWS_AS(partial_apply(xor_circuit(), six), Error);
}

TEST_CASE("circuit composition plugs shared-input subcircuits") {
    BooleanCircuit inner1 = xor_circuit();
    BooleanCircuit inner2 = and_circuit();
    std::vector<BooleanCircuit> inner = {inner1, inner2};
    BooleanCircuit g = compose_circuits(xor_circuit(), inner);
    CHECK(g.inputs == 2);
    for (unsigned x = 0; x < 4; ++x) {
        auto b = bits_of(x, 2);
        u8 expect = (b[0] ^ b[1]) ^ (b[0] & b[1]); // = OR
        CHECK(eval_boolean1(g, b) == expect);
    }
}

TEST_CASE("ring lifting: the two-element-field equations hold literally") {
    for (u64 modulus : {u64{16}, u64{1} << 40, u64{0}}) {
        PlainRing ring{modulus};
        // xor table
        CHECK(ring.lift_xor(0, 0) == 0);
        CHECK(ring.lift_xor(0, 1) == 1);
        CHECK(ring.lift_xor(1, 0) == 1);
        CHECK(ring.lift_xor(1, 1) == 0); // 2*2 - 4
        // and table
        CHECK(ring.mul(0, 0) == 0);
        CHECK(ring.mul(0, 1) == 0);
        CHECK(ring.mul(1, 0) == 0);
        CHECK(ring.mul(1, 1) == 1);
    }
}

TEST_CASE("arithmetized circuits reproduce boolean evaluation on bit inputs") {
    Rng rng(17);
    PlainRing gsw_ring{u64{1} << 60};
    PlainRing small_ring{16};
    for (int round = 0; round < 100; ++round) {
        std::uint32_t arity = 1 + static_cast<std::uint32_t>(rng.below(8));
        BooleanCircuit c = random_circuit(arity, 8, rng);
        RingCircuit rc = arithmetize(c);
        for (unsigned x = 0; x < (1u << arity); ++x) {
            auto b = bits_of(x, arity);
            std::vector<u64> ring_in(b.begin(), b.end());
            u8 expect = eval_boolean1(c, b);
            CHECK(eval_ring(rc, gsw_ring, ring_in)[0] == expect);
            CHECK(eval_ring(rc, small_ring, ring_in, true)[0] == expect);
        }
    }
}

TEST_CASE("text serialization round-trips and desugars OR/NOT") {
    BooleanCircuit fa = full_adder_circuit();
    BooleanCircuit back = circuit_from_text(circuit_to_text(fa));
    CHECK(back == fa);

    BooleanCircuit with_or = circuit_from_text(
        "inputs 2\n"
        "g2 = OR g0 g1\n"
        "outputs g4\n");
    for (unsigned x = 0; x < 4; ++x) {
        auto b = bits_of(x, 2);
        CHECK(eval_boolean1(with_or, b) == (b[0] | b[1]));
    }
    BooleanCircuit with_not = circuit_from_text(
        "inputs 1\n"
        "g1 = NOT g0\n"
        "outputs g2\n");
    CHECK(eval_boolean1(with_not, std::vector<u8>{0}) == 1);
    CHECK(eval_boolean1(with_not, std::vector<u8>{1}) == 0);
}

TEST_CASE("json serialization round-trips") {
    BooleanCircuit fa = full_adder_circuit();
    CHECK(circuit_from_json(circuit_to_json(fa)) == fa);
}

TEST_CASE("malformed circuits are rejected") {
    CHECK_THROWS_AS(circuit_from_text("inputs 1\ng1 = XOR g0 g5\noutputs g1\n"), Error);
    BooleanCircuit no_outputs;
    no_outputs.inputs = 1;
    CHECK_THROWS_AS(no_outputs.validate(), Error);
}
