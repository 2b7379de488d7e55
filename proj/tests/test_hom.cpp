#include <doctest.h>

#include "bridgelab/gentry.hpp"
#include "bridgelab/hom.hpp"
#include "bridgelab/registry.hpp"

using namespace bridgelab;

TEST_CASE("trivial backend evaluates circuits literally on the ciphertext bits") {
    HomScheme h = make_trivial_fhe();
    Rng rng(1);
    HomKeys keys = h.keygen(SecurityParameter{}, rng);
    const std::string mt = h.base.plaintext.tag();

    Rng crng(2);
    for (int round = 0; round < 50; ++round) {
        BooleanCircuit c = random_circuit(3, 6, crng);
        std::vector<u8> bits = {static_cast<u8>(crng.bit()), static_cast<u8>(crng.bit()),
                                static_cast<u8>(crng.bit())};
        std::vector<Value> cts;
        for (u8 b : bits) cts.push_back(h.base.encrypt(keys.pk, Value::scalar(mt, b), rng));
        Value out = hom_eval(h, keys.evk, c, cts, rng);
        CHECK((out.word(0) & 1) == eval_boolean1(c, bits));
    }
}

TEST_CASE("identity-wire circuit returns a ciphertext of the input plaintext") {
    HomScheme h = make_trivial_fhe();
    Rng rng(3);
    HomKeys keys = h.keygen(SecurityParameter{}, rng);
    Value m = h.base.plaintext.at(1);
    Value c = h.base.encrypt(keys.pk, m, rng);
    std::vector<Value> in = {c};
    Value out = hom_eval(h, keys.evk, identity_circuit(1), in, rng);
    CHECK(h.base.decrypt(keys.sk, out) == m);
}

TEST_CASE("arity mismatches are rejected") {
    HomScheme h = make_trivial_fhe();
    Rng rng(4);
    HomKeys keys = h.keygen(SecurityParameter{}, rng);
    std::vector<Value> one = {h.trivial_encrypt(1)};
    CHECK_THROWS_AS(hom_eval(h, keys.evk, xor_circuit(), one, rng), Error);
}

TEST_CASE("trivial backend satisfies the composition equation exhaustively") {
    // every circuit of up to 3 gates (arity up to 2) x every ciphertext tuple
    FcheCheckResult res = check_fche_exhaustive(make_trivial_fhe(), 3, 2);
    CHECK(res.holds);
    CHECK(res.checked > 1000);
}

TEST_CASE("compactness: constant-size outputs pass, concatenating mock fails") {
    HomScheme h = make_trivial_fhe();
    std::vector<BooleanCircuit> sample = {xor_circuit(), and_circuit(),
                                          adder_sum_circuit()};
    CHECK(compactness_check(h, sample, 1));

    // mock backend whose output grows with the number of inputs
    HomScheme mock = h;
    mock.eval = [ct = h.base.ciphertext.tag()](const Value&, const BooleanCircuit&,
                                               std::span<const Value> inputs, Rng&) {
        std::vector<Value> copy(inputs.begin(), inputs.end());
        return Value::tuple(ct + "^concat", std::move(copy));
    };
    mock.eval_ex = [ev = mock.eval](const Value& evk, const BooleanCircuit& c,
                                    std::span<const Value> in, std::span<const u8>,
                                    Rng& rng, u64*) { return ev(evk, c, in, rng); };
    mock.ct_serialized_bits = [](const Value& v) { return v.flat_words().size(); };
    CHECK(!compactness_check(mock, sample, 1));
}
