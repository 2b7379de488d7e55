#include <doctest.h>

#include "bridgelab/value.hpp"

using namespace bridgelab;

TEST_CASE("leaf and tuple values compare structurally") {
    Value a = Value::leaf("t", {1, 2, 3});
    Value b = Value::leaf("t", {1, 2, 3});
    Value c = Value::leaf("u", {1, 2, 3});
    CHECK(a == b);
    CHECK(a != c);
    Value t = Value::tuple("p", {a, c});
    CHECK(t.part(0) == a);
    CHECK(t.flat_words() == std::vector<u64>{1, 2, 3, 1, 2, 3});
}

TEST_CASE("tag checks reject foreign values") {
    Value a = Value::leaf("t", {0});
    CHECK_NOTHROW(check_tag(a, "t", "here"));
    CHECK_THROWS_AS(check_tag(a, "u", "here"), Error);
}

TEST_CASE("residue spaces enumerate 0..q-1") {
    Space z5 = Space::residues("z5", 5);
    CHECK(z5.cardinality() == 5);
    CHECK(z5.at(3).word(0) == 3);
    CHECK(z5.is_enumerable());
}

TEST_CASE("product spaces enumerate lexicographically, first component major") {
    Space z2 = Space::residues("z2", 2);
    Space z3 = Space::residues("z3", 3);
    Space prod = Space::product("p", {z2, z3});
    CHECK(prod.cardinality() == 6);
    // index 0 -> (0,0), 1 -> (0,1), 2 -> (0,2), 3 -> (1,0)
    CHECK(prod.at(1).part(1).word(0) == 1);
    CHECK(prod.at(3).part(0).word(0) == 1);
    CHECK(prod.at(3).part(1).word(0) == 0);
}

TEST_CASE("samplable-only spaces refuse enumeration") {
    Space s = Space::samplable("s", [](Rng& rng) { return Value::scalar("s", rng.next()); });
    CHECK(!s.is_enumerable());
    CHECK_THROWS_AS(s.cardinality(), Error);
    Rng rng(1);
    CHECK(s.sample(rng).tag() == "s");
}

TEST_CASE("bit spaces decode little-endian") {
    Space b3 = Space::bits("b3", 3);
    CHECK(b3.cardinality() == 8);
    Value v = b3.at(5); // 101
    CHECK(v.words() == std::vector<u64>{1, 0, 1});
}

TEST_CASE("derived rng streams are reproducible and distinct") {
    Rng a = Rng::derive(42, {1, 2});
    Rng b = Rng::derive(42, {1, 2});
    Rng c = Rng::derive(42, {1, 3});
    u64 x = a.next();
    CHECK(x == b.next());
    CHECK(x != c.next());
}

TEST_CASE("bounded sampling stays in range") {
    Rng rng(7);
    for (int i = 0; i < 1000; ++i) CHECK(rng.below(6) < 6);
    for (int i = 0; i < 1000; ++i) {
        auto v = rng.signed_below(3);
        CHECK(v >= -3);
        CHECK(v <= 3);
    }
}
