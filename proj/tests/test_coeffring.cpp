#include <doctest.h>

#include <random>

#include "char2/coeffring.hpp"
#include "test_util.hpp"

using namespace char2;
using testutil::random_scalar;

TEST_CASE("basic arithmetic per ring") {
    auto f2 = FieldSpec::f2();
    CHECK((Scalar::one(f2) + Scalar::one(f2)).is_zero());

    auto f3 = FieldSpec::fp(3);
    CHECK(Scalar::from_int(f3, 2).inv() == Scalar::from_int(f3, 2));

    Scalar half = Scalar::from_mpq(mpq_class(1, 2));
    Scalar neg_quarter = Scalar::from_mpq(mpq_class(-1, 4));
    CHECK((half * neg_quarter).str() == "-1/8");

    auto z = FieldSpec::integer();
    CHECK((Scalar::from_int(z, 6) * Scalar::from_int(z, -7)).str() == "-42");
}

TEST_CASE("fixed irreducible moduli") {
    CHECK(FieldSpec::f2k(2).modulus_mask() == 0x7);  // x^2+x+1
    CHECK(FieldSpec::f2k(3).modulus_mask() == 0xb);  // x^3+x+1
    CHECK(FieldSpec::f2k(4).modulus_mask() == 0x13); // x^4+x+1
    CHECK(FieldSpec::f2k(1).kind() == RingKind::F2);
    for (unsigned k = 2; k <= 16; ++k) {
        auto spec = FieldSpec::f2k(k);
        CHECK(spec.order() == (uint64_t{1} << k));
        // the generator x has x^(2^k) = x, pinning irreducibility of the modulus
        Scalar x = Scalar::from_bits(spec, 2);
        Scalar frob = x;
        for (unsigned i = 0; i < k; ++i) frob = frob * frob;
        CHECK(frob == x);
    }
}

TEST_CASE("frobenius and square roots") {
    auto f2 = FieldSpec::f2();
    CHECK(Scalar::one(f2).frobenius().is_one());
    CHECK(Scalar::zero(f2).frobenius().is_zero());
    CHECK(Scalar::one(f2).sqrt_char2().is_one());
    CHECK(Scalar::zero(f2).sqrt_char2().is_zero());

    auto f4 = FieldSpec::f2k(2);
    Scalar g = Scalar::from_bits(f4, 2);
    CHECK(g.frobenius() == Scalar::from_bits(f4, 3)); // g^2 = g + 1
    CHECK(Scalar::from_bits(f4, 3).sqrt_char2() == g);

    CHECK_THROWS_AS(Scalar::one(FieldSpec::fp(3)).frobenius(), Error);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(42);
    for (const char* name : {"f2", "f4", "f8", "f3", "q"}) {
        FieldSpec ring = FieldSpec::parse(name);
        for (int trial = 0; trial < 10000; ++trial) {
            Scalar a = random_scalar(ring, rng);
            Scalar b = random_scalar(ring, rng);
            Scalar c = random_scalar(ring, rng);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a + b == b + a);
            REQUIRE(a * b == b * a);
            if (!a.is_zero()) REQUIRE((a * a.inv()).is_one());
        }
    }
}

TEST_CASE("frobenius additivity and involution with sqrt") {
    std::mt19937 rng(7);
    for (const char* name : {"f2", "f4", "f8", "f16"}) {
        FieldSpec ring = FieldSpec::parse(name);
        for (int trial = 0; trial < 2000; ++trial) {
            Scalar a = random_scalar(ring, rng);
            Scalar b = random_scalar(ring, rng);
            REQUIRE((a + b).frobenius() == a.frobenius() + b.frobenius());
            REQUIRE(a.frobenius().sqrt_char2() == a);
            REQUIRE(a.sqrt_char2().frobenius() == a);
        }
    }
}

TEST_CASE("error paths") {
    CHECK_THROWS_AS(Scalar::one(FieldSpec::f2()) + Scalar::one(FieldSpec::fp(3)), Error);
    CHECK_THROWS_AS(Scalar::zero(FieldSpec::fp(5)).inv(), Error);
    CHECK_THROWS_AS(Scalar::from_int(FieldSpec::integer(), 2).inv(), Error);
    CHECK(Scalar::from_int(FieldSpec::integer(), -1).inv().str() == "-1");
    CHECK_THROWS_AS(FieldSpec::fp(4), Error);
    CHECK_THROWS_AS(FieldSpec::f2k(17), Error);
}

TEST_CASE("text round trips") {
    auto f4 = FieldSpec::f2k(2);
    for (uint64_t b = 0; b < 4; ++b) {
        Scalar s = Scalar::from_bits(f4, b);
        CHECK(Scalar::parse(f4, s.str()) == s);
    }
    auto q = FieldSpec::rational();
    Scalar r = Scalar::from_mpq(mpq_class(-22, 8));
    CHECK(r.str() == "-11/4");
    CHECK(Scalar::parse(q, r.str()) == r);
    CHECK(FieldSpec::parse("f16").ext_degree() == 4);
    CHECK(FieldSpec::parse("f7").prime() == 7);
}
