#include <doctest.h>

#include <random>

#include "char2/minormaps.hpp"
#include "test_util.hpp"

using namespace char2;

TEST_CASE("alpha matches the displayed matrix") {
    auto f2 = FieldSpec::f2();
    auto [s, vars] = symbolic_sym_matrix(3, f2);
    auto a = alpha_map(s);
    CHECK(a.size() == 4);
    CHECK(a.entry(1, 2) == Poly::parse(f2, vars, "x11*x22 + x12^2"));
    CHECK(a.entry(1, 3) == Poly::parse(f2, vars, "x11*x33 + x13^2"));
    CHECK(a.entry(2, 3) == Poly::parse(f2, vars, "x22*x33 + x23^2"));
    CHECK(a.entry(1, 4) == Poly::parse(f2, vars, "x11"));
    CHECK(a.entry(2, 4) == Poly::parse(f2, vars, "x22"));
    CHECK(a.entry(3, 4) == Poly::parse(f2, vars, "x33"));
    CHECK(a.entry(4, 2) == a.entry(2, 4)); // alternating = symmetric in char 2
    CHECK(a.entry(2, 2).is_zero());
}

TEST_CASE("alpha on scalar matrices") {
    auto f2 = FieldSpec::f2();
    SymMatrix<Scalar> zero(2, Scalar::zero(f2));
    auto a0 = alpha_map(zero);
    for (unsigned i = 1; i <= 3; ++i)
        for (unsigned j = 1; j <= 3; ++j) CHECK(a0.entry(i, j).is_zero());

    SymMatrix<Scalar> id(2, Scalar::zero(f2));
    id.set(1, 1, Scalar::one(f2));
    id.set(2, 2, Scalar::one(f2));
    auto ai = alpha_map(id);
    CHECK(ai.entry(1, 2).is_one()); // 1*1 + 0^2
    CHECK(ai.entry(1, 3).is_one());
    CHECK(ai.entry(2, 3).is_one());

    CHECK_THROWS_AS(alpha_map(SymMatrix<Scalar>(2, Scalar::zero(FieldSpec::fp(3)))), Error);
}

TEST_CASE("beta matches the displayed matrix") {
    auto f2 = FieldSpec::f2();
    auto [a, vars] = symbolic_alt_matrix(4, f2);
    auto b = beta_map(a);
    CHECK(b.size() == 3);
    CHECK(b.entry(1, 1) == Poly::parse(f2, vars, "y14^2"));
    CHECK(b.entry(1, 2) == Poly::parse(f2, vars, "y12 + y14*y24"));
    CHECK(b.entry(2, 3) == Poly::parse(f2, vars, "y23 + y24*y34"));
    CHECK(b.entry(3, 3) == Poly::parse(f2, vars, "y34^2"));

    AltMatrix<Scalar> zero(4, Scalar::zero(f2));
    auto b0 = beta_map(zero);
    for (unsigned i = 1; i <= 3; ++i)
        for (unsigned j = 1; j <= 3; ++j) CHECK(b0.entry(i, j).is_zero());

    AltMatrix<Scalar> only14(4, Scalar::zero(f2));
    only14.set(1, 4, Scalar::one(f2));
    auto b14 = beta_map(only14);
    CHECK(b14.entry(1, 1).is_one());
    CHECK(b14.entry(2, 2).is_zero());
    CHECK(b14.entry(3, 3).is_zero());
    CHECK(b14.entry(1, 2).is_zero());
}

TEST_CASE("theorem verification") {
    CHECK(verify_theorem(1, FieldSpec::f2()).ok);
    CHECK(verify_theorem(3, FieldSpec::f2()).ok);
    CHECK(verify_theorem(5, FieldSpec::f2()).ok);
    CHECK(verify_theorem(3, FieldSpec::f2k(2)).ok);
    CHECK_THROWS_AS(verify_theorem(3, FieldSpec::fp(3)), Error);
}

TEST_CASE("determinant expansion verification") {
    CHECK(verify_det_expansion(2, FieldSpec::f2()).ok);
    CHECK(verify_det_expansion(3, FieldSpec::f2()).ok);
    CHECK(verify_det_expansion(6, FieldSpec::f2()).ok);
}

TEST_CASE("frobenius composition verification") {
    CHECK(verify_frobenius_composition(3, FieldSpec::f2()).ok);

    // on F2 scalars both compositions are the identity
    auto f2 = FieldSpec::f2();
    std::mt19937 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        auto s = testutil::random_sym(3, f2, rng);
        auto back = beta_map(alpha_map(s));
        for (unsigned i = 1; i <= 3; ++i)
            for (unsigned j = i; j <= 3; ++j) REQUIRE(back.entry(i, j) == s.entry(i, j));
    }
}

TEST_CASE("hyperdeterminant structure") {
    Poly h = hyperdeterminant();
    CHECK(h.term_count() == 12);
    std::map<std::string, int> multiset;
    for (auto& [m, c] : h.terms()) multiset[c.str()] += 1;
    CHECK(multiset.at("1") == 4);
    CHECK(multiset.at("-2") == 6);
    CHECK(multiset.at("4") == 2);

    auto z = FieldSpec::integer();
    std::vector<Scalar> corner;
    for (int v : {1, 0, 0, 0, 0, 0, 0, 1}) corner.push_back(Scalar::from_int(z, v));
    CHECK(h.eval(corner).is_one());

    std::vector<Scalar> ones(8, Scalar::one(z));
    CHECK(h.eval(ones).is_zero()); // 4 - 12 + 8

    std::vector<Scalar> witness;
    for (int v : {1, 0, 0, 1, 0, 1, -1, 0}) witness.push_back(Scalar::from_int(z, v));
    CHECK(h.eval(witness).as_mpz() < 0); // rules out a square over Q
}

TEST_CASE("hyperdeterminant mod 2") {
    Poly root = hyperdet_mod2_sqrt();
    CHECK(root.term_count() == 4);
    VarTablePtr z = z_coordinate_vars(3);
    CHECK(root == Poly::parse(FieldSpec::f2(), z,
                              "z000*z111 + z001*z110 + z010*z101 + z100*z011"));
    CHECK(root * root == reduce_mod2(hyperdeterminant()));

    // pullback along the minor map vanishes identically
    auto [s, vars] = symbolic_sym_matrix(3, FieldSpec::f2());
    auto minors = all_principal_minors(s);
    std::vector<Poly> images;
    for (IndexSet I = 0; I <= iset::full(3); ++I) images.push_back(minors.at(I));
    CHECK(root.substitute(images).is_zero());
}

TEST_CASE("minor and sub-Pfaffian vectors agree on scalars") {
    auto f4 = FieldSpec::f2k(2);
    std::mt19937 rng(88);
    for (int trial = 0; trial < 1000; ++trial) {
        auto s = testutil::random_sym(4, f4, rng);
        auto minors = all_principal_minors(s);
        auto pf = all_sub_pfaffians(alpha_map(s));
        for (IndexSet I = 0; I <= iset::full(4); ++I)
            REQUIRE(minors.at(I) == pf.at(tilde_index(I, 4)));
    }
}

TEST_CASE("degree bookkeeping") {
    auto f2 = FieldSpec::f2();
    unsigned n = 4;
    auto [s, vars] = symbolic_sym_matrix(n, f2);
    auto minors = all_principal_minors(s);
    auto pf = all_sub_pfaffians(alpha_map(s));
    for (IndexSet I = 1; I <= iset::full(n); ++I) {
        CHECK(minors.at(I).degree() == static_cast<uint32_t>(iset::size(I)));
        CHECK(pf.at(tilde_index(I, n)).degree() == static_cast<uint32_t>(iset::size(I)));
    }
}
