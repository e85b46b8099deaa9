#include <doctest.h>

#include <random>
#include <set>

#include "char2/freudenthal.hpp"
#include "char2/matforms.hpp"
#include "char2/minormaps.hpp"
#include "char2/quadideal.hpp"
#include "test_util.hpp"

using namespace char2;

namespace {

JordanElement diag_const(std::initializer_list<long> vals) {
    auto q = FieldSpec::rational();
    auto vars = make_vars({});
    JordanElement a{JordanModel::Diagonal, {}};
    for (long v : vals) a.entries.push_back(Poly::constant(Scalar::from_int(q, v), vars));
    return a;
}

JordanElement random_jordan(JordanModel model, const VarTablePtr& vars, std::mt19937& rng) {
    auto q = FieldSpec::rational();
    JordanElement a{model, {}};
    size_t count = model == JordanModel::Diagonal ? 3 : 6;
    for (size_t i = 0; i < count; ++i)
        a.entries.push_back(Poly::constant(testutil::random_scalar(q, rng), vars));
    return a;
}

} // namespace

TEST_CASE("jordan norm") {
    CHECK(jordan_norm(diag_const({1, 1, 1})).constant_term().is_one());
    CHECK(jordan_norm(diag_const({2, 3, 5})).constant_term() ==
          Scalar::from_int(FieldSpec::rational(), 30));

    // symbolic symmetric model: the determinant with the classical 2xyz term
    auto q = FieldSpec::rational();
    VarTablePtr v = make_vars({"a11", "a12", "a13", "a22", "a23", "a33"});
    JordanElement a{JordanModel::Sym3, {}};
    for (uint32_t i = 0; i < 6; ++i) a.entries.push_back(Poly::variable(q, v, i));
    CHECK(jordan_norm(a) ==
          Poly::parse(q, v,
                      "a11*a22*a33 - a11*a23^2 - a22*a13^2 - a33*a12^2 + 2*a12*a13*a23"));

    JordanElement id{JordanModel::Sym3, {}};
    VarTablePtr empty = make_vars({});
    for (const char* e : {"1", "0", "0", "1", "0", "1"})
        id.entries.push_back(Poly::constant(Scalar::parse(q, e), empty));
    CHECK(jordan_norm(id).constant_term().is_one());
}

TEST_CASE("jordan sharp") {
    auto q = FieldSpec::rational();
    VarTablePtr v = make_vars({"a", "b", "c"});
    JordanElement diag{JordanModel::Diagonal,
                       {Poly::variable(q, v, 0), Poly::variable(q, v, 1),
                        Poly::variable(q, v, 2)}};
    auto sharp = jordan_sharp(diag);
    CHECK(sharp.entries[0] == Poly::parse(q, v, "b*c"));
    CHECK(sharp.entries[1] == Poly::parse(q, v, "a*c"));
    CHECK(sharp.entries[2] == Poly::parse(q, v, "a*b"));

    // sharp of sharp multiplies by the norm
    std::mt19937 rng(909);
    VarTablePtr empty = make_vars({});
    for (int trial = 0; trial < 25; ++trial) {
        for (JordanModel model : {JordanModel::Diagonal, JordanModel::Sym3}) {
            JordanElement a = random_jordan(model, empty, rng);
            JordanElement twice = jordan_sharp(jordan_sharp(a));
            Poly norm = jordan_norm(a);
            for (size_t i = 0; i < a.entries.size(); ++i)
                REQUIRE(twice.entries[i] == norm * a.entries[i]);
        }
    }
}

TEST_CASE("trace pairing") {
    CHECK(jordan_pairing(diag_const({1, 2, 3}), diag_const({1, 1, 1})).constant_term() ==
          Scalar::from_int(FieldSpec::rational(), 6));

    // the paired symbolic display carries factors of two off the diagonal
    auto pair = make_fts_pair_symbolic(JordanModel::Sym3);
    Poly p = jordan_pairing(pair.u.A, pair.v.A);
    Poly expected = Poly::parse(
        FieldSpec::rational(), pair.vars,
        "a11*c11 + a22*c22 + a33*c33 + 2*a12*c12 + 2*a13*c13 + 2*a23*c23");
    CHECK(p == expected);

    // (A, A#) = 3 N(A)
    std::mt19937 rng(1010);
    VarTablePtr empty = make_vars({});
    for (int trial = 0; trial < 25; ++trial) {
        JordanElement a = random_jordan(JordanModel::Diagonal, empty, rng);
        REQUIRE(jordan_pairing(a, jordan_sharp(a)) ==
                jordan_norm(a) * Scalar::from_int(FieldSpec::rational(), 3));
    }
}

TEST_CASE("symplectic form") {
    auto pair = make_fts_pair_symbolic(JordanModel::Sym3);
    Poly e = fts_symplectic(pair.u, pair.v);
    Poly expected = Poly::parse(
        FieldSpec::rational(), pair.vars,
        "a11*d11 - b11*c11 + a22*d22 - b22*c22 + a33*d33 - b33*c33"
        " + 2*a12*d12 - 2*b12*c12 + 2*a13*d13 - 2*b13*c13 + 2*a23*d23 - 2*b23*c23"
        " + a*d - b*c");
    CHECK(e == expected);
    CHECK(fts_symplectic(pair.u, pair.u).is_zero()); // alternating
    CHECK(fts_symplectic(pair.v, pair.u) == -e);

    auto dpair = make_fts_pair_symbolic(JordanModel::Diagonal);
    CHECK(fts_symplectic(dpair.u, dpair.u).is_zero());
}

TEST_CASE("quartic for the diagonal model is the hyperdeterminant") {
    auto sym = make_fts_symbolic(JordanModel::Diagonal);
    Poly quartic = fts_quartic(sym.u);
    CHECK(quartic.term_count() == 12);
    CHECK(diagonal_quartic_as_hyperdet(quartic) ==
          to_ring(hyperdeterminant(), FieldSpec::rational()));

    // G'(1, (1,1,1), (1,1,1), 1) = -12 + 4 + 4 + 4
    std::vector<Scalar> ones(8, Scalar::one(FieldSpec::rational()));
    CHECK(quartic.eval(ones).is_zero());

    auto m2 = fts_quartic_mod2(sym.u);
    CHECK(m2.root.term_count() == 4);
}

TEST_CASE("quartic for the symmetric model") {
    auto sym = make_fts_symbolic(JordanModel::Sym3);
    Poly quartic = fts_quartic(sym.u);
    CHECK(quartic.term_count() == 44);

    auto m2 = fts_quartic_mod2(sym.u);
    CHECK(m2.root ==
          Poly::parse(FieldSpec::f2(), sym.vars, "a11*b11 + a22*b22 + a33*b33 + a*b"));
    // the six off-diagonal coordinates drop out of the reduction
    for (auto& [mono, c] : m2.root.terms())
        for (auto& [v, e] : mono.factors()) {
            const std::string& name = sym.vars->name(v);
            CHECK((name == "a" || name == "b" || name == "a11" || name == "a22" ||
                   name == "a33" || name == "b11" || name == "b22" || name == "b33"));
        }
    // and its rank inside the 14-variable ambient space is 8
    CHECK(bilinear_rank(QuadraticFormRep::from_poly(m2.root)) == 8);
}

TEST_CASE("the mod-2 root polarizes to the symplectic form") {
    for (JordanModel model : {JordanModel::Diagonal, JordanModel::Sym3}) {
        auto pair = make_fts_pair_symbolic(model);

        FTSElement sum{pair.u.a + pair.v.a,
                       JordanElement{model, {}},
                       JordanElement{model, {}},
                       pair.u.b + pair.v.b};
        for (size_t i = 0; i < pair.u.A.entries.size(); ++i) {
            sum.A.entries.push_back(pair.u.A.entries[i] + pair.v.A.entries[i]);
            sum.B.entries.push_back(pair.u.B.entries[i] + pair.v.B.entries[i]);
        }
        auto root_of = [&](const FTSElement& e) {
            return jordan_pairing(e.A, e.B) - e.a * e.b;
        };
        Poly polar = root_of(sum) - root_of(pair.u) - root_of(pair.v);
        CHECK(reduce_mod2(polar) == reduce_mod2(fts_symplectic(pair.u, pair.v)));
    }
}

TEST_CASE("the 56-variable quartic") {
    Poly j = e7_quartic();
    CHECK(j.term_count() == 1036);
    std::set<std::string> seen;
    for (auto& [m, c] : j.terms()) seen.insert(c.str());
    std::set<std::string> allowed{"1", "-1", "1/2", "-1/2", "-1/4"};
    for (auto& c : seen) CHECK(allowed.count(c) == 1);

    // 4J is integral, J itself is not
    CHECK_NOTHROW(reduce_mod2(j, 4));
    CHECK_THROWS_AS(reduce_mod2(j, 1), Error);

    auto m2 = e7_quartic_mod2();
    CHECK(m2.reduced.term_count() == 28);
    CHECK(m2.root.term_count() == 28);
    CHECK(m2.root * m2.root == m2.reduced);
    // every reduced term is a square pair x_ij^2 y_ij^2
    for (auto& [mono, c] : m2.reduced.terms()) {
        REQUIRE(mono.factors().size() == 2);
        CHECK(mono.factors()[0].second == 2);
        CHECK(mono.factors()[1].second == 2);
        CHECK(mono.factors()[1].first == mono.factors()[0].first + 28);
    }
}

TEST_CASE("pfaffian squares to the determinant on the 8x8 symbolic matrix") {
    auto q = FieldSpec::rational();
    auto [x, vars] = symbolic_alt_matrix(8, q);
    Poly pf = pfaffian(x);
    CHECK(pf.term_count() == 105);
    CHECK(pf * pf == det_division_free(x));
}

TEST_CASE("model mismatches are rejected") {
    auto d = make_fts_symbolic(JordanModel::Diagonal);
    auto s = make_fts_symbolic(JordanModel::Sym3);
    CHECK_THROWS_AS(jordan_pairing(d.u.A, s.u.A), Error);
}
