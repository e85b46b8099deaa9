#include <doctest.h>

#include <random>

#include "char2/minormaps.hpp"
#include "char2/quadideal.hpp"
#include "test_util.hpp"

using namespace char2;

TEST_CASE("sub-Pfaffian parametrizations") {
    auto f2 = FieldSpec::f2();
    auto p4 = subpfaffian_map_param(4, f2);
    auto qs4 = quadrics_vanishing(p4);
    REQUIRE(qs4.size() == 1);
    CHECK(qs4[0].to_poly() == hyperdet_mod2_sqrt());
    CHECK(verify_quadric_pullbacks(p4, qs4));

    auto p5 = subpfaffian_map_param(5, f2);
    auto qs5 = quadrics_vanishing(p5);
    CHECK(qs5.size() == 10);
    CHECK(verify_quadric_pullbacks(p5, qs5));
}

TEST_CASE("minor-map parametrization gives the same quadric") {
    auto f2 = FieldSpec::f2();
    auto qs = quadrics_vanishing(minor_map_param(3, f2));
    REQUIRE(qs.size() == 1);
    CHECK(qs[0].to_poly() == hyperdet_mod2_sqrt());
}

TEST_CASE("expected counts") {
    CHECK(expected_quadric_count(4) == 1);
    CHECK(expected_quadric_count(5) == 10);
    CHECK(expected_quadric_count(6) == 66);
}

TEST_CASE("tangential variety of a linear space is everything") {
    auto f2 = FieldSpec::f2();
    VarTablePtr params = make_vars({"x1", "x2", "x3"});
    std::vector<Poly> comps;
    for (uint32_t i = 0; i < 3; ++i) comps.push_back(Poly::variable(f2, params, i));
    Parametrization linear{f2, params, make_vars({"z1", "z2", "z3"}), comps};
    auto tang = tangential_param(linear);
    CHECK(tang.params->size() == 6);
    CHECK(quadrics_vanishing(tang).empty());
    auto span = linear_span(tang);
    CHECK(span.span_dim == 3);
    CHECK(span.vanishing_forms.empty());
}

TEST_CASE("tangential variety of the Segre threefold") {
    auto f2 = FieldSpec::f2();
    auto tang = tangential_param(segre_chart_p1p1p1(f2));
    auto qs = quadrics_vanishing(tang);
    REQUIRE(qs.size() == 1);
    CHECK(qs[0].to_poly() == hyperdet_mod2_sqrt());
}

TEST_CASE("tangential variety of LG(3,6)") {
    auto f2 = FieldSpec::f2();
    auto tang = tangential_param(plucker_chart_lg36(f2));
    auto span = linear_span(tang);
    CHECK(span.span_dim == 14);
    auto restricted = restrict_to_span(tang, span);
    auto qs = quadrics_vanishing(restricted);
    REQUIRE(qs.size() == 1);
    CHECK(bilinear_rank(qs[0]) == 8);
    auto locus = singular_locus_char2(qs[0]);
    CHECK(locus.proj_dim == 5);
    CHECK(verify_quadric_pullbacks(restricted, qs));
}

TEST_CASE("tangential variety of Gr(3,6)") {
    auto f2 = FieldSpec::f2();
    auto base = plucker_chart_gr36(f2);
    CHECK(linear_span(base).span_dim == 20); // no linear relations on the Grassmannian
    auto tang = tangential_param(base);
    auto span = linear_span(tang);
    CHECK(span.span_dim == 20);
    auto qs = quadrics_vanishing(restrict_to_span(tang, span));
    REQUIRE(qs.size() == 1);
    CHECK(singular_locus_char2(qs[0]).proj_dim == -1);
}

TEST_CASE("Plucker quadrics of Gr(3,6)") {
    auto f2 = FieldSpec::f2();
    auto qs = quadrics_vanishing(plucker_chart_gr36(f2));
    CHECK(qs.size() == 35); // standard-monomial count, independent of the field
    CHECK(verify_quadric_pullbacks(plucker_chart_gr36(f2), qs));
}

TEST_CASE("bilinear rank") {
    auto f2 = FieldSpec::f2();
    CHECK(bilinear_rank(QuadraticFormRep::from_poly(hyperdet_mod2_sqrt())) == 8);

    VarTablePtr v = make_vars({"z1", "z2", "z3", "z4"});
    CHECK(bilinear_rank(QuadraticFormRep::from_poly(Poly::parse(f2, v, "z1^2"))) == 0);
    CHECK(bilinear_rank(QuadraticFormRep::from_poly(Poly::parse(f2, v, "z1*z2"))) == 2);
}

TEST_CASE("bilinear rank is invariant under coordinate change") {
    auto f2 = FieldSpec::f2();
    std::mt19937 rng(606);
    Poly q = hyperdet_mod2_sqrt();
    VarTablePtr vars = q.vars();
    for (int trial = 0; trial < 10; ++trial) {
        // random invertible 8x8 over F2 by accumulation of row operations
        std::vector<std::vector<uint8_t>> t(8, std::vector<uint8_t>(8, 0));
        for (int i = 0; i < 8; ++i) t[i][i] = 1;
        for (int step = 0; step < 30; ++step) {
            unsigned a = rng() % 8, b = rng() % 8;
            if (a == b) continue;
            for (int c = 0; c < 8; ++c) t[a][c] ^= t[b][c];
        }
        std::vector<Poly> images;
        for (int i = 0; i < 8; ++i) {
            Poly img = Poly::zero(f2, vars);
            for (uint32_t j = 0; j < 8; ++j)
                if (t[i][j]) img = img + Poly::variable(f2, vars, j);
            images.push_back(std::move(img));
        }
        Poly moved = q.substitute(images);
        REQUIRE(bilinear_rank(QuadraticFormRep::from_poly(moved)) == 8);
    }
}

TEST_CASE("singular locus of simple forms") {
    auto f2 = FieldSpec::f2();
    VarTablePtr v = make_vars({"z1", "z2", "z3", "z4"});
    auto locus = singular_locus_char2(QuadraticFormRep::from_poly(Poly::parse(f2, v, "z1*z2")));
    CHECK(locus.proj_dim == 1); // the P^1 spanned by z3, z4
    CHECK(locus.basis.size() == 2);

    // full hyperbolic form in four variables: smooth
    auto smooth = singular_locus_char2(
        QuadraticFormRep::from_poly(Poly::parse(f2, v, "z1*z2 + z3*z4")));
    CHECK(smooth.proj_dim == -1);

    // z1^2 + z1*z2: radical is spanned by e3, e4 and Q vanishes there
    auto mixed = singular_locus_char2(
        QuadraticFormRep::from_poly(Poly::parse(f2, v, "z1^2 + z1*z2")));
    CHECK(mixed.proj_dim == 1);

    // z1^2 alone: the radical is everything, the locus is the hyperplane z1 = 0
    auto square = singular_locus_char2(QuadraticFormRep::from_poly(Poly::parse(f2, v, "z1^2")));
    CHECK(square.proj_dim == 2);
}

TEST_CASE("pullback verification catches wrong quadrics") {
    auto f2 = FieldSpec::f2();
    auto p = subpfaffian_map_param(4, f2);
    QuadraticFormRep bogus{f2, p.coords, {}};
    bogus.coeffs.emplace(std::make_pair(0u, 0u), Scalar::one(f2));
    CHECK(!verify_quadric_pullbacks(p, {bogus}));
}

TEST_CASE("budget guard") {
    auto f2 = FieldSpec::f2();
    VarTablePtr params = make_vars({"x"});
    std::vector<std::string> names;
    for (int i = 0; i < 40; ++i) names.push_back("z" + std::to_string(i));
    Parametrization p{f2, params, make_vars(names),
                      std::vector<Poly>(40, Poly::one(f2, params))};
    CHECK_THROWS_AS(quadrics_vanishing(p), Error); // 820 columns over budget
}
