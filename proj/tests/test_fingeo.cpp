#include <doctest.h>

#include <random>

#include "char2/fingeo.hpp"
#include "test_util.hpp"

using namespace char2;

namespace {

// e restricted to a subspace basis
bool is_lagrangian(const Fq& f, const SubspaceRep& w) {
    unsigned n = w.m / 2;
    for (size_t i = 0; i < w.basis.size(); ++i)
        for (size_t j = 0; j < w.basis.size(); ++j) {
            uint8_t acc = 0;
            for (unsigned k = 0; k < n; ++k) {
                acc = f.add(acc, f.mul(w.basis[i][k], w.basis[j][k + n]));
                acc = f.sub(acc, f.mul(w.basis[i][k + n], w.basis[j][k]));
            }
            if (acc != 0) return false;
        }
    return true;
}

uint8_t quad_of(const Fq& f, const FqVec& x) {
    unsigned m = static_cast<unsigned>(x.size() / 2);
    uint8_t acc = 0;
    for (unsigned i = 0; i < m; ++i) acc = f.add(acc, f.mul(x[i], x[i + m]));
    return acc;
}

} // namespace

TEST_CASE("field tables agree with the scalar layer") {
    Fq f4(4);
    auto spec = FieldSpec::f2k(2);
    for (unsigned a = 0; a < 4; ++a)
        for (unsigned b = 0; b < 4; ++b) {
            CHECK(f4.mul(a, b) == (Scalar::from_bits(spec, a) * Scalar::from_bits(spec, b)).bits());
            CHECK(f4.add(a, b) == (Scalar::from_bits(spec, a) + Scalar::from_bits(spec, b)).bits());
        }
    Fq f3(3);
    CHECK(f3.neg(1) == 2);
    CHECK(f3.inv(2) == 2);
}

TEST_CASE("canonical representatives") {
    Fq f(2);
    SubspaceRep a = make_subspace(f, 4, {{1, 0, 1, 0}, {0, 1, 1, 1}});
    SubspaceRep b = make_subspace(f, 4, {{1, 1, 0, 1}, {0, 1, 1, 1}});
    CHECK(a == b); // same span, different spanning sets
    CHECK(a.dim() == 2);
    CHECK(subspace_contains(f, a, {1, 1, 0, 1}));
    CHECK(!subspace_contains(f, a, {1, 0, 0, 0}));
}

TEST_CASE("lagrangian counts against the brute-force oracle") {
    CHECK(enumerate_lagrangian(1, 2).size() == 3); // every line is isotropic

    for (unsigned n : {2u}) {
        for (unsigned q : {2u, 3u}) {
            Fq f(q);
            auto structured = enumerate_lagrangian(n, q);
            std::set<SubspaceRep> brute;
            for (const SubspaceRep& w : enumerate_all_subspaces(n, 2 * n, q))
                if (is_lagrangian(f, w)) brute.insert(w);
            REQUIRE(structured == brute);
        }
    }
    {
        Fq f(2);
        auto structured = enumerate_lagrangian(3, 2);
        CHECK(structured.size() == 135);
        std::set<SubspaceRep> brute;
        for (const SubspaceRep& w : enumerate_all_subspaces(3, 6, 2))
            if (is_lagrangian(f, w)) brute.insert(w);
        REQUIRE(structured == brute);
    }
    CHECK(enumerate_lagrangian(2, 2).size() == 15);
    CHECK(enumerate_lagrangian(2, 3).size() == 40);
    for (const SubspaceRep& w : enumerate_lagrangian(2, 4)) {
        Fq f(4);
        CHECK(is_lagrangian(f, w));
    }
}

TEST_CASE("spinor families") {
    // m = 2: six maximal isotropics in two families of three
    {
        Fq f(2);
        auto fam = enumerate_spinor_even(2, 2);
        CHECK(fam.size() == 3);
        unsigned isotropic_planes = 0;
        for (const SubspaceRep& w : enumerate_all_subspaces(2, 4, 2)) {
            bool iso = true;
            for (auto& r : w.basis) iso = iso && quad_of(f, r) == 0;
            // polarization on the two basis vectors
            if (iso && w.dim() == 2) {
                FqVec sum(4);
                for (int c = 0; c < 4; ++c) sum[c] = f.add(w.basis[0][c], w.basis[1][c]);
                iso = quad_of(f, sum) == 0;
            }
            if (iso) ++isotropic_planes;
        }
        CHECK(isotropic_planes == 6);
        // the alternating chart contributes q^(m(m-1)/2) = 2 members
        unsigned chart = 0;
        for (uint8_t y : {0, 1}) {
            SubspaceRep wy = spinor_chart_point(f, {{0, y}, {y, 0}});
            CHECK(fam.count(wy) == 1);
            ++chart;
        }
        CHECK(chart == 2);
    }
    CHECK(enumerate_spinor_even(3, 2).size() == 15);  // = |LG(2,4)|
    CHECK(enumerate_spinor_even(4, 2).size() == 135); // = |LG(3,6)|
    {
        // the full chart lies in the anchor family, m = 3
        Fq f(2);
        auto fam = enumerate_spinor_even(3, 2);
        unsigned chart = 0;
        for (unsigned bits = 0; bits < 8; ++bits) {
            uint8_t a = bits & 1, b = (bits >> 1) & 1, c = (bits >> 2) & 1;
            SubspaceRep wy = spinor_chart_point(f, {{0, a, b}, {a, 0, c}, {b, c, 0}});
            REQUIRE(fam.count(wy) == 1);
            ++chart;
        }
        CHECK(chart == 8);
    }
}

TEST_CASE("slicing to the odd quadric") {
    // the coordinate subspace <f_1..f_m> slices to <f_1..f_n>
    Fq f(2);
    SubspaceRep w0 = spinor_anchor(3, 2);
    SubspaceRep sliced = slice_to_odd(w0);
    CHECK(sliced.m == 5);
    CHECK(sliced.dim() == 2);
    for (unsigned i = 0; i < 2; ++i)
        for (unsigned c = 0; c < 5; ++c) CHECK(sliced.basis[i][c] == (c == i ? 1 : 0));

    auto fam = enumerate_spinor_even(3, 2);
    std::set<SubspaceRep> images;
    for (const SubspaceRep& w : fam) {
        SubspaceRep s = slice_to_odd(w);
        CHECK(s.dim() == 2);
        images.insert(s);
    }
    CHECK(images.size() == fam.size()); // injective on the family

    SubspaceRep not_iso = make_subspace(f, 6, {{1, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 0, 0},
                                               {0, 0, 1, 0, 0, 0}});
    CHECK_THROWS_AS(slice_to_odd(not_iso), Error);
}

TEST_CASE("projection to the Lagrangian Grassmannian") {
    auto fam = enumerate_spinor_even(3, 2);
    auto lg = enumerate_lagrangian(2, 2);
    std::set<SubspaceRep> mapped;
    for (const SubspaceRep& w : fam) mapped.insert(beta_subspace(slice_to_odd(w)));
    CHECK(mapped == lg); // bijective onto LG(2,4)
}

TEST_CASE("the subspace projection induces the matrix beta") {
    // chart check: W_Y -> slice -> project equals the chart point of beta(Y)
    Fq f(2);
    unsigned n = 3;
    for (unsigned bits = 0; bits < 64; ++bits) {
        // alternating 4x4 over F2 from six strict-upper bits
        uint8_t y[4][4] = {};
        unsigned b = bits;
        for (unsigned i = 0; i < 4; ++i)
            for (unsigned j = i + 1; j < 4; ++j) {
                y[i][j] = y[j][i] = b & 1;
                b >>= 1;
            }
        std::vector<FqVec> yrows(4, FqVec(4));
        for (unsigned i = 0; i < 4; ++i)
            for (unsigned j = 0; j < 4; ++j) yrows[i][j] = y[i][j];
        SubspaceRep wy = spinor_chart_point(f, yrows);
        SubspaceRep image = beta_subspace(slice_to_odd(wy));

        std::vector<FqVec> beta_rows(n, FqVec(n));
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j)
                beta_rows[i][j] = f.add(y[i][j], f.mul(y[i][3], y[j][3]));
        REQUIRE(image == lagrangian_chart_point(f, beta_rows));
    }
}

TEST_CASE("composition with alpha is the identity on F2 points") {
    Fq f(2);
    unsigned n = 3;
    for (unsigned bits = 0; bits < 64; ++bits) {
        uint8_t x[3][3];
        unsigned b = bits;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i; j < n; ++j) {
                x[i][j] = x[j][i] = b & 1;
                b >>= 1;
            }
        // alpha at matrix level
        std::vector<FqVec> arows(4, FqVec(4, 0));
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned j = i + 1; j < n; ++j) {
                uint8_t v = f.add(f.mul(x[i][i], x[j][j]), f.mul(x[i][j], x[i][j]));
                arows[i][j] = arows[j][i] = v;
            }
            arows[i][3] = arows[3][i] = x[i][i];
        }
        std::vector<FqVec> xrows(n, FqVec(n));
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) xrows[i][j] = x[i][j];
        SubspaceRep roundtrip = beta_subspace(slice_to_odd(spinor_chart_point(f, arows)));
        REQUIRE(roundtrip == lagrangian_chart_point(f, xrows));
    }
}

TEST_CASE("pi coordinates on the chart are the principal minors") {
    Fq f(2);
    auto spec = FieldSpec::f2();
    std::mt19937 rng(55);
    for (int trial = 0; trial < 30; ++trial) {
        unsigned n = 3;
        auto s = testutil::random_sym(n, spec, rng);
        std::vector<FqVec> xrows(n, FqVec(n));
        for (unsigned i = 1; i <= n; ++i)
            for (unsigned j = 1; j <= n; ++j)
                xrows[i - 1][j - 1] = static_cast<uint8_t>(s.entry(i, j).bits());
        FqVec coords = pi_coordinates(f, lagrangian_chart_point(f, xrows));
        auto minors = all_principal_minors(s);
        for (IndexSet I = 0; I <= iset::full(n); ++I)
            REQUIRE(coords[I] == minors.at(I).bits());
    }
}

TEST_CASE("image point sets coincide") {
    auto pi = image_points_pi(3, 2);
    auto sigma = image_points_sigma(4, 2);
    CHECK(pi.size() == 135);
    CHECK(pi == sigma);
}

TEST_CASE("fiber sizes") {
    auto f3 = FieldSpec::fp(3);
    SymMatrix<Scalar> x2(2, Scalar::one(f3));
    CHECK(fiber_size_check(2, 3, x2) == 2);

    SymMatrix<Scalar> x3(3, Scalar::one(f3));
    CHECK(fiber_size_check(3, 3, x3) == 4);

    auto f2 = FieldSpec::f2();
    SymMatrix<Scalar> ones2(2, Scalar::one(f2));
    CHECK(fiber_size_check(2, 2, ones2) == 1); // injective on F2 points

    SymMatrix<Scalar> degenerate(2, Scalar::zero(f3));
    degenerate.set(1, 1, Scalar::one(f3));
    degenerate.set(2, 2, Scalar::one(f3));
    CHECK_THROWS_AS(fiber_size_check(2, 3, degenerate), Error);
}

TEST_CASE("point normalization") {
    Fq f4(4);
    ProjPoint p = normalize_point(f4, {0, 2, 3});
    CHECK(p.coords[0] == 0);
    CHECK(p.coords[1] == 1);
    CHECK_THROWS_AS(normalize_point(f4, {0, 0, 0}), Error);
}
