#include "char2/freudenthal.hpp"

#include <array>

#include "char2/matforms.hpp"
#include "char2/minormaps.hpp"

namespace char2 {

namespace {

void check_model(const JordanElement& a) {
    size_t want = a.model == JordanModel::Diagonal ? 3 : 6;
    require(a.entries.size() == want, Errc::ModelMismatch, "wrong number of entries");
}

void check_pair(const JordanElement& a, const JordanElement& b) {
    require(a.model == b.model, Errc::ModelMismatch, "mixed Jordan models");
    check_model(a);
    check_model(b);
}

// Full 3x3 matrix view of a Jordan element.
std::array<std::array<Poly, 3>, 3> as_matrix(const JordanElement& a) {
    std::array<std::array<Poly, 3>, 3> m;
    if (a.model == JordanModel::Diagonal) {
        Poly zero = zero_like(a.entries[0]);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m[i][j] = (i == j) ? a.entries[i] : zero;
    } else {
        const auto& e = a.entries; // a11 a12 a13 a22 a23 a33
        m[0] = {e[0], e[1], e[2]};
        m[1] = {e[1], e[3], e[4]};
        m[2] = {e[2], e[4], e[5]};
    }
    return m;
}

Scalar half(const FieldSpec& ring) {
    require(ring.is_field() && !ring.is_char2(), Errc::WrongCharacteristic,
            "the trace pairing needs 2 to be invertible");
    return Scalar::from_int(ring, 2).inv();
}

} // namespace

Poly jordan_norm(const JordanElement& a) {
    check_model(a);
    if (a.model == JordanModel::Diagonal)
        return a.entries[0] * a.entries[1] * a.entries[2];
    auto m = as_matrix(a);
    Poly det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
    det = det - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]);
    det = det + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return det;
}

JordanElement jordan_sharp(const JordanElement& a) {
    check_model(a);
    if (a.model == JordanModel::Diagonal)
        return JordanElement{a.model,
                             {a.entries[1] * a.entries[2], a.entries[0] * a.entries[2],
                              a.entries[0] * a.entries[1]}};
    auto m = as_matrix(a);
    auto cof = [&](int i, int j) {
        int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
        return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    };
    // adjugate of a symmetric matrix is symmetric
    return JordanElement{a.model,
                         {cof(0, 0), cof(0, 1), cof(0, 2), cof(1, 1), cof(1, 2), cof(2, 2)}};
}

Poly jordan_pairing(const JordanElement& a, const JordanElement& b) {
    check_pair(a, b);
    auto ma = as_matrix(a), mb = as_matrix(b);
    const FieldSpec& ring = ring_of(a.entries[0]);
    Poly trace = zero_like(a.entries[0]);
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            trace = trace + ma[i][k] * mb[k][i] + mb[i][k] * ma[k][i];
    return trace * half(ring);
}

Poly fts_symplectic(const FTSElement& u, const FTSElement& v) {
    return u.a * v.b - u.b * v.a + jordan_pairing(u.A, v.B) - jordan_pairing(u.B, v.A);
}

Poly fts_quartic(const FTSElement& u) {
    const FieldSpec& ring = ring_of(u.a);
    Scalar four = Scalar::from_int(ring, 4);
    Poly q = jordan_pairing(u.A, u.B) - u.a * u.b;
    Poly out = q * q - jordan_pairing(jordan_sharp(u.A), jordan_sharp(u.B)) * four;
    out = out + u.a * jordan_norm(u.A) * four + u.b * jordan_norm(u.B) * four;
    return out;
}

Mod2Square fts_quartic_mod2(const FTSElement& u) {
    Poly reduced = reduce_mod2(fts_quartic(u));
    return Mod2Square{reduced, reduced.sqrt_char2()};
}

namespace {

std::vector<std::string> fts_names(JordanModel model, const char* scalar1, const char* jordan1,
                                   const char* jordan2, const char* scalar2) {
    std::vector<std::string> names{scalar1};
    auto push_jordan = [&](const char* p) {
        if (model == JordanModel::Diagonal) {
            for (const char* s : {"11", "22", "33"}) names.push_back(std::string(p) + s);
        } else {
            for (const char* s : {"11", "12", "13", "22", "23", "33"})
                names.push_back(std::string(p) + s);
        }
    };
    push_jordan(jordan1);
    push_jordan(jordan2);
    names.push_back(scalar2);
    return names;
}

FTSElement fts_from_vars(JordanModel model, const VarTablePtr& vars, uint32_t base) {
    FieldSpec q = FieldSpec::rational();
    unsigned jdim = model == JordanModel::Diagonal ? 3 : 6;
    auto var = [&](uint32_t i) { return Poly::variable(q, vars, base + i); };
    JordanElement A{model, {}}, B{model, {}};
    for (unsigned i = 0; i < jdim; ++i) A.entries.push_back(var(1 + i));
    for (unsigned i = 0; i < jdim; ++i) B.entries.push_back(var(1 + jdim + i));
    return FTSElement{var(0), std::move(A), std::move(B), var(1 + 2 * jdim)};
}

} // namespace

SymbolicFTS make_fts_symbolic(JordanModel model) {
    VarTablePtr vars = make_vars(fts_names(model, "a", "a", "b", "b"));
    return SymbolicFTS{fts_from_vars(model, vars, 0), vars};
}

SymbolicFTSPair make_fts_pair_symbolic(JordanModel model) {
    auto u_names = fts_names(model, "a", "a", "b", "b");
    auto v_names = fts_names(model, "c", "c", "d", "d");
    u_names.insert(u_names.end(), v_names.begin(), v_names.end());
    uint32_t stride = static_cast<uint32_t>(u_names.size() / 2);
    VarTablePtr vars = make_vars(std::move(u_names));
    return SymbolicFTSPair{fts_from_vars(model, vars, 0), fts_from_vars(model, vars, stride),
                           vars};
}

Poly e7_quartic() {
    FieldSpec q = FieldSpec::rational();
    std::vector<std::string> names;
    for (unsigned i = 1; i <= 8; ++i)
        for (unsigned j = i + 1; j <= 8; ++j) names.push_back(matrix_var_name("x", i, j));
    for (unsigned i = 1; i <= 8; ++i)
        for (unsigned j = i + 1; j <= 8; ++j) names.push_back(matrix_var_name("y", i, j));
    VarTablePtr vars = make_vars(std::move(names));

    Poly zero = Poly::zero(q, vars);
    AltMatrix<Poly> x(8, zero), y(8, zero);
    uint32_t v = 0;
    for (unsigned i = 1; i <= 8; ++i)
        for (unsigned j = i + 1; j <= 8; ++j) x.set(i, j, Poly::variable(q, vars, v++));
    for (unsigned i = 1; i <= 8; ++i)
        for (unsigned j = i + 1; j <= 8; ++j) y.set(i, j, Poly::variable(q, vars, v++));

    // XY as a dense product
    std::array<std::array<Poly, 8>, 8> xy;
    for (unsigned i = 1; i <= 8; ++i)
        for (unsigned j = 1; j <= 8; ++j) {
            Poly acc = zero;
            for (unsigned k = 1; k <= 8; ++k) acc = acc + x.entry(i, k) * y.entry(k, j);
            xy[i - 1][j - 1] = std::move(acc);
        }
    Poly tr_xy = zero;
    for (unsigned i = 0; i < 8; ++i) tr_xy = tr_xy + xy[i][i];
    Poly tr_xyxy = zero;
    for (unsigned i = 0; i < 8; ++i)
        for (unsigned j = 0; j < 8; ++j) tr_xyxy = tr_xyxy + xy[i][j] * xy[j][i];

    Scalar quarter = Scalar::from_mpq(mpq_class(-1, 4));
    Scalar sixteenth = Scalar::from_mpq(mpq_class(1, 16));
    return pfaffian(x) + pfaffian(y) + tr_xyxy * quarter + tr_xy * tr_xy * sixteenth;
}

Mod2Square e7_quartic_mod2() {
    Poly reduced = reduce_mod2(e7_quartic(), 4);
    return Mod2Square{reduced, reduced.sqrt_char2()};
}

Poly diagonal_quartic_as_hyperdet(const Poly& quartic) {
    // (a, a11, a22, a33, b11, b22, b33, b) ->
    // (z000, z110, z101, z011, z001, z010, z100, z111)
    static const std::array<uint32_t, 8> slot = {0, 6, 5, 3, 1, 2, 4, 7};
    require(quartic.vars()->size() == 8, Errc::ArityMismatch,
            "expected the eight diagonal-model coordinates");
    VarTablePtr z = z_coordinate_vars(3);
    std::vector<Poly> images;
    images.reserve(8);
    for (uint32_t i = 0; i < 8; ++i)
        images.push_back(Poly::variable(quartic.ring(), z, slot[i]));
    return quartic.substitute(images);
}

} // namespace char2
