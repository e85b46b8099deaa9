#pragma once

#include <string>
#include <vector>

#include "char2/matforms.hpp"

namespace char2 {

// The non-linear map on matrices sending a symmetric S_n to the alternating
// (n+1) x (n+1) matrix with entries x_ii x_jj + x_ij^2 off the last row and
// x_ii in the last column. Characteristic two only.
template <class T>
AltMatrix<T> alpha_map(const SymMatrix<T>& s) {
    unsigned n = s.size();
    require(n >= 1, Errc::OutOfRange, "empty matrix");
    T zero = zero_like(s.entry(1, 1));
    require(ring_of(s.entry(1, 1)).is_char2(), Errc::WrongCharacteristic,
            "alpha is defined in characteristic two");
    AltMatrix<T> a(n + 1, zero);
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = i + 1; j <= n; ++j)
            a.set(i, j, s.entry(i, i) * s.entry(j, j) + s.entry(i, j) * s.entry(i, j));
        a.set(i, n + 1, s.entry(i, i));
    }
    return a;
}

// The reverse map: an alternating (n+1) x (n+1) matrix goes to the symmetric
// n x n matrix with entries y_ij + y_{i,n+1} y_{j,n+1}.
template <class T>
SymMatrix<T> beta_map(const AltMatrix<T>& a) {
    unsigned np1 = a.size();
    require(np1 >= 2, Errc::OutOfRange, "matrix too small");
    require(ring_of(a.entry(1, 2)).is_char2(), Errc::WrongCharacteristic,
            "beta is defined in characteristic two");
    unsigned n = np1 - 1;
    SymMatrix<T> s(n, zero_like(a.entry(1, 2)));
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = i; j <= n; ++j)
            s.set(i, j, a.entry(i, j) + a.entry(i, np1) * a.entry(j, np1));
    return s;
}

struct VerifyReport {
    std::string check;
    bool ok = true;
    unsigned n = 0;
    FieldSpec ring;
    std::vector<std::string> failures; // offending subsets or entries, sorted
};

// S_{n,I} = (alpha S)_{tilde I} as polynomials, for every subset I.
VerifyReport verify_theorem(unsigned n, const FieldSpec& ring);

// The parity-split expansion of det(S_n) into products of principal minors.
VerifyReport verify_det_expansion(unsigned n, const FieldSpec& ring);

// beta(alpha(S)) and alpha(beta(A)) are coordinate-wise squaring.
VerifyReport verify_frobenius_composition(unsigned n, const FieldSpec& ring);

// Coordinate table z_<bits> for P^(2^n - 1), slot k named by the n binary
// digits of k (high bit first).
VarTablePtr z_coordinate_vars(unsigned n);

// Cayley's 2x2x2 hyperdeterminant over Z in the z-coordinates.
Poly hyperdeterminant();

// Square root of the mod-2 reduction of the hyperdeterminant.
Poly hyperdet_mod2_sqrt();

} // namespace char2
