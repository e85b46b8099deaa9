#pragma once

#include <vector>

#include "char2/mpoly.hpp"

namespace char2 {

// Cubic Jordan algebra data for the two models with checkable content here:
// diagonal 3x3 matrices and symmetric 3x3 matrices (trivial involution).
enum class JordanModel { Diagonal, Sym3 };

struct JordanElement {
    JordanModel model;
    // Diagonal: [a, b, c]; Sym3: [a11, a12, a13, a22, a23, a33]
    std::vector<Poly> entries;
};

// Degree-three norm: the product of the diagonal, respectively the
// determinant of the symmetric matrix.
Poly jordan_norm(const JordanElement& a);

// Adjoint-like sharp: (bc, ac, ab) on the diagonal model, the classical
// adjugate on Sym3. Satisfies sharp(sharp(A)) = N(A) A.
JordanElement jordan_sharp(const JordanElement& a);

// Regular trace pairing Tr((AB + BA)/2); needs 2 invertible, so the symbolic
// construction lives over Q and is reduced afterwards.
Poly jordan_pairing(const JordanElement& a, const JordanElement& b);

struct FTSElement {
    Poly a;
    JordanElement A;
    JordanElement B;
    Poly b;
};

// e(u,v) = ad - bc + (A,D) - (B,C)
Poly fts_symplectic(const FTSElement& u, const FTSElement& v);

// G' = -4 (A#, B#) + 4 a N(A) + 4 b N(B) + ((A,B) - ab)^2
Poly fts_quartic(const FTSElement& u);

struct Mod2Square {
    Poly reduced; // the quartic mod 2
    Poly root;    // its square root
};

// Reduction of the quartic mod 2 together with its root (A,B) - ab.
Mod2Square fts_quartic_mod2(const FTSElement& u);

// Generic element with the coordinates (a, A.., B.., b) as variables over Q.
struct SymbolicFTS {
    FTSElement u;
    VarTablePtr vars;
};
SymbolicFTS make_fts_symbolic(JordanModel model);

// A pair (u, v) of generic elements in one table; v uses (c, C.., D.., d).
struct SymbolicFTSPair {
    FTSElement u, v;
    VarTablePtr vars;
};
SymbolicFTSPair make_fts_pair_symbolic(JordanModel model);

// The quartic invariant on pairs of alternating 8x8 matrices:
// Pf(X) + Pf(Y) - Tr(XYXY)/4 + (Tr(XY))^2/16, over Q in 56 variables.
Poly e7_quartic();

// 4J mod 2 and its root sum x_ij y_ij.
Mod2Square e7_quartic_mod2();

// Coordinate change matching the diagonal-model quartic with the
// hyperdeterminant: the unique relabeling onto the z-coordinates under which
// the model's symplectic form takes its standard display.
Poly diagonal_quartic_as_hyperdet(const Poly& quartic);

} // namespace char2
