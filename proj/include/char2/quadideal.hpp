#pragma once

#include <map>
#include <vector>

#include "char2/linalg.hpp"
#include "char2/mpoly.hpp"

namespace char2 {

// A rational map to projective space: one polynomial per ambient coordinate,
// all in the same parameter ring.
struct Parametrization {
    FieldSpec ring;
    VarTablePtr params;          // parameter variables
    VarTablePtr coords;          // ambient coordinate names, one per component
    std::vector<Poly> components;

    size_t ambient() const { return components.size(); }
};

// Homogeneous quadratic form as a coefficient map over monomials z_i z_j.
struct QuadraticFormRep {
    FieldSpec ring;
    VarTablePtr coords;
    std::map<std::pair<uint32_t, uint32_t>, Scalar> coeffs; // (i <= j) -> nonzero

    size_t ambient() const { return coords->size(); }
    Poly to_poly() const;
    static QuadraticFormRep from_poly(const Poly& q);
};

// Basis (RREF over the coefficient field) of the quadrics vanishing
// identically on the image: the kernel of evaluating quadratic monomials
// against the pullback.
std::vector<QuadraticFormRep> quadrics_vanishing(const Parametrization& p);

// Every returned quadric must pull back to the zero polynomial.
bool verify_quadric_pullbacks(const Parametrization& p,
                              const std::vector<QuadraticFormRep>& quadrics);

// binom(2^(n-1)+1, 2) - binom(2n, n)/2
mpz_class expected_quadric_count(unsigned n);

// Doubled-parameter map covering the union of tangent spaces:
// f_k(x) + sum_j df_k/dx_j(x) t_j.
Parametrization tangential_param(const Parametrization& p);

struct LinearSpanReport {
    size_t span_dim = 0;                            // dimension of the linear span
    std::vector<std::vector<Scalar>> vanishing_forms; // RREF rows over coordinates
};

LinearSpanReport linear_span(const Parametrization& p);

// Drops the pivot coordinates of the vanishing linear forms, giving the same
// image inside the projective span.
Parametrization restrict_to_span(const Parametrization& p, const LinearSpanReport& span);

// Rank of the alternating bilinear form Q(x+y) - Q(x) - Q(y); always even.
unsigned bilinear_rank(const QuadraticFormRep& q);

struct SingularLocusReport {
    int proj_dim = -1; // -1 = empty
    std::vector<std::vector<Scalar>> basis;
};

// Common zero locus of the formal partials intersected with the quadric; in
// characteristic two this is the linear subspace of ker(B) where Q vanishes.
SingularLocusReport singular_locus_char2(const QuadraticFormRep& q);

// Chart parametrizations used by the CLI and the test suites.
Parametrization minor_map_param(unsigned n, const FieldSpec& ring);
Parametrization subpfaffian_map_param(unsigned m, const FieldSpec& ring);
Parametrization plucker_chart_gr36(const FieldSpec& ring);
Parametrization plucker_chart_lg36(const FieldSpec& ring);
Parametrization segre_chart_p1p1p1(const FieldSpec& ring);

} // namespace char2
