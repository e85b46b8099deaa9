#pragma once

#include <array>
#include <compare>
#include <set>
#include <vector>

#include "char2/matforms.hpp"

namespace char2 {

// Arithmetic tables for the small fields the enumerations run over
// (q = 2, 3, 4 and small primes for the odd-characteristic fiber counts).
// F4 shares the F2k(2) arithmetic of the scalar layer.
class Fq {
public:
    explicit Fq(unsigned q);

    unsigned q() const { return q_; }
    const FieldSpec& spec() const { return spec_; }

    uint8_t add(uint8_t a, uint8_t b) const { return add_[a * q_ + b]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add_[a * q_ + neg_[b]]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * q_ + b]; }
    uint8_t neg(uint8_t a) const { return neg_[a]; }
    uint8_t inv(uint8_t a) const;

    Scalar to_scalar(uint8_t a) const { return Scalar::from_bits(spec_, a); }

private:
    unsigned q_;
    FieldSpec spec_;
    std::vector<uint8_t> add_, mul_, neg_;
};

using FqVec = std::vector<uint8_t>;

// A subspace of F_q^m in reduced-row-echelon basis form; the canonical
// representative makes subspaces hashable and comparable.
struct SubspaceRep {
    uint32_t q = 2;
    uint32_t m = 0;
    std::vector<FqVec> basis;

    unsigned dim() const { return static_cast<unsigned>(basis.size()); }

    auto operator<=>(const SubspaceRep&) const = default;
};

// Canonicalize arbitrary spanning rows (dependent rows are dropped).
SubspaceRep make_subspace(const Fq& f, uint32_t m, std::vector<FqVec> rows);

bool subspace_contains(const Fq& f, const SubspaceRep& w, const FqVec& v);
unsigned intersection_dim(const Fq& f, const SubspaceRep& a, const SubspaceRep& b);

// A point of P^(m-1)(F_q), scaled so the first nonzero coordinate is 1.
struct ProjPoint {
    uint32_t q = 2;
    FqVec coords;

    auto operator<=>(const ProjPoint&) const = default;
};

ProjPoint normalize_point(const Fq& f, FqVec coords);

// All n-dimensional subspaces of F_q^m; brute-force oracle for the
// structured enumerations (kept small on purpose).
std::set<SubspaceRep> enumerate_all_subspaces(unsigned n, unsigned m, unsigned q);

// Lagrangian subspaces of the standard symplectic form on F_q^(2n), by
// recursive isotropic-flag extension with canonical deduplication.
std::set<SubspaceRep> enumerate_lagrangian(unsigned n, unsigned q);

// Maximal isotropic subspaces of q(x) = sum x_i x_{m+i} on F_q^(2m) lying in
// the family of the anchor; membership is decided by
// dim(W meet anchor) = m (mod 2).
std::set<SubspaceRep> enumerate_spinor_even(unsigned m, unsigned q, const SubspaceRep& anchor);
std::set<SubspaceRep> enumerate_spinor_even(unsigned m, unsigned q); // anchor <f_1..f_m>

SubspaceRep spinor_anchor(unsigned m, unsigned q);

// Chart points: the column span of (I ; X) for symmetric X, and of (I ; Y)
// for alternating Y (the latter in characteristic two).
SubspaceRep lagrangian_chart_point(const Fq& f, const std::vector<FqVec>& x_sym);
SubspaceRep spinor_chart_point(const Fq& f, const std::vector<FqVec>& y_alt);

// W meet {y_(n+1) + y_(2n+2) = 0} followed by the identification with
// F_q^(2n+1); the image is maximally isotropic for
// q'(z) = z_1 z_(n+2) + .. + z_n z_(2n+1) + z_(n+1)^2.
SubspaceRep slice_to_odd(const SubspaceRep& w);

// Projection along ker(e') (dropping coordinate n+1); sends maximal
// isotropics of q' to Lagrangians of the standard form on F_q^(2n).
SubspaceRep beta_subspace(const SubspaceRep& wp);

// Image point sets over F2: the 2^n special Plucker minors of every
// enumerated Lagrangian, and the sub-Pfaffian coordinates of every member of
// the even spinor family (computed as special minors under the tilde-index
// correspondence, which agrees with the chart Pfaffians on F2-points).
std::set<ProjPoint> image_points_pi(unsigned n, unsigned q);
std::set<ProjPoint> image_points_sigma(unsigned m, unsigned q);

// The special-minor coordinate vector of one subspace (2^n slots, n = dim).
FqVec pi_coordinates(const Fq& f, const SubspaceRep& w);
FqVec sigma_coordinates(const Fq& f, const SubspaceRep& w);

// Number of symmetric matrices over F_p with the same full principal-minor
// vector as X, by brute force; X must have nonzero off-diagonal entries.
long fiber_size_check(unsigned n, uint64_t p, const SymMatrix<Scalar>& x);

} // namespace char2
