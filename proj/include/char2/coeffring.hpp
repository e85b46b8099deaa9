#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "char2/error.hpp"

namespace char2 {

enum class RingKind : uint8_t { F2, F2k, Fp, Rational, Integer };

// A coefficient domain: F2, F2^k (k <= 16, fixed modulus), Fp, Q or Z.
// The modulus for F2^k is the numerically smallest irreducible polynomial of
// degree k over F2, stored as a bitmask (bit i = coefficient of x^i), so the
// arithmetic is identical across runs.
class FieldSpec {
public:
    FieldSpec() : kind_(RingKind::F2) {}

    static FieldSpec f2() { return FieldSpec(); }
    static FieldSpec f2k(unsigned k);
    static FieldSpec fp(uint64_t p);
    static FieldSpec rational() { return FieldSpec(RingKind::Rational); }
    static FieldSpec integer() { return FieldSpec(RingKind::Integer); }

    // Accepts "f2", "f4", "f8", ..., "f3", "f5", "q", "z".
    static FieldSpec parse(const std::string& name);

    RingKind kind() const { return kind_; }
    unsigned ext_degree() const { return k_; }
    uint64_t prime() const { return p_; }
    uint32_t modulus_mask() const { return mod_; }

    bool is_field() const { return kind_ != RingKind::Integer; }
    bool is_char2() const {
        return kind_ == RingKind::F2 || kind_ == RingKind::F2k;
    }
    bool is_finite() const {
        return kind_ == RingKind::F2 || kind_ == RingKind::F2k || kind_ == RingKind::Fp;
    }
    // Number of elements for finite fields.
    uint64_t order() const;

    bool operator==(const FieldSpec& o) const {
        return kind_ == o.kind_ && k_ == o.k_ && p_ == o.p_;
    }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    std::string name() const;

private:
    explicit FieldSpec(RingKind kind) : kind_(kind) {}

    RingKind kind_;
    unsigned k_ = 1;
    uint64_t p_ = 2;
    uint32_t mod_ = 0;
};

// Smallest irreducible polynomial of degree k over F2 as a bitmask.
uint32_t smallest_irreducible_f2(unsigned k);

class Scalar;
inline const FieldSpec& ring_of(const Scalar& s);
inline Scalar zero_like(const Scalar& s);
inline Scalar one_like(const Scalar& s);

// An immutable ring element in canonical form: equal elements compare equal
// payload-wise. Finite payloads are machine words; Z and Q payloads use GMP.
class Scalar {
public:
    Scalar() : ring_(), v_(uint64_t{0}) {}

    static Scalar zero(const FieldSpec& ring);
    static Scalar one(const FieldSpec& ring);
    static Scalar from_int(const FieldSpec& ring, long value);
    static Scalar from_mpz(const FieldSpec& ring, const mpz_class& value);
    static Scalar from_mpq(const mpq_class& value);
    // Finite-field element from its canonical residue (bits for F2/F2k,
    // least nonnegative residue for Fp).
    static Scalar from_bits(const FieldSpec& ring, uint64_t bits);
    static Scalar parse(const FieldSpec& ring, const std::string& text);

    const FieldSpec& ring() const { return ring_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inv() const;
    Scalar pow(uint64_t e) const;

    // a^2; requires characteristic two.
    Scalar frobenius() const;
    // The unique square root in a perfect field of characteristic two.
    Scalar sqrt_char2() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // Total order within one ring; used only for canonical sorting.
    bool operator<(const Scalar& o) const;

    uint64_t bits() const; // finite payloads
    const mpz_class& as_mpz() const;
    const mpq_class& as_mpq() const;
    // Exact, throws NonIntegralAfterScaling for non-integral rationals.
    mpz_class to_mpz() const;

    std::string str() const;

private:
    Scalar(FieldSpec ring, uint64_t bits) : ring_(ring), v_(bits) {}
    Scalar(FieldSpec ring, mpz_class z) : ring_(ring), v_(std::move(z)) {}
    Scalar(FieldSpec ring, mpq_class q) : ring_(ring), v_(std::move(q)) {}

    void check_same_ring(const Scalar& o) const {
        require(ring_ == o.ring_, Errc::MixedRings,
                ring_.name() + " vs " + o.ring_.name());
    }

    FieldSpec ring_;
    std::variant<uint64_t, mpz_class, mpq_class> v_;
};

inline const FieldSpec& ring_of(const Scalar& s) { return s.ring(); }
inline Scalar zero_like(const Scalar& s) { return Scalar::zero(s.ring()); }
inline Scalar one_like(const Scalar& s) { return Scalar::one(s.ring()); }

} // namespace char2
