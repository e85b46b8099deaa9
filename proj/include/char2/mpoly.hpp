#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "char2/coeffring.hpp"

namespace char2 {

// Named variables of one polynomial ring. Tables are compared by content so
// that x-, y- and z-spaces never mix silently.
class VarTable {
public:
    explicit VarTable(std::vector<std::string> names);

    size_t size() const { return names_.size(); }
    const std::string& name(uint32_t v) const { return names_.at(v); }
    std::optional<uint32_t> find(const std::string& name) const;

    bool operator==(const VarTable& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, uint32_t> index_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

VarTablePtr make_vars(std::vector<std::string> names);
inline bool same_vars(const VarTablePtr& a, const VarTablePtr& b) {
    return a == b || (a && b && *a == *b);
}

// Product of variable powers; no zero exponents stored.
class Monomial {
public:
    Monomial() = default;
    static Monomial one() { return Monomial(); }
    static Monomial var(uint32_t v, uint32_t e = 1);

    bool is_one() const { return f_.empty(); }
    uint32_t degree() const;
    uint32_t exp(uint32_t v) const;
    const std::vector<std::pair<uint32_t, uint32_t>>& factors() const { return f_; }

    Monomial operator*(const Monomial& o) const;
    bool all_exponents_even() const;
    Monomial halved() const;
    // Lowers the exponent of v by one; requires exp(v) >= 1.
    Monomial lowered(uint32_t v) const;

    bool operator==(const Monomial& o) const { return f_ == o.f_; }

    // Graded-lex, higher degree first, then larger power of the earliest
    // variable first. Gives the canonical printing order directly.
    static std::strong_ordering cmp(const Monomial& a, const Monomial& b);

private:
    std::vector<std::pair<uint32_t, uint32_t>> f_; // (var, exp), sorted by var
};

struct MonomialBefore {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::cmp(a, b) == std::strong_ordering::less;
    }
};

// Sparse multivariate polynomial in canonical form: no zero coefficients,
// terms ordered graded-lex descending.
class Poly {
public:
    using TermMap = std::map<Monomial, Scalar, MonomialBefore>;

    Poly() : ring_(FieldSpec::f2()), vars_(make_vars({})) {}
    Poly(FieldSpec ring, VarTablePtr vars) : ring_(ring), vars_(std::move(vars)) {}

    static Poly zero(const FieldSpec& ring, const VarTablePtr& vars) { return Poly(ring, vars); }
    static Poly one(const FieldSpec& ring, const VarTablePtr& vars) {
        return constant(Scalar::one(ring), vars);
    }
    static Poly constant(const Scalar& c, const VarTablePtr& vars);
    static Poly variable(const FieldSpec& ring, const VarTablePtr& vars, uint32_t v,
                         uint32_t e = 1);
    static Poly term(const Scalar& c, const Monomial& m, const VarTablePtr& vars);

    const FieldSpec& ring() const { return ring_; }
    const VarTablePtr& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.is_one() &&
               terms_.begin()->second.is_one();
    }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
    size_t term_count() const { return terms_.size(); }
    uint32_t degree() const; // 0 for the zero polynomial
    Scalar coeff(const Monomial& m) const;
    Scalar constant_term() const { return coeff(Monomial::one()); }

    void add_term(const Monomial& m, const Scalar& c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Scalar& c) const;
    Poly pow(uint32_t e) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Scalar eval(std::span<const Scalar> point) const;
    Poly substitute(std::span<const Poly> images) const;
    Poly partial(uint32_t v) const;

    // Every monomial has all-even exponents; coefficients always have square
    // roots in F2/F2k, so this decides squareness in characteristic two.
    bool is_square_char2() const;
    Poly sqrt_char2() const;

    std::string str() const;
    static Poly parse(const FieldSpec& ring, const VarTablePtr& vars, const std::string& text);

private:
    void check_compatible(const Poly& o) const;

    FieldSpec ring_;
    VarTablePtr vars_;
    TermMap terms_;
};

// (scale * p) reduced coefficient-wise mod 2; p must live over Z or Q and
// every scaled coefficient must be integral.
Poly reduce_mod2(const Poly& p, const mpz_class& scale = 1);

// Exact coefficient transport between Z and Q (Q -> Z requires integrality).
Poly to_ring(const Poly& p, const FieldSpec& target);

inline const FieldSpec& ring_of(const Poly& p) { return p.ring(); }
inline Poly zero_like(const Poly& p) { return Poly::zero(p.ring(), p.vars()); }
inline Poly one_like(const Poly& p) { return Poly::one(p.ring(), p.vars()); }

} // namespace char2
