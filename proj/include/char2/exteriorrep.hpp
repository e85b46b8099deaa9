#pragma once

#include <map>
#include <vector>

#include "char2/indexset.hpp"
#include "char2/linalg.hpp"
#include "char2/mpoly.hpp"

namespace char2 {

namespace detail {
// Parity of the number of pairs (i in a, j in b) with i > j; the sign of the
// permutation merging e_a wedge e_b into e_{a|b}.
inline bool merge_sign_negative(IndexSet a, IndexSet b) {
    int inv = 0;
    for (IndexSet rest = b; rest;) {
        unsigned j = iset::min_element(rest);
        rest = iset::erase(rest, j);
        inv += std::popcount(a >> j);
    }
    return inv % 2 != 0;
}
} // namespace detail

// Element of the exterior algebra of a d-dimensional space, with basis e_I
// indexed by subsets of {1..d}. Coefficients are Scalars or Polys.
template <class T>
class ExtElement {
public:
    explicit ExtElement(unsigned dim) : dim_(dim) {}

    static ExtElement scalar(unsigned dim, const T& c) {
        ExtElement e(dim);
        e.add_term(0, c);
        return e;
    }
    static ExtElement basis(unsigned dim, IndexSet mask, const T& c) {
        ExtElement e(dim);
        e.add_term(mask, c);
        return e;
    }

    unsigned dim() const { return dim_; }
    const std::map<IndexSet, T>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(IndexSet mask, const T& c) {
        require((mask & ~iset::full(dim_)) == 0, Errc::OutOfRange, "basis index");
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(mask, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    T coeff(IndexSet mask) const {
        auto it = terms_.find(mask);
        if (it != terms_.end()) return it->second;
        for (auto& [m, c] : terms_) return zero_like(c);
        fail(Errc::OutOfRange, "coefficient of the zero element");
    }

    // Degree if homogeneous, NotHomogeneous otherwise; 0 for the zero element.
    unsigned homogeneous_degree() const {
        int deg = -1;
        for (auto& [m, c] : terms_) {
            int d = iset::size(m);
            if (deg < 0) deg = d;
            require(d == deg, Errc::NotHomogeneous, "element is not homogeneous");
        }
        return deg < 0 ? 0 : static_cast<unsigned>(deg);
    }

    ExtElement operator+(const ExtElement& o) const {
        check(o);
        ExtElement r = *this;
        for (auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    ExtElement operator-(const ExtElement& o) const {
        check(o);
        ExtElement r = *this;
        for (auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }

    bool operator==(const ExtElement& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

private:
    void check(const ExtElement& o) const {
        require(dim_ == o.dim_, Errc::MixedRings, "exterior algebras of different dimension");
    }

    unsigned dim_;
    std::map<IndexSet, T> terms_;
};

template <class T>
ExtElement<T> wedge(const ExtElement<T>& a, const ExtElement<T>& b) {
    require(a.dim() == b.dim(), Errc::MixedRings, "exterior algebras of different dimension");
    ExtElement<T> r(a.dim());
    for (auto& [ma, ca] : a.terms()) {
        for (auto& [mb, cb] : b.terms()) {
            if (ma & mb) continue;
            T c = ca * cb;
            if (detail::merge_sign_negative(ma, mb)) c = -c;
            r.add_term(ma | mb, c);
        }
    }
    return r;
}

// Gamma = sum_i f_i wedge f_{i+n} in wedge^2 of a 2n-dimensional space.
template <class T>
ExtElement<T> symplectic_gamma(unsigned n, const T& one) {
    ExtElement<T> g(2 * n);
    for (unsigned i = 1; i <= n; ++i)
        g.add_term(iset::insert(iset::insert(0, i), i + n), one);
    return g;
}

// Contraction against the standard symplectic form e(f_i, f_{i+n}) = 1:
// lowers degree by two.
template <class T>
ExtElement<T> contraction(const ExtElement<T>& theta) {
    require(theta.dim() % 2 == 0, Errc::OutOfRange, "contraction needs dimension 2n");
    unsigned n = theta.dim() / 2;
    ExtElement<T> r(theta.dim());
    for (auto& [mask, c] : theta.terms()) {
        for (unsigned i = 1; i <= n; ++i) {
            if (!iset::contains(mask, i) || !iset::contains(mask, i + n)) continue;
            // positions are 0-based; the (-1)^(a+b-1) of the 1-based formula
            // becomes (-1)^(a+b+1)
            int a = iset::position(mask, i), b = iset::position(mask, i + n);
            T term = c;
            if ((a + b + 1) % 2 != 0) term = -term;
            r.add_term(iset::erase(iset::erase(mask, i), i + n), term);
        }
    }
    return r;
}

// Multiplication by Gamma.
template <class T>
ExtElement<T> epsilon_op(const ExtElement<T>& theta) {
    require(theta.dim() % 2 == 0, Errc::OutOfRange, "epsilon needs dimension 2n");
    for (auto& [m, c] : theta.terms())
        return wedge(symplectic_gamma(theta.dim() / 2, one_like(c)), theta);
    return theta; // zero element
}

// Grading operator: theta in wedge^k goes to (n-k) theta.
template <class T>
ExtElement<T> h_op(const ExtElement<T>& theta) {
    require(theta.dim() % 2 == 0, Errc::OutOfRange, "H needs dimension 2n");
    int n = static_cast<int>(theta.dim() / 2);
    ExtElement<T> r(theta.dim());
    for (auto& [mask, c] : theta.terms()) {
        long w = n - iset::size(mask);
        r.add_term(mask, c * Scalar::from_int(ring_of(c), w));
    }
    return r;
}

// Checks H = [d,e], [H,d] = 2d, [H,e] = -2e on every basis element of the
// full exterior algebra of K^{2n}.
bool verify_sl2(unsigned n, const FieldSpec& ring);

// wedge of the rows of a k x m basis matrix; coefficients are the k x k
// minors p_I.
template <class T>
ExtElement<T> plucker(const std::vector<std::vector<T>>& rows) {
    require(!rows.empty(), Errc::RankDeficient, "empty basis");
    unsigned m = static_cast<unsigned>(rows[0].size());
    ExtElement<T> acc = ExtElement<T>::scalar(m, one_like(rows[0][0]));
    for (auto& row : rows) {
        require(row.size() == m, Errc::OutOfRange, "ragged basis matrix");
        ExtElement<T> v(m);
        for (unsigned c = 0; c < m; ++c) v.add_term(iset::insert(0, c + 1), row[c]);
        acc = wedge(acc, v);
    }
    require(!acc.is_zero(), Errc::RankDeficient, "basis rows are dependent");
    return acc;
}

template <class T>
bool in_kernel_partial(const ExtElement<T>& theta) {
    theta.homogeneous_degree();
    return contraction(theta).is_zero();
}

// Coefficients p_J at the 2^n special subsets J (one of {i, n+i} per i),
// ordered by the index-set encoding of J's second-block part: slot I holds
// the coefficient at J = ({1..n} minus I) + {n+i : i in I}. On the symmetric
// chart these are the principal minors.
template <class T>
std::vector<T> special_projection(const ExtElement<T>& theta) {
    require(theta.dim() % 2 == 0, Errc::OutOfRange, "projection needs dimension 2n");
    unsigned n = theta.dim() / 2;
    require(theta.homogeneous_degree() == n, Errc::NotHomogeneous,
            "element must have degree n");
    std::vector<T> out;
    out.reserve(size_t{1} << n);
    for (IndexSet I = 0; I <= iset::full(n); ++I) {
        IndexSet J = (iset::full(n) & ~I) | (I << n);
        out.push_back(theta.coeff(J));
    }
    return out;
}

struct GowReport {
    unsigned n = 0;
    size_t dim_wedge_n = 0; // dim of wedge^n
    size_t dim_ker = 0;     // ker of the contraction on wedge^n
    size_t dim_im = 0;      // image of the contraction from wedge^(n+2)
    size_t codim = 0;       // dim_ker - dim_im
};

// Exact F2 ranks of the contraction maps around the middle degree.
GowReport gow_codim_check(unsigned n);

} // namespace char2
