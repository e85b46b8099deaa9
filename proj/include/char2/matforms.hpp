#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "char2/indexset.hpp"
#include "char2/mpoly.hpp"

namespace char2 {

// Square matrix with the symmetry invariant kept by construction: only the
// upper triangle is stored. Indices are 1-based throughout, matching the
// index-set encoding.
template <class T>
class SymMatrix {
public:
    SymMatrix(unsigned n, const T& zero) : n_(n), u_(n * (n + 1) / 2, zero) {}

    unsigned size() const { return n_; }

    T entry(unsigned i, unsigned j) const {
        if (i > j) std::swap(i, j);
        return u_[idx(i, j)];
    }
    void set(unsigned i, unsigned j, T v) {
        if (i > j) std::swap(i, j);
        u_[idx(i, j)] = std::move(v);
    }

private:
    size_t idx(unsigned i, unsigned j) const {
        require(1 <= i && i <= j && j <= n_, Errc::OutOfRange, "matrix index");
        return (i - 1) * n_ - (i - 1) * i / 2 + (j - 1);
    }

    unsigned n_;
    std::vector<T> u_;
};

// Alternating matrix: zero diagonal, entry(j,i) = -entry(i,j). Only the
// strict upper triangle is stored.
template <class T>
class AltMatrix {
public:
    AltMatrix(unsigned n, const T& zero) : n_(n), zero_(zero), u_(n * (n - 1) / 2, zero) {}

    unsigned size() const { return n_; }

    T entry(unsigned i, unsigned j) const {
        require(1 <= i && i <= n_ && 1 <= j && j <= n_, Errc::OutOfRange, "matrix index");
        if (i == j) return zero_;
        if (i < j) return u_[idx(i, j)];
        return -u_[idx(j, i)];
    }
    void set(unsigned i, unsigned j, T v) {
        require(i != j || v == zero_, Errc::OutOfRange, "diagonal of an alternating matrix");
        if (i == j) return;
        if (i < j)
            u_[idx(i, j)] = std::move(v);
        else
            u_[idx(j, i)] = -v;
    }

private:
    size_t idx(unsigned i, unsigned j) const {
        require(1 <= i && i < j && j <= n_, Errc::OutOfRange, "matrix index");
        return (i - 1) * n_ - (i - 1) * i / 2 + (j - i - 1);
    }

    unsigned n_;
    T zero_;
    std::vector<T> u_;
};

namespace detail {

template <class T>
constexpr bool is_symbolic_entry = std::is_same_v<T, Poly>;

// Minors by Laplace expansion along the largest row index, memoized over
// (row set, column set) pairs. No division, so it is exact over any ring.
// A single determinant only ever visits prefix row sets, which keeps its
// table at 2^n entries; the table is shared when all principal minors are
// requested.
template <class T, class EntryFn>
class MinorTable {
public:
    MinorTable(EntryFn entry, T one) : entry_(std::move(entry)), one_(std::move(one)) {}

    const T& det(IndexSet rows, IndexSet cols) {
        uint64_t key = (static_cast<uint64_t>(rows) << 32) | cols;
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        T value = one_;
        if (rows != 0) {
            unsigned r = iset::max_element(rows);
            int pos_r = iset::size(rows) - 1;
            bool started = false;
            for (unsigned c : iset::elements(cols)) {
                T a = entry_(r, c);
                if (a.is_zero()) continue;
                T term = a * det(iset::erase(rows, r), iset::erase(cols, c));
                if ((pos_r + iset::position(cols, c)) % 2 != 0) term = -term;
                if (!started) {
                    value = std::move(term);
                    started = true;
                } else {
                    value = value + term;
                }
            }
            if (!started) value = one_ - one_; // no nonzero entry in the row
        }
        return memo_.emplace(key, std::move(value)).first->second;
    }

private:
    EntryFn entry_;
    T one_;
    std::unordered_map<uint64_t, T> memo_;
};

// Pfaffian by the expansion along the smallest index, memoized over even
// subsets: Pf(A_S) = sum_t sgn * a(s1,t) * Pf(A_{S - {s1,t}}).
template <class T, class EntryFn>
class PfaffianTable {
public:
    PfaffianTable(EntryFn entry, T one) : entry_(std::move(entry)), one_(std::move(one)) {}

    const T& pf(IndexSet s) {
        auto it = memo_.find(s);
        if (it != memo_.end()) return it->second;
        T value = one_;
        if (s != 0) {
            unsigned first = iset::min_element(s);
            bool started = false;
            for (unsigned t : iset::elements(iset::erase(s, first))) {
                T a = entry_(first, t);
                if (a.is_zero()) continue;
                T term = a * pf(iset::erase(iset::erase(s, first), t));
                if (iset::position(s, t) % 2 == 0) term = -term;
                if (!started) {
                    value = std::move(term);
                    started = true;
                } else {
                    value = value + term;
                }
            }
            if (!started) value = one_ - one_;
        }
        return memo_.emplace(s, std::move(value)).first->second;
    }

private:
    EntryFn entry_;
    T one_;
    std::unordered_map<IndexSet, T> memo_;
};

} // namespace detail

template <class M>
auto det_division_free(const M& a) {
    using T = decltype(a.entry(1u, 1u));
    unsigned n = a.size();
    require(n <= 12, Errc::BudgetExceeded, "determinant capped at n = 12");
    if (n == 0) fail(Errc::OutOfRange, "empty matrix");
    T one = one_like(a.entry(1, 1));
    detail::MinorTable<T, std::function<T(unsigned, unsigned)>> table(
        [&a](unsigned i, unsigned j) { return a.entry(i, j); }, one);
    return table.det(iset::full(n), iset::full(n));
}

// All 2^n principal minors S_{n,I}, the empty set mapping to 1. Subset
// determinants share one memo table.
template <class T>
std::map<IndexSet, T> all_principal_minors(const SymMatrix<T>& a) {
    unsigned n = a.size();
    unsigned cap = detail::is_symbolic_entry<T> ? 8 : 10;
    require(n <= cap, Errc::BudgetExceeded,
            "principal minors capped at n = " + std::to_string(cap));
    T one = one_like(a.entry(1, 1));
    detail::MinorTable<T, std::function<T(unsigned, unsigned)>> table(
        [&a](unsigned i, unsigned j) { return a.entry(i, j); }, one);
    std::map<IndexSet, T> out;
    for (IndexSet s = 0; s <= iset::full(n); ++s) out.emplace(s, table.det(s, s));
    return out;
}

template <class T>
T pfaffian(const AltMatrix<T>& a) {
    unsigned n = a.size();
    require(n <= 12, Errc::BudgetExceeded, "Pfaffian capped at N = 12");
    if (n == 0) fail(Errc::OutOfRange, "empty matrix");
    T one = one_like(a.entry(1, 2));
    if (n % 2 == 1) return one - one; // odd size
    detail::PfaffianTable<T, std::function<T(unsigned, unsigned)>> table(
        [&a](unsigned i, unsigned j) { return a.entry(i, j); }, one);
    return table.pf(iset::full(n));
}

// Pfaffians of all principal submatrices on even index sets, sharing one
// memo table; the empty set maps to 1.
template <class T>
std::map<IndexSet, T> all_sub_pfaffians(const AltMatrix<T>& a) {
    unsigned n = a.size();
    unsigned cap = detail::is_symbolic_entry<T> ? 10 : 16;
    require(n <= cap, Errc::BudgetExceeded,
            "sub-Pfaffians capped at N = " + std::to_string(cap));
    T one = one_like(a.entry(1, 2));
    detail::PfaffianTable<T, std::function<T(unsigned, unsigned)>> table(
        [&a](unsigned i, unsigned j) { return a.entry(i, j); }, one);
    std::map<IndexSet, T> out;
    for (IndexSet s = 0; s <= iset::full(n); ++s)
        if (iset::size(s) % 2 == 0) out.emplace(s, table.pf(s));
    return out;
}

// tilde_index of the coordinate correspondence: I for even |I|, I + {n+1}
// otherwise.
inline IndexSet tilde_index(IndexSet I, unsigned n) { return iset::tilde(I, n); }

struct SymbolicSym {
    SymMatrix<Poly> mat;
    VarTablePtr vars;
};
struct SymbolicAlt {
    AltMatrix<Poly> mat;
    VarTablePtr vars;
};

// Generic symmetric matrix of variables x_{ij}, i <= j.
SymbolicSym symbolic_sym_matrix(unsigned n, const FieldSpec& ring,
                                const std::string& prefix = "x");
// Generic alternating matrix of variables y_{ij}, i < j.
SymbolicAlt symbolic_alt_matrix(unsigned n, const FieldSpec& ring,
                                const std::string& prefix = "y");

std::string matrix_var_name(const std::string& prefix, unsigned i, unsigned j);

// Coefficient-wise checks of prod_{i<j} (1 + y_ij e_i e_j) = sum_I Pf(A_I) e_I
// in the exterior algebra, for the generic alternating matrix over a
// characteristic-two ring.
bool exp_identity_check(unsigned n, const FieldSpec& ring);

} // namespace char2
