#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "char2/matforms.hpp"

namespace char2::testutil {

// Determinant by the permutation expansion; the independent oracle for the
// division-free implementation. Kept tiny on purpose.
template <class M>
auto naive_det(const M& a) {
    using T = decltype(a.entry(1u, 1u));
    unsigned n = a.size();
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 1u);
    T acc = zero_like(a.entry(1, 1));
    do {
        int inversions = 0;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        T term = one_like(a.entry(1, 1));
        for (unsigned i = 0; i < n; ++i) term = term * a.entry(i + 1, perm[i]);
        acc = (inversions % 2 == 0) ? acc + term : acc - term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

// Pfaffian as the signed sum over perfect matchings; the sign is the parity
// of the flattened matching word, which is independent of the expansion
// recursion used by the implementation.
template <class M>
auto naive_pfaffian(const M& a) {
    using T = decltype(a.entry(1u, 2u));
    unsigned n = a.size();
    T zero = zero_like(a.entry(1, 2));
    if (n % 2 == 1) return zero;
    std::vector<unsigned> word;
    std::vector<bool> used(n + 1, false);
    T acc = zero;
    auto rec = [&](auto&& self) -> void {
        if (word.size() == n) {
            int inversions = 0;
            for (size_t i = 0; i < word.size(); ++i)
                for (size_t j = i + 1; j < word.size(); ++j)
                    if (word[i] > word[j]) ++inversions;
            T term = one_like(a.entry(1, 2));
            for (size_t k = 0; k < word.size(); k += 2)
                term = term * a.entry(word[k], word[k + 1]);
            acc = (inversions % 2 == 0) ? acc + term : acc - term;
            return;
        }
        unsigned i = 1;
        while (used[i]) ++i;
        used[i] = true;
        for (unsigned j = i + 1; j <= n; ++j) {
            if (used[j]) continue;
            used[j] = true;
            word.push_back(i);
            word.push_back(j);
            self(self);
            word.pop_back();
            word.pop_back();
            used[j] = false;
        }
        used[i] = false;
    };
    rec(rec);
    return acc;
}

inline Scalar random_scalar(const FieldSpec& ring, std::mt19937& rng) {
    if (ring.is_finite()) return Scalar::from_bits(ring, rng() % ring.order());
    if (ring.kind() == RingKind::Integer)
        return Scalar::from_int(ring, static_cast<long>(rng() % 19) - 9);
    mpq_class q(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 4) + 1);
    return Scalar::from_mpq(q);
}

inline Poly random_poly(const FieldSpec& ring, const VarTablePtr& vars, std::mt19937& rng,
                        unsigned terms = 4, unsigned max_exp = 2) {
    Poly p(ring, vars);
    for (unsigned t = 0; t < terms; ++t) {
        Monomial m;
        for (uint32_t v = 0; v < vars->size(); ++v) {
            unsigned e = rng() % (max_exp + 1);
            if (e) m = m * Monomial::var(v, e);
        }
        p.add_term(m, random_scalar(ring, rng));
    }
    return p;
}

inline SymMatrix<Scalar> random_sym(unsigned n, const FieldSpec& ring, std::mt19937& rng) {
    SymMatrix<Scalar> s(n, Scalar::zero(ring));
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = i; j <= n; ++j) s.set(i, j, random_scalar(ring, rng));
    return s;
}

inline AltMatrix<Scalar> random_alt(unsigned n, const FieldSpec& ring, std::mt19937& rng) {
    AltMatrix<Scalar> a(n, Scalar::zero(ring));
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = i + 1; j <= n; ++j) a.set(i, j, random_scalar(ring, rng));
    return a;
}

} // namespace char2::testutil
