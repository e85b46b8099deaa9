#include "char2/exteriorrep.hpp"

namespace char2 {

bool verify_sl2(unsigned n, const FieldSpec& ring) {
    require(n >= 1 && n <= 4, Errc::BudgetExceeded, "sl2 check capped at n = 4");
    unsigned d = 2 * n;
    Scalar one = Scalar::one(ring);
    Scalar two = Scalar::from_int(ring, 2);
    for (IndexSet mask = 0; mask <= iset::full(d); ++mask) {
        auto e = ExtElement<Scalar>::basis(d, mask, one);
        auto de = contraction(e);
        auto ee = epsilon_op(e);
        // H = [d, e]
        if (!(contraction(ee) - epsilon_op(de) == h_op(e))) return false;
        // [H, d] = 2 d
        ExtElement<Scalar> two_de(d);
        for (auto& [m, c] : de.terms()) two_de.add_term(m, c * two);
        if (!(h_op(de) - contraction(h_op(e)) == two_de)) return false;
        // [H, e] = -2 e
        ExtElement<Scalar> minus_two_ee(d);
        for (auto& [m, c] : ee.terms()) minus_two_ee.add_term(m, -(c * two));
        if (!(h_op(ee) - epsilon_op(h_op(e)) == minus_two_ee)) return false;
    }
    return true;
}

namespace {

// Basis masks of wedge^k of F2^(2n), ascending; index maps for matrix rows.
std::vector<IndexSet> degree_basis(unsigned d, unsigned k) {
    std::vector<IndexSet> out;
    for (IndexSet m = 0; m <= iset::full(d); ++m)
        if (static_cast<unsigned>(iset::size(m)) == k) out.push_back(m);
    return out;
}

// Matrix of the contraction wedge^k -> wedge^(k-2) over F2.
BitMatrix contraction_matrix(unsigned n, unsigned k) {
    unsigned d = 2 * n;
    auto cols = degree_basis(d, k);
    auto rows = degree_basis(d, k - 2);
    std::map<IndexSet, size_t> row_of;
    for (size_t r = 0; r < rows.size(); ++r) row_of.emplace(rows[r], r);
    BitMatrix m(rows.size(), cols.size());
    for (size_t c = 0; c < cols.size(); ++c) {
        IndexSet mask = cols[c];
        for (unsigned i = 1; i <= n; ++i) {
            if (!iset::contains(mask, i) || !iset::contains(mask, i + n)) continue;
            size_t r = row_of.at(iset::erase(iset::erase(mask, i), i + n));
            m.set(r, c, !m.get(r, c)); // accumulate mod 2
        }
    }
    return m;
}

} // namespace

GowReport gow_codim_check(unsigned n) {
    require(n >= 2 && n <= 4, Errc::BudgetExceeded, "codimension check capped at n = 4");
    GowReport rep;
    rep.n = n;
    rep.dim_wedge_n = degree_basis(2 * n, n).size();
    rep.dim_ker = rep.dim_wedge_n - contraction_matrix(n, n).rank();
    rep.dim_im = contraction_matrix(n, n + 2).rank();
    rep.codim = rep.dim_ker - rep.dim_im;
    return rep;
}

} // namespace char2
