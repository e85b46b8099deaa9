#include "char2/matforms.hpp"

#include "char2/exteriorrep.hpp"

namespace char2 {

std::string matrix_var_name(const std::string& prefix, unsigned i, unsigned j) {
    if (i <= 9 && j <= 9) return prefix + std::to_string(i) + std::to_string(j);
    return prefix + std::to_string(i) + "_" + std::to_string(j);
}

SymbolicSym symbolic_sym_matrix(unsigned n, const FieldSpec& ring, const std::string& prefix) {
    std::vector<std::string> names;
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = i; j <= n; ++j) names.push_back(matrix_var_name(prefix, i, j));
    VarTablePtr vars = make_vars(std::move(names));
    SymMatrix<Poly> m(n, Poly::zero(ring, vars));
    uint32_t v = 0;
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = i; j <= n; ++j) m.set(i, j, Poly::variable(ring, vars, v++));
    return {std::move(m), vars};
}

SymbolicAlt symbolic_alt_matrix(unsigned n, const FieldSpec& ring, const std::string& prefix) {
    std::vector<std::string> names;
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = i + 1; j <= n; ++j) names.push_back(matrix_var_name(prefix, i, j));
    VarTablePtr vars = make_vars(std::move(names));
    AltMatrix<Poly> m(n, Poly::zero(ring, vars));
    uint32_t v = 0;
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = i + 1; j <= n; ++j) m.set(i, j, Poly::variable(ring, vars, v++));
    return {std::move(m), vars};
}

bool exp_identity_check(unsigned n, const FieldSpec& ring) {
    require(ring.is_char2(), Errc::WrongCharacteristic, "identity stated in characteristic two");
    require(n >= 2 && n <= 8, Errc::BudgetExceeded, "product expansion capped at N = 8");
    auto [a, vars] = symbolic_alt_matrix(n, ring);
    Poly one = Poly::one(ring, vars);

    ExtElement<Poly> acc = ExtElement<Poly>::scalar(n, one);
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = i + 1; j <= n; ++j) {
            ExtElement<Poly> factor = ExtElement<Poly>::scalar(n, one);
            factor.add_term(iset::insert(iset::insert(0, i), j), a.entry(i, j));
            acc = wedge(acc, factor);
        }
    }

    auto pf = all_sub_pfaffians(a);
    for (IndexSet s = 0; s <= iset::full(n); ++s) {
        if (iset::size(s) % 2 != 0) {
            if (!acc.coeff(s).is_zero()) return false;
            continue;
        }
        if (!(acc.coeff(s) == pf.at(s))) return false;
    }
    return true;
}

} // namespace char2
