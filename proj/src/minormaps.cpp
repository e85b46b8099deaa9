#include "char2/minormaps.hpp"

#include <algorithm>

#include "char2/par.hpp"

namespace char2 {

VerifyReport verify_theorem(unsigned n, const FieldSpec& ring) {
    require(ring.is_char2(), Errc::WrongCharacteristic, "theorem stated in characteristic two");
    require(n >= 1 && n <= 8, Errc::BudgetExceeded, "theorem check capped at n = 8");
    VerifyReport rep{"theorem", true, n, ring, {}};

    auto [s, vars] = symbolic_sym_matrix(n, ring);
    auto minors = all_principal_minors(s);
    auto pf = all_sub_pfaffians(alpha_map(s));

    size_t count = size_t{1} << n;
    std::vector<uint8_t> ok(count, 0);
    par::parallel_for(count, [&](size_t k) {
        IndexSet I = static_cast<IndexSet>(k);
        ok[k] = (minors.at(I) == pf.at(tilde_index(I, n))) ? 1 : 0;
    });
    for (size_t k = 0; k < count; ++k)
        if (!ok[k]) rep.failures.push_back(iset::to_string(static_cast<IndexSet>(k)));
    rep.ok = rep.failures.empty();
    return rep;
}

VerifyReport verify_det_expansion(unsigned n, const FieldSpec& ring) {
    require(ring.is_char2(), Errc::WrongCharacteristic, "identity stated in characteristic two");
    require(n >= 2 && n <= 8, Errc::BudgetExceeded, "expansion check capped at n = 8");
    VerifyReport rep{"prop31", true, n, ring, {}};

    auto [s, vars] = symbolic_sym_matrix(n, ring);
    auto minors = all_principal_minors(s);
    const Poly& lhs = minors.at(iset::full(n));

    Poly rhs = Poly::zero(ring, vars);
    for (unsigned k = 1; k <= n - 1; ++k) {
        Poly coeff = s.entry(k, k) * s.entry(n, n) + s.entry(k, n) * s.entry(k, n);
        rhs = rhs + coeff * minors.at(iset::erase(iset::erase(iset::full(n), k), n));
    }
    if (n % 2 == 1) rhs = rhs + s.entry(n, n) * minors.at(iset::erase(iset::full(n), n));

    if (!(lhs == rhs)) {
        rep.ok = false;
        rep.failures.push_back(n % 2 == 0 ? "even case" : "odd case");
    }
    return rep;
}

VerifyReport verify_frobenius_composition(unsigned n, const FieldSpec& ring) {
    require(ring.is_char2(), Errc::WrongCharacteristic, "Frobenius lives in characteristic two");
    require(n >= 1 && n <= 8, Errc::BudgetExceeded, "composition check capped at n = 8");
    VerifyReport rep{"frobenius", true, n, ring, {}};

    {
        auto [s, vars] = symbolic_sym_matrix(n, ring);
        SymMatrix<Poly> back = beta_map(alpha_map(s));
        for (unsigned i = 1; i <= n; ++i)
            for (unsigned j = i; j <= n; ++j)
                if (!(back.entry(i, j) == s.entry(i, j) * s.entry(i, j)))
                    rep.failures.push_back("beta(alpha(S))(" + std::to_string(i) + "," +
                                           std::to_string(j) + ")");
    }
    {
        auto [a, vars] = symbolic_alt_matrix(n + 1, ring);
        AltMatrix<Poly> back = alpha_map(beta_map(a));
        for (unsigned k = 1; k <= n + 1; ++k)
            for (unsigned l = k + 1; l <= n + 1; ++l)
                if (!(back.entry(k, l) == a.entry(k, l) * a.entry(k, l)))
                    rep.failures.push_back("alpha(beta(A))(" + std::to_string(k) + "," +
                                           std::to_string(l) + ")");
    }
    rep.ok = rep.failures.empty();
    return rep;
}

VarTablePtr z_coordinate_vars(unsigned n) {
    std::vector<std::string> names;
    names.reserve(size_t{1} << n);
    for (uint32_t k = 0; k < (uint32_t{1} << n); ++k) {
        std::string name = "z";
        for (int b = static_cast<int>(n) - 1; b >= 0; --b)
            name += ((k >> b) & 1) ? '1' : '0';
        names.push_back(std::move(name));
    }
    return make_vars(std::move(names));
}

Poly hyperdeterminant() {
    static const char* text =
        "z000^2*z111^2 + z001^2*z110^2 + z010^2*z101^2 + z100^2*z011^2"
        " - 2*z000*z001*z110*z111 - 2*z010*z011*z100*z101 - 2*z000*z010*z101*z111"
        " - 2*z001*z011*z100*z110 - 2*z000*z011*z100*z111 - 2*z001*z010*z101*z110"
        " + 4*z000*z011*z101*z110 + 4*z001*z010*z100*z111";
    return Poly::parse(FieldSpec::integer(), z_coordinate_vars(3), text);
}

Poly hyperdet_mod2_sqrt() { return reduce_mod2(hyperdeterminant()).sqrt_char2(); }

} // namespace char2
