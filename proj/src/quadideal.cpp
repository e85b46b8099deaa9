#include "char2/quadideal.hpp"

#include <algorithm>

#include "char2/exteriorrep.hpp"
#include "char2/kernels.hpp"
#include "char2/matforms.hpp"
#include "char2/minormaps.hpp"
#include "char2/par.hpp"

namespace char2 {

Poly QuadraticFormRep::to_poly() const {
    Poly p(ring, coords);
    for (auto& [ab, c] : coeffs) {
        Monomial m = Monomial::var(ab.first) * Monomial::var(ab.second);
        p.add_term(m, c);
    }
    return p;
}

QuadraticFormRep QuadraticFormRep::from_poly(const Poly& q) {
    QuadraticFormRep rep{q.ring(), q.vars(), {}};
    for (auto& [m, c] : q.terms()) {
        require(m.degree() == 2, Errc::OutOfRange, "form is not homogeneous of degree two");
        auto& f = m.factors();
        uint32_t a = f[0].first;
        uint32_t b = f.size() == 2 ? f[1].first : a;
        rep.coeffs.emplace(std::make_pair(a, b), c);
    }
    return rep;
}

namespace {

struct PullbackMatrix {
    std::vector<Monomial> row_monomials; // in registration order
    size_t cols = 0;
    // nonzero entries, column-major blocks in column order
    std::vector<std::tuple<size_t, size_t, Scalar>> entries;
};

// Rows are indexed by the parameter monomials appearing in any pullback
// column; registration order is the deterministic first-seen order over
// columns. Chunking keeps memory flat; the products inside a chunk run on
// the parallel kernel.
PullbackMatrix build_pullback_matrix(std::span<const Poly> polys_per_column_src,
                                     const std::vector<Poly>& components,
                                     const std::vector<std::pair<uint32_t, uint32_t>>& pairs) {
    PullbackMatrix out;
    std::map<Monomial, size_t, MonomialBefore> row_of;
    const size_t chunk = 64;
    if (!pairs.empty()) {
        out.cols = pairs.size();
        for (size_t lo = 0; lo < pairs.size(); lo += chunk) {
            size_t hi = std::min(pairs.size(), lo + chunk);
            std::span<const std::pair<uint32_t, uint32_t>> span_pairs(pairs.data() + lo, hi - lo);
            std::vector<Poly> products =
                par::enabled() ? products_for_pairs_parallel(components, span_pairs)
                               : products_for_pairs_serial(components, span_pairs);
            for (size_t i = 0; i < products.size(); ++i) {
                for (auto& [m, c] : products[i].terms()) {
                    auto [it, fresh] = row_of.try_emplace(m, row_of.size());
                    if (fresh) out.row_monomials.push_back(m);
                    out.entries.emplace_back(it->second, lo + i, c);
                }
            }
        }
    } else {
        out.cols = polys_per_column_src.size();
        for (size_t i = 0; i < polys_per_column_src.size(); ++i) {
            for (auto& [m, c] : polys_per_column_src[i].terms()) {
                auto [it, fresh] = row_of.try_emplace(m, row_of.size());
                if (fresh) out.row_monomials.push_back(m);
                out.entries.emplace_back(it->second, i, c);
            }
        }
    }
    return out;
}

// Kernel of the evaluation matrix, as RREF rows over the columns.
std::vector<std::vector<Scalar>> kernel_of(const PullbackMatrix& m, const FieldSpec& ring) {
    size_t rows = m.row_monomials.size();
    if (ring.kind() == RingKind::F2) {
        BitMatrix bm(rows, m.cols);
        for (auto& [r, c, s] : m.entries) bm.set(r, c, !s.is_zero());
        auto raw = bm.kernel_basis();
        if (raw.empty()) return {};
        BitMatrix kb(raw.size(), m.cols);
        for (size_t i = 0; i < raw.size(); ++i)
            for (size_t j = 0; j < m.cols; ++j) kb.set(i, j, raw[i][j]);
        kb.rref();
        std::vector<std::vector<Scalar>> out(raw.size(),
                                             std::vector<Scalar>(m.cols, Scalar::zero(ring)));
        for (size_t i = 0; i < raw.size(); ++i)
            for (size_t j = 0; j < m.cols; ++j)
                if (kb.get(i, j)) out[i][j] = Scalar::one(ring);
        return out;
    }
    ScalarMat sm(rows, m.cols, ring);
    for (auto& [r, c, s] : m.entries) sm.at(r, c) = s;
    auto raw = sm.kernel_basis();
    if (raw.empty()) return {};
    ScalarMat kb(raw.size(), m.cols, ring);
    for (size_t i = 0; i < raw.size(); ++i)
        for (size_t j = 0; j < m.cols; ++j) kb.at(i, j) = raw[i][j];
    kb.rref();
    std::vector<std::vector<Scalar>> out(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) {
        out[i].reserve(m.cols);
        for (size_t j = 0; j < m.cols; ++j) out[i].push_back(kb.at(i, j));
    }
    return out;
}

} // namespace

std::vector<QuadraticFormRep> quadrics_vanishing(const Parametrization& p) {
    require(p.ring.is_field(), Errc::InvalidConfig, "quadric search needs a field");
    size_t m = p.ambient();
    require(m * (m + 1) / 2 <= 600, Errc::BudgetExceeded, "quadric search capped at 600 columns");
    bool nonzero = false;
    for (auto& f : p.components) nonzero = nonzero || !f.is_zero();
    require(nonzero, Errc::InvalidConfig, "all components vanish");

    auto pairs = monomial_pairs(m);
    PullbackMatrix mat = build_pullback_matrix({}, p.components, pairs);
    auto kernel = kernel_of(mat, p.ring);

    std::vector<QuadraticFormRep> out;
    out.reserve(kernel.size());
    for (auto& vec : kernel) {
        QuadraticFormRep q{p.ring, p.coords, {}};
        for (size_t i = 0; i < pairs.size(); ++i)
            if (!vec[i].is_zero()) q.coeffs.emplace(pairs[i], vec[i]);
        out.push_back(std::move(q));
    }
    return out;
}

bool verify_quadric_pullbacks(const Parametrization& p,
                              const std::vector<QuadraticFormRep>& quadrics) {
    std::vector<uint8_t> ok(quadrics.size(), 0);
    par::parallel_for(quadrics.size(), [&](size_t i) {
        ok[i] = quadrics[i].to_poly().substitute(p.components).is_zero() ? 1 : 0;
    });
    return std::all_of(ok.begin(), ok.end(), [](uint8_t b) { return b == 1; });
}

mpz_class expected_quadric_count(unsigned n) {
    require(n >= 3 && n <= 30, Errc::OutOfRange, "count formula stated for n >= 3");
    mpz_class half = mpz_class(1) << (n - 1); // 2^(n-1)
    mpz_class quads = half * (half + 1) / 2;
    mpz_class binom = 1;
    for (unsigned i = 1; i <= n; ++i) {
        binom *= (n + i);
        binom /= i;
    }
    return quads - binom / 2;
}

Parametrization tangential_param(const Parametrization& p) {
    size_t r = p.params->size();
    std::vector<std::string> names;
    names.reserve(2 * r);
    for (uint32_t i = 0; i < r; ++i) names.push_back(p.params->name(i));
    for (uint32_t i = 0; i < r; ++i) names.push_back("d" + p.params->name(i));
    VarTablePtr both = make_vars(std::move(names));

    std::vector<Poly> embed;
    embed.reserve(r);
    for (uint32_t i = 0; i < r; ++i) embed.push_back(Poly::variable(p.ring, both, i));

    std::vector<Poly> components;
    components.reserve(p.ambient());
    for (const Poly& f : p.components) {
        Poly tangent = f.substitute(embed);
        for (uint32_t j = 0; j < r; ++j) {
            Poly df = f.partial(j);
            if (df.is_zero()) continue;
            tangent = tangent + df.substitute(embed) *
                                    Poly::variable(p.ring, both, static_cast<uint32_t>(r + j));
        }
        components.push_back(std::move(tangent));
    }
    return Parametrization{p.ring, both, p.coords, std::move(components)};
}

LinearSpanReport linear_span(const Parametrization& p) {
    require(p.ambient() <= 64, Errc::BudgetExceeded, "span computation capped at 64 coordinates");
    std::vector<std::pair<uint32_t, uint32_t>> no_pairs;
    PullbackMatrix mat = build_pullback_matrix(p.components, {}, no_pairs);
    auto kernel = kernel_of(mat, p.ring);
    LinearSpanReport rep;
    rep.vanishing_forms = std::move(kernel);
    rep.span_dim = p.ambient() - rep.vanishing_forms.size();
    return rep;
}

Parametrization restrict_to_span(const Parametrization& p, const LinearSpanReport& span) {
    std::vector<bool> pivot(p.ambient(), false);
    for (auto& form : span.vanishing_forms) {
        size_t lead = 0;
        while (lead < form.size() && form[lead].is_zero()) ++lead;
        require(lead < form.size(), Errc::InvalidConfig, "zero linear form");
        pivot[lead] = true;
    }
    std::vector<std::string> names;
    std::vector<Poly> components;
    for (size_t k = 0; k < p.ambient(); ++k) {
        if (pivot[k]) continue;
        names.push_back(p.coords->name(static_cast<uint32_t>(k)));
        components.push_back(p.components[k]);
    }
    return Parametrization{p.ring, p.params, make_vars(std::move(names)),
                           std::move(components)};
}

unsigned bilinear_rank(const QuadraticFormRep& q) {
    require(q.ring.is_char2(), Errc::WrongCharacteristic,
            "the associated alternating form lives in characteristic two");
    size_t m = q.ambient();
    ScalarMat b(m, m, q.ring);
    for (auto& [ab, c] : q.coeffs) {
        auto [i, j] = ab;
        if (i == j) continue; // squares polarize to zero
        b.at(i, j) = c;
        b.at(j, i) = c;
    }
    return static_cast<unsigned>(b.rank());
}

SingularLocusReport singular_locus_char2(const QuadraticFormRep& q) {
    require(q.ring.is_char2(), Errc::WrongCharacteristic, "singular locus in characteristic two");
    size_t m = q.ambient();
    ScalarMat b(m, m, q.ring);
    for (auto& [ab, c] : q.coeffs) {
        auto [i, j] = ab;
        if (i == j) continue;
        b.at(i, j) = c;
        b.at(j, i) = c;
    }
    auto radical = b.kernel_basis();
    SingularLocusReport rep;
    if (radical.empty()) return rep; // smooth: empty singular locus

    auto eval_q = [&](const std::vector<Scalar>& v) {
        Scalar acc = Scalar::zero(q.ring);
        for (auto& [ab, c] : q.coeffs) acc = acc + c * v[ab.first] * v[ab.second];
        return acc;
    };
    // Q restricted to the radical is additive: Q(sum t_i v_i) =
    // (sum t_i sqrt(Q(v_i)))^2, so the locus is the kernel of one functional.
    std::vector<Scalar> lambda;
    lambda.reserve(radical.size());
    bool all_zero = true;
    for (auto& v : radical) {
        lambda.push_back(eval_q(v).sqrt_char2());
        all_zero = all_zero && lambda.back().is_zero();
    }
    std::vector<std::vector<Scalar>> basis;
    if (all_zero) {
        basis = radical;
    } else {
        size_t lead = 0;
        while (lambda[lead].is_zero()) ++lead;
        Scalar linv = lambda[lead].inv();
        for (size_t i = 0; i < radical.size(); ++i) {
            if (i == lead) continue;
            std::vector<Scalar> v = radical[i];
            if (!lambda[i].is_zero()) {
                Scalar factor = lambda[i] * linv;
                for (size_t c = 0; c < v.size(); ++c)
                    v[c] = v[c] - factor * radical[lead][c];
            }
            basis.push_back(std::move(v));
        }
    }
    if (basis.empty()) return rep; // a single point off the quadric: empty locus
    ScalarMat bm(basis.size(), m, q.ring);
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < m; ++j) bm.at(i, j) = basis[i][j];
    bm.rref();
    rep.proj_dim = static_cast<int>(basis.size()) - 1;
    rep.basis.resize(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) {
        rep.basis[i].reserve(m);
        for (size_t j = 0; j < m; ++j) rep.basis[i].push_back(bm.at(i, j));
    }
    return rep;
}

Parametrization minor_map_param(unsigned n, const FieldSpec& ring) {
    auto [s, vars] = symbolic_sym_matrix(n, ring);
    auto minors = all_principal_minors(s);
    std::vector<Poly> components;
    components.reserve(size_t{1} << n);
    for (IndexSet I = 0; I <= iset::full(n); ++I) components.push_back(minors.at(I));
    return Parametrization{ring, vars, z_coordinate_vars(n), std::move(components)};
}

Parametrization subpfaffian_map_param(unsigned m, const FieldSpec& ring) {
    auto [a, vars] = symbolic_alt_matrix(m, ring);
    auto pf = all_sub_pfaffians(a);
    unsigned n = m - 1;
    std::vector<Poly> components;
    components.reserve(size_t{1} << n);
    for (IndexSet I = 0; I <= iset::full(n); ++I)
        components.push_back(pf.at(tilde_index(I, n)));
    return Parametrization{ring, vars, z_coordinate_vars(n), std::move(components)};
}

namespace {

Parametrization plucker_chart_36(const FieldSpec& ring, bool symmetric) {
    auto built = symmetric ? symbolic_sym_matrix(3, ring) : SymbolicSym{SymMatrix<Poly>(3, Poly()), nullptr};
    VarTablePtr vars;
    std::vector<std::vector<Poly>> x(3, std::vector<Poly>());
    if (symmetric) {
        vars = built.vars;
        for (unsigned i = 1; i <= 3; ++i)
            for (unsigned j = 1; j <= 3; ++j) x[i - 1].push_back(built.mat.entry(i, j));
    } else {
        std::vector<std::string> names;
        for (unsigned i = 1; i <= 3; ++i)
            for (unsigned j = 1; j <= 3; ++j) names.push_back(matrix_var_name("x", i, j));
        vars = make_vars(std::move(names));
        uint32_t v = 0;
        for (unsigned i = 0; i < 3; ++i)
            for (unsigned j = 0; j < 3; ++j) x[i].push_back(Poly::variable(ring, vars, v++));
    }
    // rows of (I | X): row j has e_j and the j-th column of X
    std::vector<std::vector<Poly>> rows(3, std::vector<Poly>());
    for (unsigned j = 0; j < 3; ++j) {
        for (unsigned c = 0; c < 3; ++c)
            rows[j].push_back(c == j ? Poly::one(ring, vars) : Poly::zero(ring, vars));
        for (unsigned i = 0; i < 3; ++i) rows[j].push_back(x[i][j]);
    }
    auto wedge3 = plucker(rows);
    std::vector<std::string> coord_names;
    std::vector<Poly> components;
    for (IndexSet mask = 0; mask <= iset::full(6); ++mask) {
        if (iset::size(mask) != 3) continue;
        std::string name = "p";
        for (unsigned e : iset::elements(mask)) name += std::to_string(e);
        coord_names.push_back(std::move(name));
        components.push_back(wedge3.coeff(mask));
    }
    return Parametrization{ring, vars, make_vars(std::move(coord_names)),
                           std::move(components)};
}

} // namespace

Parametrization plucker_chart_gr36(const FieldSpec& ring) { return plucker_chart_36(ring, false); }

Parametrization plucker_chart_lg36(const FieldSpec& ring) { return plucker_chart_36(ring, true); }

Parametrization segre_chart_p1p1p1(const FieldSpec& ring) {
    VarTablePtr vars = make_vars({"s", "t", "u"});
    std::vector<Poly> components;
    components.reserve(8);
    for (uint32_t k = 0; k < 8; ++k) {
        Poly f = Poly::one(ring, vars);
        if (k & 4) f = f * Poly::variable(ring, vars, 0);
        if (k & 2) f = f * Poly::variable(ring, vars, 1);
        if (k & 1) f = f * Poly::variable(ring, vars, 2);
        components.push_back(std::move(f));
    }
    return Parametrization{ring, vars, z_coordinate_vars(3), std::move(components)};
}

} // namespace char2
