#include "char2/runner.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "char2/exteriorrep.hpp"
#include "char2/fingeo.hpp"
#include "char2/freudenthal.hpp"
#include "char2/kernels.hpp"
#include "char2/matforms.hpp"
#include "char2/minormaps.hpp"
#include "char2/mpoly.hpp"
#include "char2/par.hpp"
#include "char2/quadideal.hpp"

namespace char2 {

namespace {

using Clock = std::chrono::steady_clock;

long elapsed_ms(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

thread_local Clock::time_point g_deadline_start;
thread_local long g_budget_ms = 0;

void budget_checkpoint() {
    if (g_budget_ms > 0 && elapsed_ms(g_deadline_start) > g_budget_ms)
        fail(Errc::BudgetExceeded, "time budget of " + std::to_string(g_budget_ms) +
                                       " ms exceeded");
}

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(uint64_t v) {
    char buf[19];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), Errc::InvalidConfig, "cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(Errc::InvalidConfig, "bad JSON in " + path + ": " + e.what());
    }
    return j;
}

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    fail(Errc::InvalidConfig, "matrix entries must be strings or integers");
}

struct MatrixJson {
    unsigned n = 0;
    FieldSpec ring;
    VarTablePtr vars; // non-null for polynomial entries
    std::vector<std::tuple<unsigned, unsigned, std::string>> entries;
};

MatrixJson matrix_json(const Json& j) {
    MatrixJson m;
    require(j.contains("n") && j.contains("ring") && j.contains("entries"), Errc::InvalidConfig,
            "matrix JSON needs n, ring, entries");
    m.n = j.at("n").get<unsigned>();
    m.ring = FieldSpec::parse(j.at("ring").get<std::string>());
    if (j.contains("vars")) {
        std::vector<std::string> names;
        for (auto& v : j.at("vars")) names.push_back(v.get<std::string>());
        m.vars = make_vars(std::move(names));
    }
    for (auto& e : j.at("entries")) {
        require(e.is_array() && e.size() == 3, Errc::InvalidConfig,
                "matrix entries are [i, j, value]");
        m.entries.emplace_back(e[0].get<unsigned>(), e[1].get<unsigned>(), scalar_text(e[2]));
    }
    return m;
}

// Symmetry is auto-completed: either triangle may be given, duplicates must
// agree.
template <class T, class ParseFn>
SymMatrix<T> sym_from_entries(const MatrixJson& m, const T& zero, ParseFn parse) {
    SymMatrix<T> s(m.n, zero);
    std::vector<bool> seen(m.n * m.n, false);
    for (auto& [i, j, text] : m.entries) {
        require(1 <= i && i <= m.n && 1 <= j && j <= m.n, Errc::InvalidConfig, "index range");
        T v = parse(text);
        unsigned a = std::min(i, j), b = std::max(i, j);
        if (seen[(a - 1) * m.n + (b - 1)])
            require(s.entry(a, b) == v, Errc::InvalidConfig,
                    "inconsistent symmetric entries at (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
        seen[(a - 1) * m.n + (b - 1)] = true;
        s.set(a, b, v);
    }
    return s;
}

template <class T, class ParseFn>
AltMatrix<T> alt_from_entries(const MatrixJson& m, const T& zero, ParseFn parse) {
    AltMatrix<T> a(m.n, zero);
    std::vector<bool> seen(m.n * m.n, false);
    for (auto& [i, j, text] : m.entries) {
        require(1 <= i && i <= m.n && 1 <= j && j <= m.n, Errc::InvalidConfig, "index range");
        T v = parse(text);
        if (i == j) {
            require(v == zero, Errc::InvalidConfig, "alternating matrices have zero diagonal");
            continue;
        }
        if (seen[(std::min(i, j) - 1) * m.n + (std::max(i, j) - 1)])
            require(a.entry(i, j) == v, Errc::InvalidConfig,
                    "inconsistent alternating entries at (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
        seen[(std::min(i, j) - 1) * m.n + (std::max(i, j) - 1)] = true;
        a.set(i, j, v);
    }
    return a;
}

SubspaceRep subspace_from_json(const Json& j) {
    require(j.contains("q") && j.contains("m") && j.contains("basis"), Errc::InvalidConfig,
            "subspace JSON needs q, m, basis");
    unsigned q = j.at("q").get<unsigned>();
    unsigned m = j.at("m").get<unsigned>();
    Fq f(q);
    std::vector<FqVec> rows;
    for (auto& r : j.at("basis")) {
        FqVec row;
        for (auto& c : r) {
            unsigned v = c.get<unsigned>();
            require(v < q, Errc::InvalidConfig, "coordinate out of range");
            row.push_back(static_cast<uint8_t>(v));
        }
        require(row.size() == m, Errc::InvalidConfig, "row length != m");
        rows.push_back(std::move(row));
    }
    return make_subspace(f, m, std::move(rows));
}

std::string row_digits(const FqVec& v) {
    static const char digits[] = "0123456789abcdef";
    std::string s;
    s.reserve(v.size());
    for (uint8_t c : v) s.push_back(digits[c & 0xf]);
    return s;
}

Json subspace_set_json(const std::set<SubspaceRep>& set) {
    Json out = Json::object();
    out["count"] = set.size();
    if (set.size() > 10000) {
        std::string cat;
        for (auto& w : set)
            for (auto& r : w.basis) cat += row_digits(r) + ";";
        out["hash"] = hex64(fnv1a(cat));
        return out;
    }
    Json arr = Json::array();
    for (auto& w : set) {
        Json rows = Json::array();
        for (auto& r : w.basis) rows.push_back(row_digits(r));
        arr.push_back(std::move(rows));
    }
    out["subspaces"] = std::move(arr);
    return out;
}

Json point_set_json(const std::set<ProjPoint>& set) {
    Json out = Json::object();
    out["count"] = set.size();
    std::string cat;
    for (auto& p : set) cat += row_digits(p.coords) + ";";
    out["hash"] = hex64(fnv1a(cat));
    if (set.size() <= 10000) {
        Json arr = Json::array();
        for (auto& p : set) arr.push_back(row_digits(p.coords));
        out["points"] = std::move(arr);
    }
    return out;
}

Json verify_json(const VerifyReport& rep) {
    Json out = Json::object();
    out["ok"] = rep.ok;
    out["n"] = rep.n;
    out["ring"] = rep.ring.name();
    out["failures"] = rep.failures;
    return out;
}

// ---------------------------------------------------------------------------
// command handlers
// ---------------------------------------------------------------------------

Json cmd_verify(const RunConfig& cfg) {
    FieldSpec ring = FieldSpec::parse(cfg.ring);
    VerifyReport rep;
    if (cfg.command == "verify-theorem")
        rep = verify_theorem(cfg.n, ring);
    else if (cfg.command == "verify-prop31")
        rep = verify_det_expansion(cfg.n, ring);
    else if (cfg.command == "verify-frobenius")
        rep = verify_frobenius_composition(cfg.n, ring);
    else
        fail(Errc::InvalidConfig, "unknown verify check");
    return verify_json(rep);
}

Json cmd_minors(const RunConfig& cfg) {
    Json out = Json::object();
    Json list = Json::array();
    bool ok = true;
    auto emit = [&](IndexSet s, const std::string& value) {
        list.push_back(Json{{"subset", iset::to_string(s)}, {"value", value}});
    };
    if (!cfg.matrix_path.empty()) {
        MatrixJson m = matrix_json(load_json(cfg.matrix_path));
        out["n"] = m.n;
        out["ring"] = m.ring.name();
        if (m.vars) {
            auto s = sym_from_entries<Poly>(m, Poly::zero(m.ring, m.vars), [&](const std::string& t) {
                return Poly::parse(m.ring, m.vars, t);
            });
            for (auto& [I, v] : all_principal_minors(s)) emit(I, v.str());
        } else {
            auto s = sym_from_entries<Scalar>(m, Scalar::zero(m.ring), [&](const std::string& t) {
                return Scalar::parse(m.ring, t);
            });
            for (auto& [I, v] : all_principal_minors(s)) emit(I, v.str());
        }
    } else {
        FieldSpec ring = FieldSpec::parse(cfg.ring);
        auto [s, vars] = symbolic_sym_matrix(cfg.n, ring);
        out["n"] = cfg.n;
        out["ring"] = ring.name();
        for (auto& [I, v] : all_principal_minors(s)) emit(I, v.str());
    }
    out["ok"] = ok;
    out["minors"] = std::move(list);
    return out;
}

Json cmd_pfaffians(const RunConfig& cfg) {
    Json out = Json::object();
    Json list = Json::array();
    auto emit = [&](IndexSet s, const std::string& value) {
        list.push_back(Json{{"subset", iset::to_string(s)}, {"value", value}});
    };
    if (!cfg.matrix_path.empty()) {
        MatrixJson m = matrix_json(load_json(cfg.matrix_path));
        out["n"] = m.n;
        out["ring"] = m.ring.name();
        if (m.vars) {
            auto a = alt_from_entries<Poly>(m, Poly::zero(m.ring, m.vars), [&](const std::string& t) {
                return Poly::parse(m.ring, m.vars, t);
            });
            for (auto& [I, v] : all_sub_pfaffians(a)) emit(I, v.str());
        } else {
            auto a = alt_from_entries<Scalar>(m, Scalar::zero(m.ring), [&](const std::string& t) {
                return Scalar::parse(m.ring, t);
            });
            for (auto& [I, v] : all_sub_pfaffians(a)) emit(I, v.str());
        }
    } else {
        FieldSpec ring = FieldSpec::parse(cfg.ring);
        auto [a, vars] = symbolic_alt_matrix(cfg.n, ring);
        out["n"] = cfg.n;
        out["ring"] = ring.name();
        for (auto& [I, v] : all_sub_pfaffians(a)) emit(I, v.str());
    }
    out["ok"] = true;
    out["pfaffians"] = std::move(list);
    return out;
}

// The structured polynomial form: a list of {monomial: {var: exp}, coeff}.
Json poly_json(const Poly& p) {
    Json out = Json::array();
    for (auto& [m, c] : p.terms()) {
        Json mono = Json::object();
        for (auto& [v, e] : m.factors()) mono[p.vars()->name(v)] = e;
        out.push_back(Json{{"monomial", std::move(mono)}, {"coeff", c.str()}});
    }
    return out;
}

Json cmd_hyperdet(const RunConfig& cfg) {
    Json out = Json::object();
    Poly h = hyperdeterminant();
    out["ok"] = true;
    out["term_count"] = h.term_count();
    std::map<std::string, int> multiset;
    for (auto& [m, c] : h.terms()) multiset[c.str()] += 1;
    out["coefficient_multiset"] = multiset;
    if (cfg.mod2) {
        Poly root = hyperdet_mod2_sqrt();
        out["mod2_sqrt"] = root.str();
        out["mod2_sqrt_term_count"] = root.term_count();
    } else {
        out["poly"] = h.str();
        out["terms"] = poly_json(h);
    }
    return out;
}

Json cmd_exterior(const RunConfig& cfg) {
    Json out = Json::object();
    if (cfg.check_sl2) {
        bool ok = verify_sl2(cfg.n, FieldSpec::rational());
        out["ok"] = ok;
        out["n"] = cfg.n;
        out["check"] = "sl2";
        return out;
    }
    if (cfg.gow) {
        GowReport rep = gow_codim_check(cfg.n);
        out["ok"] = rep.codim == (size_t{1} << rep.n);
        out["n"] = rep.n;
        out["check"] = "gow";
        out["dim_wedge_n"] = rep.dim_wedge_n;
        out["dim_ker"] = rep.dim_ker;
        out["dim_im"] = rep.dim_im;
        out["codim"] = rep.codim;
        return out;
    }
    require(!cfg.subspace_path.empty(), Errc::InvalidConfig,
            "exterior needs --check-sl2, --gow or --project");
    SubspaceRep w = subspace_from_json(load_json(cfg.subspace_path));
    Fq f(w.q);
    std::vector<std::vector<Scalar>> rows;
    for (auto& r : w.basis) {
        std::vector<Scalar> row;
        for (uint8_t c : r) row.push_back(f.to_scalar(c));
        rows.push_back(std::move(row));
    }
    auto theta = plucker(rows);
    out["ok"] = true;
    out["q"] = w.q;
    out["m"] = w.m;
    out["dim"] = w.dim();
    out["plucker_terms"] = theta.terms().size();
    if (w.m == 2 * w.dim()) {
        out["in_kernel_partial"] = in_kernel_partial(theta);
        Json coords = Json::array();
        for (auto& c : special_projection(theta)) coords.push_back(c.str());
        out["special_projection"] = std::move(coords);
    }
    return out;
}

Json cmd_enumerate(const RunConfig& cfg) {
    Json out = Json::object();
    if (cfg.command == "enumerate-lg") {
        auto set = enumerate_lagrangian(cfg.n, cfg.q);
        out["ok"] = true;
        out["n"] = cfg.n;
        out["q"] = cfg.q;
        out.update(subspace_set_json(set));
        return out;
    }
    auto set = enumerate_spinor_even(cfg.m, cfg.q);
    out["ok"] = true;
    out["m"] = cfg.m;
    out["q"] = cfg.q;
    out.update(subspace_set_json(set));
    return out;
}

std::vector<uint32_t> points_as_masks(const std::set<ProjPoint>& pts) {
    std::vector<uint32_t> masks;
    masks.reserve(pts.size());
    for (auto& p : pts) {
        uint32_t m = 0;
        for (size_t i = 0; i < p.coords.size(); ++i)
            if (p.coords[i]) m |= uint32_t{1} << i;
        masks.push_back(m);
    }
    std::sort(masks.begin(), masks.end());
    return masks;
}

Json cmd_images(const RunConfig& cfg) {
    require(cfg.q == 2, Errc::InvalidConfig, "image point sets are computed over F2");
    Json out = Json::object();
    auto pi = image_points_pi(cfg.n, 2);
    budget_checkpoint();
    auto sigma = image_points_sigma(cfg.n + 1, 2);
    budget_checkpoint();
    out["n"] = cfg.n;
    out["q"] = 2;
    out["pi_count"] = pi.size();
    out["sigma_count"] = sigma.size();
    bool equal = (pi == sigma);
    out["pi_equals_sigma"] = equal;
    out["pi"] = point_set_json(pi);
    bool ok = equal;
    if (cfg.compare) {
        auto param = subpfaffian_map_param(cfg.n + 1, FieldSpec::f2());
        auto quadrics = quadrics_vanishing(param);
        budget_checkpoint();
        std::vector<QuadricPairs> pairs;
        for (auto& q : quadrics) {
            QuadricPairs qp;
            for (auto& [ab, c] : q.coeffs) qp.push_back(ab);
            pairs.push_back(std::move(qp));
        }
        auto locus = par::enabled() ? quadric_zero_locus_parallel(pairs, 1u << cfg.n)
                                    : quadric_zero_locus_serial(pairs, 1u << cfg.n);
        bool locus_equal = (locus == points_as_masks(pi));
        out["quadric_count"] = quadrics.size();
        out["zero_locus_count"] = locus.size();
        out["zero_locus_equals_pi"] = locus_equal;
        ok = ok && locus_equal;
    }
    out["ok"] = ok;
    return out;
}

Json cmd_fiber(const RunConfig& cfg) {
    Json out = Json::object();
    FieldSpec fp = FieldSpec::fp(cfg.p);
    SymMatrix<Scalar> x(cfg.n, Scalar::zero(fp));
    if (!cfg.matrix_path.empty()) {
        MatrixJson m = matrix_json(load_json(cfg.matrix_path));
        require(m.ring == fp && m.n == cfg.n, Errc::InvalidConfig,
                "matrix ring/size must match --p and --n");
        x = sym_from_entries<Scalar>(m, Scalar::zero(fp),
                                     [&](const std::string& t) { return Scalar::parse(fp, t); });
    } else {
        for (unsigned i = 1; i <= cfg.n; ++i)
            for (unsigned j = i; j <= cfg.n; ++j) x.set(i, j, Scalar::one(fp));
    }
    long count = fiber_size_check(cfg.n, cfg.p, x);
    out["ok"] = true;
    out["n"] = cfg.n;
    out["p"] = cfg.p;
    out["fiber_size"] = count;
    return out;
}

struct QuadricBundle {
    Parametrization param;   // possibly restricted to the span
    size_t full_ambient = 0; // before restriction
    bool tangential = false;
    size_t span_dim = 0;
    std::vector<QuadraticFormRep> quadrics;
};

QuadricBundle quadric_bundle(const std::string& variety, unsigned n, unsigned m,
                             const FieldSpec& ring) {
    QuadricBundle b;
    Parametrization p{ring, nullptr, nullptr, {}};
    if (variety == "zn") {
        p = minor_map_param(n, ring);
    } else if (variety == "spinor") {
        p = subpfaffian_map_param(m ? m : n + 1, ring);
    } else if (variety == "gr36") {
        p = plucker_chart_gr36(ring);
    } else if (variety == "segre-tangential") {
        p = tangential_param(segre_chart_p1p1p1(ring));
        b.tangential = true;
    } else if (variety == "lg36-tangential") {
        p = tangential_param(plucker_chart_lg36(ring));
        b.tangential = true;
    } else if (variety == "gr36-tangential") {
        p = tangential_param(plucker_chart_gr36(ring));
        b.tangential = true;
    } else if (variety == "s6-tangential") {
        p = tangential_param(subpfaffian_map_param(6, ring));
        b.tangential = true;
    } else {
        fail(Errc::InvalidConfig, "unknown variety: " + variety);
    }
    b.full_ambient = p.ambient();
    budget_checkpoint();
    if (b.tangential) {
        auto span = linear_span(p);
        b.span_dim = span.span_dim;
        p = restrict_to_span(p, span);
        budget_checkpoint();
    } else {
        b.span_dim = p.ambient();
    }
    b.quadrics = quadrics_vanishing(p);
    b.param = std::move(p);
    return b;
}

Json quadric_bundle_json(const QuadricBundle& b) {
    Json out = Json::object();
    out["ambient"] = b.full_ambient;
    if (b.tangential) out["span_dim"] = b.span_dim;
    out["count"] = b.quadrics.size();
    Json basis = Json::array();
    for (auto& q : b.quadrics) basis.push_back(q.to_poly().str());
    out["quadrics"] = std::move(basis);
    if (b.quadrics.size() == 1 && b.param.ring.is_char2()) {
        out["bilinear_rank"] = bilinear_rank(b.quadrics[0]);
        out["singular_locus_dim"] = singular_locus_char2(b.quadrics[0]).proj_dim;
    }
    return out;
}

Json cmd_quadrics(const RunConfig& cfg) {
    FieldSpec ring = FieldSpec::parse(cfg.ring);
    QuadricBundle b = quadric_bundle(cfg.variety, cfg.n, cfg.m, ring);
    budget_checkpoint();
    bool verified = verify_quadric_pullbacks(b.param, b.quadrics);
    Json out = Json::object();
    out["ok"] = verified;
    out["variety"] = cfg.variety;
    out["ring"] = ring.name();
    out.update(quadric_bundle_json(b));
    out["pullbacks_vanish"] = verified;
    return out;
}

Json cmd_tangential(const RunConfig& cfg) {
    std::string variety;
    if (cfg.fts_case == "q0")
        variety = "segre-tangential";
    else if (cfg.fts_case == "q1")
        variety = "lg36-tangential";
    else if (cfg.fts_case == "q2")
        variety = "gr36-tangential";
    else if (cfg.fts_case == "q4")
        variety = "s6-tangential";
    else
        fail(Errc::InvalidConfig, "tangential case must be one of q0, q1, q2, q4");
    RunConfig sub = cfg;
    sub.variety = variety;
    Json out = cmd_quadrics(sub);
    out["case"] = cfg.fts_case;
    return out;
}

Json cmd_freudenthal(const RunConfig& cfg) {
    Json out = Json::object();
    out["case"] = cfg.fts_case;
    Poly quartic;
    std::set<std::string> coeffs;
    Json checks = Json::object();
    if (cfg.fts_case == "q0" || cfg.fts_case == "q1") {
        auto model = cfg.fts_case == "q0" ? JordanModel::Diagonal : JordanModel::Sym3;
        auto sym = make_fts_symbolic(model);
        quartic = fts_quartic(sym.u);
        out["variables"] = sym.vars->size();
        out["term_count"] = quartic.term_count();
        if (cfg.fts_case == "q0") {
            Poly h = to_ring(hyperdeterminant(), FieldSpec::rational());
            checks["equals_hyperdeterminant"] = (diagonal_quartic_as_hyperdet(quartic) == h);
        }
        if (cfg.mod2) {
            auto m2 = fts_quartic_mod2(sym.u);
            out["mod2_term_count"] = m2.reduced.term_count();
            out["mod2_sqrt"] = m2.root.str();
            checks["mod2_sqrt_squares_back"] = (m2.root * m2.root == m2.reduced);
        }
    } else if (cfg.fts_case == "e7") {
        quartic = e7_quartic();
        out["variables"] = 56;
        out["term_count"] = quartic.term_count();
        if (cfg.mod2) {
            auto m2 = e7_quartic_mod2();
            out["mod2_term_count"] = m2.reduced.term_count();
            out["mod2_sqrt_term_count"] = m2.root.term_count();
            out["mod2_sqrt"] = m2.root.str();
            checks["mod2_sqrt_squares_back"] = (m2.root * m2.root == m2.reduced);
        }
        bool integral = true;
        for (auto& [m, c] : quartic.terms()) {
            mpq_class scaled = c.as_mpq() * 4;
            scaled.canonicalize();
            integral = integral && scaled.get_den() == 1;
        }
        checks["four_j_integral"] = integral;
    } else {
        fail(Errc::InvalidConfig, "freudenthal case must be q0, q1 or e7");
    }
    for (auto& [m, c] : quartic.terms()) coeffs.insert(c.str());
    out["coefficient_set"] = coeffs;
    if (!cfg.eval_path.empty()) {
        Json pj = load_json(cfg.eval_path);
        require(pj.contains("point"), Errc::InvalidConfig, "eval JSON needs a point array");
        std::vector<Scalar> point;
        for (auto& v : pj.at("point"))
            point.push_back(Scalar::parse(FieldSpec::rational(), scalar_text(v)));
        out["value"] = quartic.eval(point).str();
    }
    out["checks"] = std::move(checks);
    out["ok"] = true;
    return out;
}

Json cmd_run_all(const RunConfig& cfg) {
    return acceptance_report(cfg.profile);
}

} // namespace

int exit_code_for_error(const Error& e) {
    switch (e.code()) {
        case Errc::BudgetExceeded: return 3;
        case Errc::InvalidConfig:
        case Errc::ParseError: return 2;
        default: return 1;
    }
}

Json run(const RunConfig& cfg) {
    Clock::time_point start = Clock::now();
    g_deadline_start = start;
    g_budget_ms = cfg.budget_ms;
    if (g_budget_ms == 0) {
        if (const char* env = std::getenv("CHAR2_BUDGET_MS")) g_budget_ms = std::atol(env);
    }

    Json body;
    if (cfg.command == "verify-theorem" || cfg.command == "verify-prop31" ||
        cfg.command == "verify-frobenius")
        body = cmd_verify(cfg);
    else if (cfg.command == "minors")
        body = cmd_minors(cfg);
    else if (cfg.command == "pfaffians")
        body = cmd_pfaffians(cfg);
    else if (cfg.command == "hyperdet")
        body = cmd_hyperdet(cfg);
    else if (cfg.command == "exterior")
        body = cmd_exterior(cfg);
    else if (cfg.command == "enumerate-lg" || cfg.command == "enumerate-spinor")
        body = cmd_enumerate(cfg);
    else if (cfg.command == "images")
        body = cmd_images(cfg);
    else if (cfg.command == "fiber")
        body = cmd_fiber(cfg);
    else if (cfg.command == "quadrics")
        body = cmd_quadrics(cfg);
    else if (cfg.command == "tangential")
        body = cmd_tangential(cfg);
    else if (cfg.command == "freudenthal")
        body = cmd_freudenthal(cfg);
    else if (cfg.command == "run-all")
        body = cmd_run_all(cfg);
    else
        fail(Errc::InvalidConfig, "unknown command: " + cfg.command);

    Json out = Json::object();
    out["command"] = cfg.command;
    out.update(body);
    if (cfg.timing) out["elapsed_ms"] = elapsed_ms(start);
    g_budget_ms = 0;
    return out;
}

// ---------------------------------------------------------------------------
// acceptance criteria
// ---------------------------------------------------------------------------

namespace {

struct Checker {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

void criterion_theorem(Checker& c) {
    for (const char* ring : {"f2", "f4"})
        for (unsigned n = 1; n <= 6; ++n) {
            auto rep = verify_theorem(n, FieldSpec::parse(ring));
            c.expect(rep.ok, std::string("theorem failed: n=") + std::to_string(n) + " " + ring);
        }
}

void criterion_prop31(Checker& c) {
    for (unsigned n = 2; n <= 6; ++n)
        c.expect(verify_det_expansion(n, FieldSpec::f2()).ok,
                 "expansion failed at n=" + std::to_string(n));
}

void criterion_frobenius(Checker& c) {
    for (unsigned n = 1; n <= 6; ++n)
        c.expect(verify_frobenius_composition(n, FieldSpec::f2()).ok,
                 "composition failed at n=" + std::to_string(n));
}

void criterion_hyperdet(Checker& c) {
    Poly h = hyperdeterminant();
    c.expect(h.term_count() == 12, "12 terms");
    std::map<std::string, int> multiset;
    for (auto& [m, cf] : h.terms()) multiset[cf.str()] += 1;
    c.expect(multiset == std::map<std::string, int>{{"-2", 6}, {"1", 4}, {"4", 2}},
             "coefficient multiset {1x4, -2x6, 4x2}");
    Poly root = hyperdet_mod2_sqrt();
    VarTablePtr z = z_coordinate_vars(3);
    Poly expected = Poly::parse(FieldSpec::f2(), z,
                                "z000*z111 + z001*z110 + z010*z101 + z100*z011");
    c.expect(root == expected, "mod-2 root");
    c.expect(root * root == reduce_mod2(h), "root squares back");
    // a square polynomial cannot take a negative value at a real point
    std::vector<Scalar> witness;
    for (int v : {1, 0, 0, 1, 0, 1, -1, 0})
        witness.push_back(Scalar::from_int(FieldSpec::integer(), v));
    c.expect(h.eval(witness).as_mpz() < 0, "negative witness value over Z");
}

void criterion_quadric_counts(Checker& c, bool include_m6) {
    for (unsigned m : {4u, 5u}) {
        auto qs = quadrics_vanishing(subpfaffian_map_param(m, FieldSpec::f2()));
        c.expect(qs.size() == expected_quadric_count(m),
                 "count mismatch at m=" + std::to_string(m));
    }
    if (include_m6) {
        auto qs = quadrics_vanishing(subpfaffian_map_param(6, FieldSpec::f2()));
        c.expect(qs.size() == 66, "count mismatch at m=6");
        c.expect(expected_quadric_count(6) == 66, "formula at n=6");
    }
}

void criterion_point_sets(Checker& c) {
    for (unsigned n : {3u, 4u}) {
        auto pi = image_points_pi(n, 2);
        auto sigma = image_points_sigma(n + 1, 2);
        size_t expected = (n == 3) ? 135 : 2295;
        c.expect(pi.size() == expected, "pi count at n=" + std::to_string(n));
        c.expect(pi == sigma, "pi = sigma at n=" + std::to_string(n));
        auto quadrics = quadrics_vanishing(subpfaffian_map_param(n + 1, FieldSpec::f2()));
        std::vector<QuadricPairs> pairs;
        for (auto& q : quadrics) {
            QuadricPairs qp;
            for (auto& [ab, s] : q.coeffs) qp.push_back(ab);
            pairs.push_back(std::move(qp));
        }
        auto locus = quadric_zero_locus_parallel(pairs, 1u << n);
        c.expect(locus == points_as_masks(pi), "zero locus = pi image at n=" + std::to_string(n));
    }
}

void criterion_fibers(Checker& c) {
    FieldSpec f3 = FieldSpec::fp(3);
    for (unsigned n : {2u, 3u}) {
        SymMatrix<Scalar> x(n, Scalar::zero(f3));
        for (unsigned i = 1; i <= n; ++i)
            for (unsigned j = i; j <= n; ++j) x.set(i, j, Scalar::one(f3));
        long expected = long{1} << (n - 1);
        long got = fiber_size_check(n, 3, x);
        c.expect(got == expected, "fiber size " + std::to_string(got) + " at n=" +
                                      std::to_string(n));
    }
}

void criterion_exterior(Checker& c) {
    for (unsigned n = 1; n <= 3; ++n)
        c.expect(verify_sl2(n, FieldSpec::rational()), "sl2 at n=" + std::to_string(n));
    for (unsigned n = 2; n <= 4; ++n) {
        auto rep = gow_codim_check(n);
        c.expect(rep.codim == (size_t{1} << n), "codim at n=" + std::to_string(n));
    }
    // special projection of the Plucker image = principal minors, random F4
    FieldSpec f4 = FieldSpec::f2k(2);
    std::mt19937 rng(20260810);
    for (int trial = 0; trial < 100; ++trial) {
        unsigned n = 3;
        SymMatrix<Scalar> x(n, Scalar::zero(f4));
        for (unsigned i = 1; i <= n; ++i)
            for (unsigned j = i; j <= n; ++j)
                x.set(i, j, Scalar::from_bits(f4, rng() % 4));
        std::vector<std::vector<Scalar>> rows(n);
        for (unsigned j = 1; j <= n; ++j) {
            for (unsigned cidx = 1; cidx <= n; ++cidx)
                rows[j - 1].push_back(cidx == j ? Scalar::one(f4) : Scalar::zero(f4));
            for (unsigned i = 1; i <= n; ++i) rows[j - 1].push_back(x.entry(i, j));
        }
        auto proj = special_projection(plucker(rows));
        auto minors = all_principal_minors(x);
        bool match = true;
        for (IndexSet I = 0; I <= iset::full(n); ++I)
            match = match && (proj[I] == minors.at(I));
        c.expect(match, "projection != minors at trial " + std::to_string(trial));
        if (!match) break;
    }
}

void criterion_freudenthal(Checker& c) {
    auto d = make_fts_symbolic(JordanModel::Diagonal);
    Poly g0 = fts_quartic(d.u);
    c.expect(diagonal_quartic_as_hyperdet(g0) == to_ring(hyperdeterminant(), FieldSpec::rational()),
             "diagonal quartic = hyperdeterminant");
    auto s = make_fts_symbolic(JordanModel::Sym3);
    Poly g1 = fts_quartic(s.u);
    c.expect(g1.term_count() == 44, "44 terms at q=1");
    auto m2 = fts_quartic_mod2(s.u);
    Poly expected_root =
        Poly::parse(FieldSpec::f2(), s.vars, "a11*b11 + a22*b22 + a33*b33 + a*b");
    c.expect(m2.root == expected_root, "q=1 root");
    Poly j = e7_quartic();
    c.expect(j.term_count() == 1036, "1036 terms");
    std::set<std::string> allowed{"1", "-1", "1/2", "-1/2", "-1/4"};
    bool coeffs_ok = true;
    for (auto& [m, cf] : j.terms()) coeffs_ok = coeffs_ok && allowed.count(cf.str());
    c.expect(coeffs_ok, "coefficients in {1, -1, 1/2, -1/2, -1/4}");
    auto jm2 = e7_quartic_mod2();
    c.expect(jm2.reduced.term_count() == 28, "28 terms mod 2");
    Poly sum = Poly::zero(FieldSpec::f2(), jm2.root.vars());
    for (uint32_t i = 0; i < 28; ++i)
        sum = sum + Poly::variable(FieldSpec::f2(), jm2.root.vars(), i) *
                        Poly::variable(FieldSpec::f2(), jm2.root.vars(), 28 + i);
    c.expect(jm2.root == sum, "root = sum x_ij y_ij");
}

void criterion_tangential(Checker& c, bool include_q4) {
    FieldSpec f2 = FieldSpec::f2();
    {
        auto qs = quadrics_vanishing(tangential_param(segre_chart_p1p1p1(f2)));
        c.expect(qs.size() == 1, "one quadric at q=0");
        c.expect(!qs.empty() && qs[0].to_poly() == hyperdet_mod2_sqrt(), "q=0 quadric");
    }
    {
        auto p = tangential_param(plucker_chart_lg36(f2));
        auto span = linear_span(p);
        auto qs = quadrics_vanishing(restrict_to_span(p, span));
        c.expect(span.span_dim == 14, "span dim 14 at q=1");
        c.expect(qs.size() == 1, "one quadric at q=1");
        if (qs.size() == 1) {
            c.expect(bilinear_rank(qs[0]) == 8, "rank 8 at q=1");
            c.expect(singular_locus_char2(qs[0]).proj_dim == 5, "singular locus P5 at q=1");
        }
    }
    {
        auto p = tangential_param(plucker_chart_gr36(f2));
        auto span = linear_span(p);
        auto qs = quadrics_vanishing(restrict_to_span(p, span));
        c.expect(span.span_dim == 20, "span dim 20 at q=2");
        c.expect(qs.size() == 1, "one quadric at q=2");
        if (qs.size() == 1)
            c.expect(singular_locus_char2(qs[0]).proj_dim == -1, "empty singular locus at q=2");
    }
    if (include_q4) {
        auto p = tangential_param(subpfaffian_map_param(6, f2));
        auto span = linear_span(p);
        auto qs = quadrics_vanishing(restrict_to_span(p, span));
        c.expect(span.span_dim == 32, "span dim 32 at q=4");
        c.expect(qs.size() == 1, "one quadric at q=4");
        if (qs.size() == 1)
            c.expect(singular_locus_char2(qs[0]).proj_dim == -1, "empty singular locus at q=4");
    }
}

void criterion_properties(Checker& c) {
    // Pf^2 = det over F2, F4 and Q on random alternating matrices
    std::mt19937 rng(987654321);
    for (const char* ring_name : {"f2", "f4", "q"}) {
        FieldSpec ring = FieldSpec::parse(ring_name);
        for (unsigned n = 2; n <= 8; ++n) {
            for (int trial = 0; trial < 3; ++trial) {
                AltMatrix<Scalar> a(n, Scalar::zero(ring));
                for (unsigned i = 1; i <= n; ++i)
                    for (unsigned j = i + 1; j <= n; ++j) {
                        Scalar v = ring.is_finite()
                                       ? Scalar::from_bits(ring, rng() % ring.order())
                                       : Scalar::from_mpq(mpq_class(
                                             static_cast<long>(rng() % 19) - 9,
                                             static_cast<long>(rng() % 3) + 1));
                        a.set(i, j, v);
                    }
                Scalar pf = pfaffian(a);
                c.expect(pf * pf == det_division_free(a),
                         std::string("Pf^2 != det over ") + ring_name + " at N=" +
                             std::to_string(n));
            }
        }
    }
    // fixed-monomial shape of det(S_n) over F2 for n <= 7
    for (unsigned n = 2; n <= 7; ++n) {
        auto [s, vars] = symbolic_sym_matrix(n, FieldSpec::f2());
        Poly det = det_division_free(s);
        // variable v <-> the pair (i,j) in row-major upper-triangle order
        std::vector<std::pair<unsigned, unsigned>> where;
        for (unsigned i = 1; i <= n; ++i)
            for (unsigned j = i; j <= n; ++j) where.emplace_back(i, j);
        bool shape_ok = true;
        for (auto& [mono, coeff] : det.terms()) {
            std::vector<int> hits(n + 1, 0);
            for (auto& [v, e] : mono.factors()) {
                auto [i, j] = where[v];
                if (i == j) {
                    shape_ok = shape_ok && e == 1;
                    hits[i] += 1;
                } else {
                    shape_ok = shape_ok && e == 2;
                    hits[i] += 1;
                    hits[j] += 1;
                }
            }
            for (unsigned i = 1; i <= n; ++i) shape_ok = shape_ok && hits[i] == 1;
            if (!shape_ok) break;
        }
        c.expect(shape_ok, "monomial shape at n=" + std::to_string(n));
    }
    // every returned quadric pulls back to zero
    for (unsigned m : {4u, 5u}) {
        auto p = subpfaffian_map_param(m, FieldSpec::f2());
        c.expect(verify_quadric_pullbacks(p, quadrics_vanishing(p)),
                 "pullback check at m=" + std::to_string(m));
    }
    {
        auto p = minor_map_param(3, FieldSpec::f2());
        c.expect(verify_quadric_pullbacks(p, quadrics_vanishing(p)), "pullback check for Z3");
    }
    // byte-identical reports across runs and thread counts
    std::vector<RunConfig> configs;
    {
        RunConfig a;
        a.command = "verify-theorem";
        a.n = 4;
        configs.push_back(a);
        RunConfig b;
        b.command = "quadrics";
        b.variety = "spinor";
        b.m = 5;
        configs.push_back(b);
        RunConfig d;
        d.command = "images";
        d.n = 3;
        d.compare = true;
        configs.push_back(d);
    }
    for (auto& cfg : configs) {
        par::set_threads(1);
        std::string serial_once = run(cfg).dump(2);
        std::string serial_twice = run(cfg).dump(2);
        par::set_threads(0);
        std::string threaded = run(cfg).dump(2);
        c.expect(serial_once == serial_twice, "repeat determinism for " + cfg.command);
        c.expect(serial_once == threaded, "thread determinism for " + cfg.command);
    }
}

} // namespace

std::vector<CriterionResult> run_acceptance(const std::string& profile) {
    require(profile == "fast" || profile == "full" || profile == "slow", Errc::InvalidConfig,
            "profile must be fast, full or slow");
    bool include_m6 = profile != "fast";
    bool include_q4 = profile == "slow";

    struct Item {
        int id;
        std::string label;
        long limit_ms;
        std::function<void(Checker&)> body;
    };
    std::vector<Item> items = {
        {1, "theorem identity, n=1..6 over F2 and F4", 30000, criterion_theorem},
        {2, "determinant expansion, n=2..6", 10000, criterion_prop31},
        {3, "Frobenius compositions, n=1..6", 10000, criterion_frobenius},
        {4, "hyperdeterminant structure and mod-2 square", 0, criterion_hyperdet},
        {5, include_m6 ? "quadric counts 1/10/66 (m=4,5,6)" : "quadric counts 1/10 (m=4,5)",
         include_m6 ? 300000 : 0,
         [include_m6](Checker& c) { criterion_quadric_counts(c, include_m6); }},
        {6, "image point sets = quadric locus, n=3,4 (135/2295)", 120000, criterion_point_sets},
        {7, "fiber sizes over F3: 2 at n=2, 4 at n=3", 60000, criterion_fibers},
        {8, "sl2 relations, codimension 2^n, projection = minors", 0, criterion_exterior},
        {9, "Freudenthal quartics: q=0,1 and the 56-variable case", 120000,
         criterion_freudenthal},
        {10, include_q4 ? "tangential quadrics, cases q=0,1,2,4" : "tangential quadrics, cases q=0,1,2",
         include_q4 ? 600000 : 60000,
         [include_q4](Checker& c) { criterion_tangential(c, include_q4); }},
        {11, "property suites: Pf^2=det, monomial shape, pullbacks, determinism", 0,
         criterion_properties},
    };

    std::vector<CriterionResult> results;
    for (auto& s : items) {
        CriterionResult r;
        r.id = s.id;
        r.label = s.label;
        r.limit_ms = s.limit_ms;
        Clock::time_point start = Clock::now();
        Checker checker;
        try {
            s.body(checker);
        } catch (const std::exception& e) {
            checker.ok = false;
            checker.detail = e.what();
        }
        r.elapsed_ms = elapsed_ms(start);
        r.ok = checker.ok;
        r.detail = checker.detail;
        if (r.limit_ms > 0 && r.elapsed_ms > r.limit_ms) {
            r.ok = false;
            r.detail += (r.detail.empty() ? "" : "; ");
            r.detail += "over time limit";
        }
        results.push_back(std::move(r));
    }
    return results;
}

Json acceptance_report(const std::string& profile) {
    auto results = run_acceptance(profile);
    Json out = Json::object();
    out["profile"] = profile;
    bool ok = true;
    Json list = Json::array();
    for (auto& r : results) {
        ok = ok && r.ok;
        Json item = Json::object();
        item["id"] = r.id;
        item["label"] = r.label;
        item["ok"] = r.ok;
        if (!r.detail.empty()) item["detail"] = r.detail;
        list.push_back(std::move(item));
    }
    out["ok"] = ok;
    out["criteria"] = std::move(list);
    return out;
}

} // namespace char2
