#include "char2/fingeo.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "char2/par.hpp"

namespace char2 {

Fq::Fq(unsigned q) : q_(q) {
    require(q == 2 || q == 3 || q == 4 || (q % 2 == 1 && q <= 64), Errc::InvalidConfig,
            "unsupported field size");
    spec_ = (q == 4) ? FieldSpec::f2k(2) : FieldSpec::fp(q);
    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    for (unsigned a = 0; a < q; ++a) {
        Scalar sa = Scalar::from_bits(spec_, a);
        neg_[a] = static_cast<uint8_t>((-sa).bits());
        for (unsigned b = 0; b < q; ++b) {
            Scalar sb = Scalar::from_bits(spec_, b);
            add_[a * q + b] = static_cast<uint8_t>((sa + sb).bits());
            mul_[a * q + b] = static_cast<uint8_t>((sa * sb).bits());
        }
    }
}

uint8_t Fq::inv(uint8_t a) const {
    require(a != 0, Errc::DivisionByZero, "inv(0)");
    for (unsigned b = 1; b < q_; ++b)
        if (mul(a, static_cast<uint8_t>(b)) == 1) return static_cast<uint8_t>(b);
    fail(Errc::DivisionByZero, "no inverse");
}

namespace {

// In-place reduced row echelon form; returns the rank.
size_t rref_rows(const Fq& f, std::vector<FqVec>& rows) {
    if (rows.empty()) return 0;
    size_t m = rows[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < m && rank < rows.size(); ++col) {
        size_t sel = rank;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        uint8_t pinv = f.inv(rows[rank][col]);
        for (size_t c = col; c < m; ++c) rows[rank][c] = f.mul(rows[rank][c], pinv);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            uint8_t factor = rows[r][col];
            for (size_t c = col; c < m; ++c)
                rows[r][c] = f.sub(rows[r][c], f.mul(factor, rows[rank][c]));
        }
        ++rank;
    }
    rows.resize(rank);
    return rank;
}

// Reduce v against RREF rows; the residue is zero iff v is in the span.
FqVec residue(const Fq& f, const std::vector<FqVec>& rows, FqVec v) {
    for (const FqVec& r : rows) {
        size_t pivot = 0;
        while (pivot < r.size() && r[pivot] == 0) ++pivot;
        if (pivot == r.size()) continue;
        if (v[pivot] == 0) continue;
        uint8_t factor = v[pivot];
        for (size_t c = pivot; c < v.size(); ++c)
            v[c] = f.sub(v[c], f.mul(factor, r[c]));
    }
    return v;
}

bool is_zero_vec(const FqVec& v) {
    return std::all_of(v.begin(), v.end(), [](uint8_t x) { return x == 0; });
}

// det of the square submatrix of `rows` on the given columns, Gaussian
// elimination over F_q.
uint8_t det_cols(const Fq& f, const std::vector<FqVec>& rows, const std::vector<unsigned>& cols) {
    size_t k = rows.size();
    require(cols.size() == k, Errc::OutOfRange, "non-square minor");
    std::vector<FqVec> a(k, FqVec(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) a[i][j] = rows[i][cols[j]];
    uint8_t det = 1;
    for (size_t col = 0; col < k; ++col) {
        size_t sel = col;
        while (sel < k && a[sel][col] == 0) ++sel;
        if (sel == k) return 0;
        if (sel != col) {
            std::swap(a[sel], a[col]);
            det = f.neg(det);
        }
        det = f.mul(det, a[col][col]);
        uint8_t pinv = f.inv(a[col][col]);
        for (size_t r = col + 1; r < k; ++r) {
            if (a[r][col] == 0) continue;
            uint8_t factor = f.mul(a[r][col], pinv);
            for (size_t c = col; c < k; ++c)
                a[r][c] = f.sub(a[r][c], f.mul(factor, a[col][c]));
        }
    }
    return det;
}

// symplectic e(u,v) = sum u_i v_{n+i} - u_{n+i} v_i on F_q^(2n)
uint8_t symplectic_pair(const Fq& f, const FqVec& u, const FqVec& v) {
    size_t n = u.size() / 2;
    uint8_t acc = 0;
    for (size_t i = 0; i < n; ++i) {
        acc = f.add(acc, f.mul(u[i], v[i + n]));
        acc = f.sub(acc, f.mul(u[i + n], v[i]));
    }
    return acc;
}

// quadratic q(x) = sum x_i x_{m+i} on F_q^(2m)
uint8_t quad_value(const Fq& f, const FqVec& x) {
    size_t m = x.size() / 2;
    uint8_t acc = 0;
    for (size_t i = 0; i < m; ++i) acc = f.add(acc, f.mul(x[i], x[i + m]));
    return acc;
}

uint8_t quad_pair(const Fq& f, const FqVec& u, const FqVec& v) {
    // polarization q(u+v) - q(u) - q(v)
    size_t m = u.size() / 2;
    uint8_t acc = 0;
    for (size_t i = 0; i < m; ++i) {
        acc = f.add(acc, f.mul(u[i], v[i + m]));
        acc = f.add(acc, f.mul(u[i + m], v[i]));
    }
    return acc;
}

// Basis of { v : pair(b, v) = 0 for all rows b }.
std::vector<FqVec> perp_basis(const Fq& f, const std::vector<FqVec>& rows, unsigned ambient,
                              uint8_t (*pair)(const Fq&, const FqVec&, const FqVec&)) {
    // constraint matrix c[i][j] = pair(rows[i], e_j)
    std::vector<FqVec> c(rows.size(), FqVec(ambient, 0));
    FqVec unit(ambient, 0);
    for (unsigned j = 0; j < ambient; ++j) {
        unit[j] = 1;
        for (size_t i = 0; i < rows.size(); ++i) c[i][j] = pair(f, rows[i], unit);
        unit[j] = 0;
    }
    rref_rows(f, c);
    // free columns give the kernel basis
    std::vector<int> pivot_row(ambient, -1);
    for (size_t r = 0; r < c.size(); ++r) {
        size_t p = 0;
        while (p < ambient && c[r][p] == 0) ++p;
        if (p < ambient) pivot_row[p] = static_cast<int>(r);
    }
    std::vector<FqVec> basis;
    for (unsigned free = 0; free < ambient; ++free) {
        if (pivot_row[free] >= 0) continue;
        FqVec v(ambient, 0);
        v[free] = 1;
        for (unsigned col = 0; col < ambient; ++col)
            if (pivot_row[col] >= 0) v[col] = f.neg(c[pivot_row[col]][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Walk all nonzero combinations of the given basis vectors.
template <class Fn>
void for_each_combination(const Fq& f, const std::vector<FqVec>& basis, Fn&& fn) {
    size_t k = basis.size();
    if (k == 0) return;
    size_t ambient = basis[0].size();
    std::vector<uint8_t> coef(k, 0);
    while (true) {
        size_t pos = 0;
        while (pos < k && coef[pos] == f.q() - 1) coef[pos++] = 0;
        if (pos == k) break;
        ++coef[pos];
        FqVec v(ambient, 0);
        for (size_t i = 0; i < k; ++i) {
            if (coef[i] == 0) continue;
            for (size_t c = 0; c < ambient; ++c)
                v[c] = f.add(v[c], f.mul(coef[i], basis[i][c]));
        }
        fn(v);
    }
}

using PairFn = uint8_t (*)(const Fq&, const FqVec&, const FqVec&);

// Canonical RREF basis packed into one machine word (1 bit per coordinate
// for q = 2, two bits otherwise); used to dedupe subspaces cheaply.
uint64_t pack_rows_fixed(const Fq& f, const std::vector<FqVec>& rows, unsigned nrows,
                         unsigned ambient) {
    unsigned bits = (f.q() == 2) ? 1 : 2;
    require(static_cast<size_t>(nrows) * ambient * bits <= 64, Errc::BudgetExceeded,
            "subspace key overflow");
    uint64_t key = 0;
    for (unsigned r = 0; r < nrows; ++r)
        for (unsigned c = 0; c < ambient; ++c) key = (key << bits) | rows[r][c];
    return key;
}

std::vector<FqVec> unpack_rows(const Fq& f, uint64_t key, unsigned dim, unsigned ambient) {
    unsigned bits = (f.q() == 2) ? 1 : 2;
    uint64_t mask = (1u << bits) - 1;
    std::vector<FqVec> rows(dim, FqVec(ambient));
    for (unsigned r = dim; r-- > 0;)
        for (unsigned c = ambient; c-- > 0;) {
            rows[r][c] = static_cast<uint8_t>(key & mask);
            key >>= bits;
        }
    return rows;
}

// RREF for a scratch buffer of known full rank; no reallocation.
void rref_full_rank(const Fq& f, std::vector<FqVec>& rows, unsigned nrows, unsigned ambient) {
    unsigned rank = 0;
    for (unsigned col = 0; col < ambient && rank < nrows; ++col) {
        unsigned sel = rank;
        while (sel < nrows && rows[sel][col] == 0) ++sel;
        if (sel == nrows) continue;
        std::swap(rows[rank], rows[sel]);
        uint8_t pinv = f.inv(rows[rank][col]);
        for (unsigned c = col; c < ambient; ++c) rows[rank][c] = f.mul(rows[rank][c], pinv);
        for (unsigned r = 0; r < nrows; ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            uint8_t factor = rows[r][col];
            for (unsigned c = col; c < ambient; ++c)
                rows[r][c] = f.sub(rows[r][c], f.mul(factor, rows[rank][c]));
        }
        ++rank;
    }
}

// Walk the nonzero span of `basis` depth-first, keeping running partial sums.
template <class Fn>
void walk_span(const Fq& f, const std::vector<FqVec>& basis, Fn&& fn) {
    if (basis.empty()) return;
    size_t ambient = basis[0].size();
    FqVec sum(ambient, 0);
    auto rec = [&](auto&& self, size_t i, bool nonzero) -> void {
        if (i == basis.size()) {
            if (nonzero) fn(sum);
            return;
        }
        self(self, i + 1, nonzero);
        FqVec saved = sum;
        for (unsigned c = 1; c < f.q(); ++c) {
            for (size_t j = 0; j < ambient; ++j)
                sum[j] = f.add(saved[j], f.mul(static_cast<uint8_t>(c), basis[i][j]));
            self(self, i + 1, true);
        }
        sum = saved;
    };
    rec(rec, 0, false);
}

// Flag-extension enumeration shared by the symplectic and quadric cases:
// grow isotropic subspaces one vector at a time, canonicalize, dedupe.
// Levels extend in parallel chunks; the result is sorted, so the output does
// not depend on the thread count.
std::set<SubspaceRep> enumerate_isotropic(const Fq& f, unsigned target_dim, unsigned ambient,
                                          PairFn pair, bool with_quadric) {
    std::vector<std::vector<FqVec>> level = {{}};
    for (unsigned k = 0; k < target_dim; ++k) {
        const size_t chunk_size = 256;
        size_t chunks = (level.size() + chunk_size - 1) / chunk_size;
        std::vector<std::unordered_set<uint64_t>> found(chunks);
        par::parallel_for(chunks, [&](size_t ci) {
            auto& local = found[ci];
            std::vector<FqVec> scratch(k + 1, FqVec(ambient));
            size_t lo = ci * chunk_size, hi = std::min(level.size(), lo + chunk_size);
            for (size_t wi = lo; wi < hi; ++wi) {
                const std::vector<FqVec>& w = level[wi];
                std::vector<FqVec> perp = perp_basis(f, w, ambient, pair);
                walk_span(f, perp, [&](const FqVec& v) {
                    if (with_quadric && quad_value(f, v) != 0) return;
                    if (is_zero_vec(residue(f, w, v))) return;
                    for (unsigned r = 0; r < k; ++r) scratch[r] = w[r];
                    scratch[k] = v;
                    rref_full_rank(f, scratch, k + 1, ambient);
                    local.insert(pack_rows_fixed(f, scratch, k + 1, ambient));
                });
            }
        });
        std::unordered_set<uint64_t> merged;
        for (auto& local : found) merged.insert(local.begin(), local.end());
        level.clear();
        level.reserve(merged.size());
        for (uint64_t key : merged) level.push_back(unpack_rows(f, key, k + 1, ambient));
    }
    std::set<SubspaceRep> out;
    for (auto& rows : level) out.insert(SubspaceRep{f.q(), ambient, std::move(rows)});
    return out;
}

} // namespace

SubspaceRep make_subspace(const Fq& f, uint32_t m, std::vector<FqVec> rows) {
    for (auto& r : rows)
        require(r.size() == m, Errc::OutOfRange, "row length != ambient dimension");
    rref_rows(f, rows);
    return SubspaceRep{f.q(), m, std::move(rows)};
}

bool subspace_contains(const Fq& f, const SubspaceRep& w, const FqVec& v) {
    return is_zero_vec(residue(f, w.basis, v));
}

unsigned intersection_dim(const Fq& f, const SubspaceRep& a, const SubspaceRep& b) {
    std::vector<FqVec> stacked = a.basis;
    stacked.insert(stacked.end(), b.basis.begin(), b.basis.end());
    size_t joint = rref_rows(f, stacked);
    return static_cast<unsigned>(a.dim() + b.dim() - joint);
}

ProjPoint normalize_point(const Fq& f, FqVec coords) {
    size_t lead = 0;
    while (lead < coords.size() && coords[lead] == 0) ++lead;
    require(lead < coords.size(), Errc::OutOfRange, "zero vector is not a projective point");
    uint8_t s = f.inv(coords[lead]);
    for (auto& c : coords) c = f.mul(c, s);
    return ProjPoint{f.q(), std::move(coords)};
}

std::set<SubspaceRep> enumerate_all_subspaces(unsigned n, unsigned m, unsigned q) {
    require(n <= 3 && m <= 6, Errc::BudgetExceeded, "brute-force oracle capped at 3-subspaces of F_q^6");
    Fq f(q);
    std::set<SubspaceRep> level;
    level.insert(SubspaceRep{q, m, {}});
    for (unsigned k = 0; k < n; ++k) {
        std::set<SubspaceRep> next;
        // all vectors of F_q^m
        std::vector<FqVec> units(m, FqVec(m, 0));
        for (unsigned i = 0; i < m; ++i) units[i][i] = 1;
        for (const SubspaceRep& w : level) {
            for_each_combination(f, units, [&](const FqVec& v) {
                if (subspace_contains(f, w, v)) return;
                std::vector<FqVec> rows = w.basis;
                rows.push_back(v);
                next.insert(make_subspace(f, m, std::move(rows)));
            });
        }
        level = std::move(next);
    }
    return level;
}

std::set<SubspaceRep> enumerate_lagrangian(unsigned n, unsigned q) {
    require(q == 2 || q == 3 || q == 4, Errc::BudgetExceeded, "q restricted to {2,3,4}");
    require(n >= 1 && n <= 4, Errc::BudgetExceeded, "Lagrangian enumeration capped at n = 4");
    Fq f(q);
    return enumerate_isotropic(f, n, 2 * n, &symplectic_pair, false);
}

SubspaceRep spinor_anchor(unsigned m, unsigned q) {
    Fq f(q);
    std::vector<FqVec> rows(m, FqVec(2 * m, 0));
    for (unsigned i = 0; i < m; ++i) rows[i][i] = 1;
    return make_subspace(f, 2 * m, std::move(rows));
}

std::set<SubspaceRep> enumerate_spinor_even(unsigned m, unsigned q, const SubspaceRep& anchor) {
    require(q == 2 || q == 4, Errc::BudgetExceeded, "q restricted to {2,4}");
    require((q == 2 && m >= 1 && m <= 5) || (q == 4 && m >= 1 && m <= 3), Errc::BudgetExceeded,
            "spinor enumeration capped at m = 5 (q=2) / m = 3 (q=4)");
    require(anchor.m == 2 * m && anchor.dim() == m, Errc::InvalidConfig,
            "anchor must be a maximal isotropic subspace of F_q^(2m)");
    Fq f(q);
    auto all = enumerate_isotropic(f, m, 2 * m, &quad_pair, true);
    std::set<SubspaceRep> family;
    for (const SubspaceRep& w : all)
        if ((intersection_dim(f, w, anchor) + m) % 2 == 0) family.insert(w);
    return family;
}

std::set<SubspaceRep> enumerate_spinor_even(unsigned m, unsigned q) {
    return enumerate_spinor_even(m, q, spinor_anchor(m, q));
}

SubspaceRep lagrangian_chart_point(const Fq& f, const std::vector<FqVec>& x_sym) {
    unsigned n = static_cast<unsigned>(x_sym.size());
    std::vector<FqVec> rows(n, FqVec(2 * n, 0));
    for (unsigned j = 0; j < n; ++j) {
        rows[j][j] = 1;
        for (unsigned i = 0; i < n; ++i) rows[j][n + i] = x_sym[i][j];
    }
    return make_subspace(f, 2 * n, std::move(rows));
}

SubspaceRep spinor_chart_point(const Fq& f, const std::vector<FqVec>& y_alt) {
    require(f.q() % 2 == 0, Errc::WrongCharacteristic, "alternating chart in characteristic two");
    return lagrangian_chart_point(f, y_alt); // same block shape (I ; Y)
}

SubspaceRep slice_to_odd(const SubspaceRep& w) {
    require(w.m % 2 == 0 && w.m >= 4, Errc::OutOfRange, "ambient dimension must be 2n+2");
    unsigned m = w.m / 2;     // = n+1
    unsigned n = m - 1;
    Fq f(w.q);
    require(f.q() % 2 == 0, Errc::WrongCharacteristic, "slicing needs characteristic two");
    require(w.dim() == m, Errc::NotIsotropic, "subspace is not maximal");
    for (size_t i = 0; i < w.basis.size(); ++i) {
        require(quad_value(f, w.basis[i]) == 0, Errc::NotIsotropic, "basis vector not on the quadric");
        for (size_t j = i + 1; j < w.basis.size(); ++j)
            require(quad_pair(f, w.basis[i], w.basis[j]) == 0, Errc::NotIsotropic,
                    "basis vectors not orthogonal");
    }
    // functional phi(v) = v[n] + v[2n+1]  (0-based coordinates n+1 and 2n+2)
    std::vector<uint8_t> phi(w.dim());
    for (size_t i = 0; i < w.basis.size(); ++i)
        phi[i] = f.add(w.basis[i][n], w.basis[i][2 * n + 1]);
    // kernel of phi inside W
    std::vector<FqVec> kernel;
    int lead = -1;
    for (size_t i = 0; i < phi.size(); ++i)
        if (phi[i] != 0) { lead = static_cast<int>(i); break; }
    require(lead >= 0, Errc::NotIsotropic, "subspace lies inside the hyperplane");
    uint8_t lead_inv = f.inv(phi[lead]);
    for (size_t i = 0; i < w.basis.size(); ++i) {
        if (static_cast<int>(i) == lead) continue;
        FqVec v = w.basis[i];
        if (phi[i] != 0) {
            uint8_t factor = f.mul(phi[i], lead_inv);
            for (size_t c = 0; c < v.size(); ++c)
                v[c] = f.sub(v[c], f.mul(factor, w.basis[lead][c]));
        }
        v.pop_back(); // drop the last coordinate, equal to coordinate n+1 on H
        kernel.push_back(std::move(v));
    }
    SubspaceRep out = make_subspace(f, 2 * n + 1, std::move(kernel));
    require(out.dim() == n, Errc::NotIsotropic, "slice has unexpected dimension");
    return out;
}

SubspaceRep beta_subspace(const SubspaceRep& wp) {
    require(wp.m % 2 == 1 && wp.m >= 3, Errc::OutOfRange, "ambient dimension must be 2n+1");
    unsigned n = (wp.m - 1) / 2;
    Fq f(wp.q);
    require(f.q() % 2 == 0, Errc::WrongCharacteristic, "projection needs characteristic two");
    require(wp.dim() == n, Errc::NotIsotropic, "subspace is not maximal for q'");
    auto qprime = [&](const FqVec& z) {
        uint8_t acc = f.mul(z[n], z[n]);
        for (unsigned i = 0; i < n; ++i) acc = f.add(acc, f.mul(z[i], z[n + 1 + i]));
        return acc;
    };
    auto eprime = [&](const FqVec& z, const FqVec& u) {
        uint8_t acc = 0;
        for (unsigned i = 0; i < n; ++i) {
            acc = f.add(acc, f.mul(z[i], u[n + 1 + i]));
            acc = f.add(acc, f.mul(z[n + 1 + i], u[i]));
        }
        return acc;
    };
    for (size_t i = 0; i < wp.basis.size(); ++i) {
        require(qprime(wp.basis[i]) == 0, Errc::NotIsotropic, "basis vector not on the quadric");
        for (size_t j = i + 1; j < wp.basis.size(); ++j)
            require(eprime(wp.basis[i], wp.basis[j]) == 0, Errc::NotIsotropic,
                    "basis vectors not orthogonal");
    }
    std::vector<FqVec> rows;
    for (const FqVec& b : wp.basis) {
        FqVec v;
        v.reserve(2 * n);
        for (unsigned c = 0; c < wp.m; ++c)
            if (c != n) v.push_back(b[c]);
        rows.push_back(std::move(v));
    }
    SubspaceRep out = make_subspace(f, 2 * n, std::move(rows));
    require(out.dim() == n, Errc::NotIsotropic, "projection dropped dimension");
    return out;
}

FqVec pi_coordinates(const Fq& f, const SubspaceRep& w) {
    unsigned n = w.dim();
    require(w.m == 2 * n, Errc::OutOfRange, "expected a subspace of F_q^(2n)");
    FqVec out(size_t{1} << n);
    for (IndexSet I = 0; I <= iset::full(n); ++I) {
        std::vector<unsigned> cols;
        for (unsigned i = 1; i <= n; ++i)
            cols.push_back(iset::contains(I, i) ? (n + i - 1) : (i - 1));
        std::sort(cols.begin(), cols.end());
        out[I] = det_cols(f, w.basis, cols);
    }
    return out;
}

FqVec sigma_coordinates(const Fq& f, const SubspaceRep& w) {
    unsigned m = w.dim();
    require(w.m == 2 * m, Errc::OutOfRange, "expected a subspace of F_q^(2m)");
    require(f.q() == 2, Errc::BudgetExceeded,
            "sigma coordinates are computed on F2-points, where squaring is trivial");
    unsigned n = m - 1;
    FqVec out(size_t{1} << n);
    for (IndexSet I = 0; I <= iset::full(n); ++I) {
        IndexSet s = tilde_index(I, n);
        std::vector<unsigned> cols;
        for (unsigned i = 1; i <= m; ++i)
            cols.push_back(iset::contains(s, i) ? (m + i - 1) : (i - 1));
        std::sort(cols.begin(), cols.end());
        out[I] = det_cols(f, w.basis, cols);
    }
    return out;
}

std::set<ProjPoint> image_points_pi(unsigned n, unsigned q) {
    require(q == 2, Errc::BudgetExceeded, "image point sets are computed over F2");
    require(n >= 1 && n <= 4, Errc::BudgetExceeded, "image points capped at n = 4");
    Fq f(q);
    std::set<ProjPoint> out;
    for (const SubspaceRep& w : enumerate_lagrangian(n, q))
        out.insert(normalize_point(f, pi_coordinates(f, w)));
    return out;
}

std::set<ProjPoint> image_points_sigma(unsigned m, unsigned q) {
    require(q == 2, Errc::BudgetExceeded, "image point sets are computed over F2");
    require(m >= 2 && m <= 5, Errc::BudgetExceeded, "image points capped at m = 5");
    Fq f(q);
    std::set<ProjPoint> out;
    for (const SubspaceRep& w : enumerate_spinor_even(m, q))
        out.insert(normalize_point(f, sigma_coordinates(f, w)));
    return out;
}

long fiber_size_check(unsigned n, uint64_t p, const SymMatrix<Scalar>& x) {
    require(n >= 1 && n <= 3, Errc::BudgetExceeded, "fiber count capped at n = 3");
    require(x.size() == n, Errc::OutOfRange, "matrix size mismatch");
    Fq f(static_cast<unsigned>(p));
    require(x.entry(1, 1).ring() == f.spec(), Errc::MixedRings, "matrix not over F_p");
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = i + 1; j <= n; ++j)
            require(!x.entry(i, j).is_zero(), Errc::NotGeneral,
                    "off-diagonal entries must be nonzero");

    unsigned cells = n * (n + 1) / 2;
    double work = 1;
    for (unsigned i = 0; i < cells; ++i) work *= static_cast<double>(p);
    require(work <= 2e7, Errc::BudgetExceeded, "brute force too large");

    auto minor_vector = [&](const std::vector<FqVec>& mat) {
        FqVec out(size_t{1} << n);
        out[0] = 1;
        for (IndexSet s = 1; s <= iset::full(n); ++s) {
            std::vector<unsigned> idx;
            for (unsigned e : iset::elements(s)) idx.push_back(e - 1);
            std::vector<FqVec> rows;
            for (unsigned r : idx) rows.push_back(mat[r]);
            out[s] = det_cols(f, rows, idx);
        }
        return out;
    };

    std::vector<FqVec> target_mat(n, FqVec(n));
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j)
            target_mat[i - 1][j - 1] = static_cast<uint8_t>(x.entry(i, j).bits());
    FqVec target = minor_vector(target_mat);

    long count = 0;
    std::vector<uint8_t> cell(cells, 0);
    while (true) {
        std::vector<FqVec> mat(n, FqVec(n));
        unsigned c = 0;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i; j < n; ++j) {
                mat[i][j] = cell[c];
                mat[j][i] = cell[c];
                ++c;
            }
        if (minor_vector(mat) == target) ++count;
        size_t pos = 0;
        while (pos < cells && cell[pos] == p - 1) cell[pos++] = 0;
        if (pos == cells) break;
        ++cell[pos];
    }
    return count;
}

} // namespace char2
