#include "char2/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace char2 {

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
    for (uint32_t i = 0; i < names_.size(); ++i) {
        auto [it, fresh] = index_.emplace(names_[i], i);
        require(fresh, Errc::InvalidConfig, "duplicate variable name: " + names_[i]);
    }
}

std::optional<uint32_t> VarTable::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

VarTablePtr make_vars(std::vector<std::string> names) {
    return std::make_shared<const VarTable>(std::move(names));
}

Monomial Monomial::var(uint32_t v, uint32_t e) {
    Monomial m;
    if (e > 0) m.f_.emplace_back(v, e);
    return m;
}

uint32_t Monomial::degree() const {
    uint32_t d = 0;
    for (auto& [v, e] : f_) d += e;
    return d;
}

uint32_t Monomial::exp(uint32_t v) const {
    for (auto& [w, e] : f_)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.f_.reserve(f_.size() + o.f_.size());
    size_t i = 0, j = 0;
    while (i < f_.size() || j < o.f_.size()) {
        if (j == o.f_.size() || (i < f_.size() && f_[i].first < o.f_[j].first)) {
            r.f_.push_back(f_[i++]);
        } else if (i == f_.size() || o.f_[j].first < f_[i].first) {
            r.f_.push_back(o.f_[j++]);
        } else {
            r.f_.emplace_back(f_[i].first, f_[i].second + o.f_[j].second);
            ++i;
            ++j;
        }
    }
    return r;
}

bool Monomial::all_exponents_even() const {
    for (auto& [v, e] : f_)
        if (e & 1) return false;
    return true;
}

Monomial Monomial::halved() const {
    Monomial r;
    r.f_.reserve(f_.size());
    for (auto& [v, e] : f_) r.f_.emplace_back(v, e / 2);
    return r;
}

Monomial Monomial::lowered(uint32_t v) const {
    Monomial r;
    r.f_.reserve(f_.size());
    for (auto& [w, e] : f_) {
        if (w == v) {
            if (e > 1) r.f_.emplace_back(w, e - 1);
        } else {
            r.f_.emplace_back(w, e);
        }
    }
    return r;
}

std::strong_ordering Monomial::cmp(const Monomial& a, const Monomial& b) {
    uint32_t da = a.degree(), db = b.degree();
    if (da != db) return da > db ? std::strong_ordering::less : std::strong_ordering::greater;
    size_t i = 0, j = 0;
    while (i < a.f_.size() && j < b.f_.size()) {
        if (a.f_[i].first != b.f_[j].first) {
            // the earlier variable with positive exponent ranks first
            return a.f_[i].first < b.f_[j].first ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
        }
        if (a.f_[i].second != b.f_[j].second) {
            return a.f_[i].second > b.f_[j].second ? std::strong_ordering::less
                                                   : std::strong_ordering::greater;
        }
        ++i;
        ++j;
    }
    if (i < a.f_.size()) return std::strong_ordering::less;
    if (j < b.f_.size()) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Poly Poly::constant(const Scalar& c, const VarTablePtr& vars) {
    Poly p(c.ring(), vars);
    p.add_term(Monomial::one(), c);
    return p;
}

Poly Poly::variable(const FieldSpec& ring, const VarTablePtr& vars, uint32_t v, uint32_t e) {
    require(v < vars->size(), Errc::OutOfRange, "variable index");
    Poly p(ring, vars);
    p.add_term(Monomial::var(v, e), Scalar::one(ring));
    return p;
}

Poly Poly::term(const Scalar& c, const Monomial& m, const VarTablePtr& vars) {
    Poly p(c.ring(), vars);
    p.add_term(m, c);
    return p;
}

uint32_t Poly::degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

Scalar Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(ring_) : it->second;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Poly::check_compatible(const Poly& o) const {
    require(ring_ == o.ring_, Errc::MixedRings, ring_.name() + " vs " + o.ring_.name());
    require(same_vars(vars_, o.vars_), Errc::MixedRings, "different variable tables");
}

Poly Poly::operator+(const Poly& o) const {
    check_compatible(o);
    Poly r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-() const {
    Poly r(ring_, vars_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    check_compatible(o);
    Poly r(ring_, vars_);
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Poly Poly::operator*(const Scalar& c) const {
    Poly r(ring_, vars_);
    for (auto& [m, a] : terms_) {
        Scalar p = a * c;
        if (!p.is_zero()) r.terms_.emplace(m, p);
    }
    return r;
}

Poly Poly::pow(uint32_t e) const {
    Poly acc = one(ring_, vars_);
    Poly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Poly::operator==(const Poly& o) const {
    if (ring_ != o.ring_ || !same_vars(vars_, o.vars_)) return false;
    return terms_ == o.terms_;
}

Scalar Poly::eval(std::span<const Scalar> point) const {
    require(point.size() == vars_->size(), Errc::ArityMismatch,
            "need one value per variable");
    Scalar acc = Scalar::zero(ring_);
    for (auto& [m, c] : terms_) {
        Scalar t = c;
        for (auto& [v, e] : m.factors()) t = t * point[v].pow(e);
        acc = acc + t;
    }
    return acc;
}

Poly Poly::substitute(std::span<const Poly> images) const {
    require(images.size() == vars_->size(), Errc::ArityMismatch,
            "need one image per variable");
    for (size_t i = 1; i < images.size(); ++i)
        images[0].ring() == images[i].ring()
            ? void(require(same_vars(images[0].vars(), images[i].vars()), Errc::MixedRings,
                           "images use different variable tables"))
            : fail(Errc::MixedRings, "images use different rings");
    FieldSpec oring = images.empty() ? ring_ : images[0].ring();
    VarTablePtr ovars = images.empty() ? vars_ : images[0].vars();
    require(oring == ring_, Errc::MixedRings, "substitution must preserve the ring");

    // memoize powers of images per variable
    std::map<std::pair<uint32_t, uint32_t>, Poly> powers;
    auto image_pow = [&](uint32_t v, uint32_t e) -> const Poly& {
        auto key = std::make_pair(v, e);
        auto it = powers.find(key);
        if (it == powers.end()) it = powers.emplace(key, images[v].pow(e)).first;
        return it->second;
    };

    Poly acc(oring, ovars);
    for (auto& [m, c] : terms_) {
        Poly t = Poly::constant(c, ovars);
        for (auto& [v, e] : m.factors()) t = t * image_pow(v, e);
        acc = acc + t;
    }
    return acc;
}

Poly Poly::partial(uint32_t v) const {
    Poly r(ring_, vars_);
    for (auto& [m, c] : terms_) {
        uint32_t e = m.exp(v);
        if (e == 0) continue;
        Scalar factor = Scalar::from_int(ring_, static_cast<long>(e));
        r.add_term(m.lowered(v), c * factor);
    }
    return r;
}

bool Poly::is_square_char2() const {
    require(ring_.is_char2(), Errc::WrongCharacteristic, "characteristic-two test");
    for (auto& [m, c] : terms_)
        if (!m.all_exponents_even()) return false;
    return true;
}

Poly Poly::sqrt_char2() const {
    require(is_square_char2(), Errc::NotASquare, "polynomial is not a square");
    Poly r(ring_, vars_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m.halved(), c.sqrt_char2());
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        std::string cs = c.str();
        bool negative = !cs.empty() && cs[0] == '-';
        if (first) {
            if (negative) {
                os << "-";
                cs = cs.substr(1);
            }
        } else {
            os << (negative ? " - " : " + ");
            if (negative) cs = cs.substr(1);
        }
        first = false;
        bool coeff_is_one = (cs == "1");
        if (m.is_one()) {
            os << cs;
            continue;
        }
        if (!coeff_is_one) os << cs << "*";
        bool fv = true;
        for (auto& [v, e] : m.factors()) {
            if (!fv) os << "*";
            fv = false;
            os << vars_->name(v);
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

Poly reduce_mod2(const Poly& p, const mpz_class& scale) {
    require(p.ring().kind() == RingKind::Integer || p.ring().kind() == RingKind::Rational,
            Errc::WrongCharacteristic, "reduction needs integer or rational coefficients");
    require(scale >= 1, Errc::InvalidConfig, "scale must be positive");
    FieldSpec f2 = FieldSpec::f2();
    Poly r(f2, p.vars());
    for (auto& [m, c] : p.terms()) {
        mpz_class z;
        if (p.ring().kind() == RingKind::Integer) {
            z = c.as_mpz() * scale;
        } else {
            mpq_class q = c.as_mpq() * mpq_class(scale);
            q.canonicalize();
            require(q.get_den() == 1, Errc::NonIntegralAfterScaling,
                    "coefficient " + q.get_str());
            z = q.get_num();
        }
        if (mpz_odd_p(z.get_mpz_t())) r.add_term(m, Scalar::one(f2));
    }
    return r;
}

Poly to_ring(const Poly& p, const FieldSpec& target) {
    if (p.ring() == target) return p;
    bool ok = (p.ring().kind() == RingKind::Integer && target.kind() == RingKind::Rational) ||
              (p.ring().kind() == RingKind::Rational && target.kind() == RingKind::Integer);
    require(ok, Errc::MixedRings, "unsupported coefficient transport");
    Poly r(target, p.vars());
    for (auto& [m, c] : p.terms()) {
        if (target.kind() == RingKind::Rational)
            r.add_term(m, Scalar::from_mpq(mpq_class(c.as_mpz())));
        else
            r.add_term(m, Scalar::from_mpz(target, c.to_mpz()));
    }
    return r;
}

namespace {

// coeff [*] var [^exp] [* var [^exp] ...], terms joined by + or -.
struct PolyParser {
    const std::string& s;
    size_t i = 0;
    const FieldSpec& ring;
    const VarTablePtr& vars;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    std::string read_number() {
        skip_ws();
        size_t start = i;
        while (i < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '/' ||
                (s[i] == 'x' && i == start + 1 && s[start] == '0')))
            ++i;
        // a bare number may not contain letters except a leading 0x
        return s.substr(start, i - start);
    }

    std::string read_word() {
        skip_ws();
        size_t start = i;
        while (i < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
            ++i;
        return s.substr(start, i - start);
    }

    uint32_t read_uint() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        require(i > start, Errc::ParseError, "expected exponent in: " + s);
        return static_cast<uint32_t>(std::stoul(s.substr(start, i - start)));
    }

    Poly parse_term(bool negate) {
        skip_ws();
        Scalar c = Scalar::one(ring);
        Monomial m;
        bool saw_factor = false;
        bool expect_factor = true;
        while (expect_factor) {
            skip_ws();
            require(i < s.size(), Errc::ParseError, "dangling term in: " + s);
            if (std::isdigit(static_cast<unsigned char>(s[i]))) {
                std::string num = read_number();
                c = c * Scalar::parse(ring, num);
            } else {
                size_t save = i;
                std::string w = read_word();
                auto v = vars->find(w);
                require(v.has_value(), Errc::ParseError,
                        "unknown variable '" + w + "' at " + std::to_string(save));
                uint32_t e = 1;
                if (eat('^')) e = read_uint();
                m = m * Monomial::var(*v, e);
            }
            saw_factor = true;
            expect_factor = eat('*');
        }
        require(saw_factor, Errc::ParseError, "empty term in: " + s);
        if (negate) c = -c;
        return Poly::term(c, m, vars);
    }

    Poly parse_sum() {
        Poly acc(ring, vars);
        skip_ws();
        if (i >= s.size()) fail(Errc::ParseError, "empty polynomial");
        if (s.compare(i, 1, "0") == 0 && i + 1 == s.size()) return acc;
        bool neg = eat('-');
        if (!neg) eat('+');
        acc = acc + parse_term(neg);
        while (true) {
            skip_ws();
            if (i >= s.size()) break;
            if (eat('+'))
                acc = acc + parse_term(false);
            else if (eat('-'))
                acc = acc + parse_term(true);
            else
                fail(Errc::ParseError, "unexpected character at " + std::to_string(i) +
                                           " in: " + s);
        }
        return acc;
    }
};

} // namespace

Poly Poly::parse(const FieldSpec& ring, const VarTablePtr& vars, const std::string& text) {
    PolyParser p{text, 0, ring, vars};
    return p.parse_sum();
}

} // namespace char2
