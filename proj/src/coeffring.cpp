#include "char2/coeffring.hpp"

#include <array>
#include <cctype>
#include <mutex>

namespace char2 {

namespace {

// Multiplication in F2[x] (carry-less), operands of degree < 32.
uint64_t clmul(uint64_t a, uint64_t b) {
    uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

// Reduce a polynomial mod an irreducible of degree k.
uint64_t reduce_f2(uint64_t v, uint32_t mod, unsigned k) {
    for (int d = 63; d >= static_cast<int>(k); --d) {
        if (v >> d & 1) v ^= static_cast<uint64_t>(mod) << (d - k);
    }
    return v;
}

uint64_t f2k_mul(uint64_t a, uint64_t b, uint32_t mod, unsigned k) {
    return reduce_f2(clmul(a, b), mod, k);
}

// x^(2^e) mod f, used by the irreducibility test.
uint64_t frob_pow_x(unsigned e, uint32_t mod, unsigned k) {
    uint64_t x = reduce_f2(2, mod, k); // the residue of x
    for (unsigned i = 0; i < e; ++i) x = f2k_mul(x, x, mod, k);
    return x;
}

bool is_irreducible_f2(uint32_t mask, unsigned k) {
    if ((mask >> k) != 1u) return false; // must be monic of degree exactly k
    if ((mask & 1u) == 0 && mask != 2u) return false; // divisible by x
    // f irreducible of degree k  <=>  x^(2^k) == x mod f and
    // x^(2^(k/p)) != x for every prime p | k.
    uint64_t x = reduce_f2(2, mask, k);
    if (frob_pow_x(k, mask, k) != x) return false;
    for (unsigned p = 2; p <= k; ++p) {
        if (k % p != 0) continue;
        bool prime = true;
        for (unsigned d = 2; d * d <= p; ++d)
            if (p % d == 0) prime = false;
        if (!prime) continue;
        if (frob_pow_x(k / p, mask, k) == x) return false;
    }
    return true;
}

bool is_prime_u64(uint64_t p) {
    if (p < 2) return false;
    for (uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

uint64_t fp_mul(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t fp_inv(uint64_t a, uint64_t p) {
    // extended Euclid on (a, p)
    int64_t t = 0, newt = 1;
    int64_t r = static_cast<int64_t>(p), newr = static_cast<int64_t>(a);
    while (newr != 0) {
        int64_t q = r / newr;
        int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += static_cast<int64_t>(p);
    return static_cast<uint64_t>(t);
}

} // namespace

uint32_t smallest_irreducible_f2(unsigned k) {
    static std::array<uint32_t, 17> cache{};
    static std::once_flag once;
    std::call_once(once, [] {
        for (unsigned deg = 1; deg <= 16; ++deg) {
            for (uint32_t m = (1u << deg) | 1u;; m += 2) {
                if (is_irreducible_f2(m, deg)) {
                    cache[deg] = m;
                    break;
                }
            }
        }
    });
    require(k >= 1 && k <= 16, Errc::OutOfRange, "extension degree must be in 1..16");
    return cache[k];
}

FieldSpec FieldSpec::f2k(unsigned k) {
    require(k >= 1 && k <= 16, Errc::OutOfRange, "extension degree must be in 1..16");
    if (k == 1) return f2();
    FieldSpec s(RingKind::F2k);
    s.k_ = k;
    s.p_ = 2;
    s.mod_ = smallest_irreducible_f2(k);
    return s;
}

FieldSpec FieldSpec::fp(uint64_t p) {
    require(is_prime_u64(p), Errc::InvalidConfig, "modulus is not prime");
    require(p < (uint64_t{1} << 31), Errc::OutOfRange, "prime too large");
    if (p == 2) return f2();
    FieldSpec s(RingKind::Fp);
    s.p_ = p;
    return s;
}

FieldSpec FieldSpec::parse(const std::string& name) {
    std::string s;
    for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (s == "q" || s == "rational") return rational();
    if (s == "z" || s == "int" || s == "integer") return integer();
    if (!s.empty() && s[0] == 'f') {
        uint64_t q = 0;
        for (size_t i = 1; i < s.size(); ++i) {
            require(std::isdigit(static_cast<unsigned char>(s[i])), Errc::InvalidConfig,
                    "bad ring name: " + name);
            q = q * 10 + static_cast<uint64_t>(s[i] - '0');
        }
        require(q >= 2, Errc::InvalidConfig, "bad ring name: " + name);
        if (q == 2) return f2();
        if ((q & (q - 1)) == 0) {
            unsigned k = 0;
            while ((uint64_t{1} << k) < q) ++k;
            return f2k(k);
        }
        return fp(q);
    }
    fail(Errc::InvalidConfig, "unknown ring: " + name);
}

uint64_t FieldSpec::order() const {
    switch (kind_) {
        case RingKind::F2: return 2;
        case RingKind::F2k: return uint64_t{1} << k_;
        case RingKind::Fp: return p_;
        default: fail(Errc::OutOfRange, "infinite ring has no order");
    }
}

std::string FieldSpec::name() const {
    switch (kind_) {
        case RingKind::F2: return "f2";
        case RingKind::F2k: return "f" + std::to_string(uint64_t{1} << k_);
        case RingKind::Fp: return "f" + std::to_string(p_);
        case RingKind::Rational: return "q";
        case RingKind::Integer: return "z";
    }
    return "?";
}

Scalar Scalar::zero(const FieldSpec& ring) {
    switch (ring.kind()) {
        case RingKind::Integer: return Scalar(ring, mpz_class(0));
        case RingKind::Rational: return Scalar(ring, mpq_class(0));
        default: return Scalar(ring, uint64_t{0});
    }
}

Scalar Scalar::one(const FieldSpec& ring) {
    switch (ring.kind()) {
        case RingKind::Integer: return Scalar(ring, mpz_class(1));
        case RingKind::Rational: return Scalar(ring, mpq_class(1));
        default: return Scalar(ring, uint64_t{1});
    }
}

Scalar Scalar::from_int(const FieldSpec& ring, long value) {
    switch (ring.kind()) {
        case RingKind::F2:
        case RingKind::F2k:
            return Scalar(ring, static_cast<uint64_t>(((value % 2) + 2) % 2));
        case RingKind::Fp: {
            long p = static_cast<long>(ring.prime());
            return Scalar(ring, static_cast<uint64_t>(((value % p) + p) % p));
        }
        case RingKind::Integer: return Scalar(ring, mpz_class(value));
        case RingKind::Rational: return Scalar(ring, mpq_class(value));
    }
    fail(Errc::InvalidConfig, "bad ring");
}

Scalar Scalar::from_mpz(const FieldSpec& ring, const mpz_class& value) {
    switch (ring.kind()) {
        case RingKind::F2:
        case RingKind::F2k:
            return Scalar(ring, static_cast<uint64_t>(mpz_class(value % 2 + 2).get_ui() % 2));
        case RingKind::Fp: {
            mpz_class p(static_cast<unsigned long>(ring.prime()));
            mpz_class r = ((value % p) + p) % p;
            return Scalar(ring, static_cast<uint64_t>(r.get_ui()));
        }
        case RingKind::Integer: return Scalar(ring, value);
        case RingKind::Rational: return Scalar(ring, mpq_class(value));
    }
    fail(Errc::InvalidConfig, "bad ring");
}

Scalar Scalar::from_mpq(const mpq_class& value) {
    mpq_class v = value;
    v.canonicalize();
    return Scalar(FieldSpec::rational(), v);
}

Scalar Scalar::from_bits(const FieldSpec& ring, uint64_t bits) {
    switch (ring.kind()) {
        case RingKind::F2:
            require(bits < 2, Errc::OutOfRange, "F2 residue");
            return Scalar(ring, bits);
        case RingKind::F2k:
            require(bits < ring.order(), Errc::OutOfRange, "F2k residue");
            return Scalar(ring, bits);
        case RingKind::Fp:
            require(bits < ring.prime(), Errc::OutOfRange, "Fp residue");
            return Scalar(ring, bits);
        default:
            fail(Errc::InvalidConfig, "from_bits needs a finite field");
    }
}

bool Scalar::is_zero() const {
    switch (ring_.kind()) {
        case RingKind::Integer: return std::get<mpz_class>(v_) == 0;
        case RingKind::Rational: return std::get<mpq_class>(v_) == 0;
        default: return std::get<uint64_t>(v_) == 0;
    }
}

bool Scalar::is_one() const {
    switch (ring_.kind()) {
        case RingKind::Integer: return std::get<mpz_class>(v_) == 1;
        case RingKind::Rational: return std::get<mpq_class>(v_) == 1;
        default: return std::get<uint64_t>(v_) == 1;
    }
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_ring(o);
    switch (ring_.kind()) {
        case RingKind::F2:
        case RingKind::F2k:
            return Scalar(ring_, std::get<uint64_t>(v_) ^ std::get<uint64_t>(o.v_));
        case RingKind::Fp: {
            uint64_t s = std::get<uint64_t>(v_) + std::get<uint64_t>(o.v_);
            if (s >= ring_.prime()) s -= ring_.prime();
            return Scalar(ring_, s);
        }
        case RingKind::Integer:
            return Scalar(ring_, mpz_class(std::get<mpz_class>(v_) + std::get<mpz_class>(o.v_)));
        case RingKind::Rational:
            return Scalar(ring_, mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_)));
    }
    fail(Errc::InvalidConfig, "bad ring");
}

Scalar Scalar::operator-() const {
    switch (ring_.kind()) {
        case RingKind::F2:
        case RingKind::F2k:
            return *this;
        case RingKind::Fp: {
            uint64_t a = std::get<uint64_t>(v_);
            return Scalar(ring_, a == 0 ? 0 : ring_.prime() - a);
        }
        case RingKind::Integer: return Scalar(ring_, mpz_class(-std::get<mpz_class>(v_)));
        case RingKind::Rational: return Scalar(ring_, mpq_class(-std::get<mpq_class>(v_)));
    }
    fail(Errc::InvalidConfig, "bad ring");
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_ring(o);
    switch (ring_.kind()) {
        case RingKind::F2:
            return Scalar(ring_, std::get<uint64_t>(v_) & std::get<uint64_t>(o.v_));
        case RingKind::F2k:
            return Scalar(ring_, f2k_mul(std::get<uint64_t>(v_), std::get<uint64_t>(o.v_),
                                         ring_.modulus_mask(), ring_.ext_degree()));
        case RingKind::Fp:
            return Scalar(ring_, fp_mul(std::get<uint64_t>(v_), std::get<uint64_t>(o.v_),
                                        ring_.prime()));
        case RingKind::Integer:
            return Scalar(ring_, mpz_class(std::get<mpz_class>(v_) * std::get<mpz_class>(o.v_)));
        case RingKind::Rational:
            return Scalar(ring_, mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_)));
    }
    fail(Errc::InvalidConfig, "bad ring");
}

Scalar Scalar::inv() const {
    require(!is_zero(), Errc::DivisionByZero, "inv(0)");
    switch (ring_.kind()) {
        case RingKind::F2: return *this;
        case RingKind::F2k: return pow(ring_.order() - 2);
        case RingKind::Fp: return Scalar(ring_, fp_inv(std::get<uint64_t>(v_), ring_.prime()));
        case RingKind::Integer: {
            const mpz_class& z = std::get<mpz_class>(v_);
            require(z == 1 || z == -1, Errc::NoInverse, "non-unit integer");
            return *this;
        }
        case RingKind::Rational:
            return Scalar(ring_, mpq_class(1 / std::get<mpq_class>(v_)));
    }
    fail(Errc::InvalidConfig, "bad ring");
}

Scalar Scalar::pow(uint64_t e) const {
    Scalar acc = one(ring_);
    Scalar base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Scalar Scalar::frobenius() const {
    require(ring_.is_char2(), Errc::WrongCharacteristic, "frobenius needs characteristic two");
    return *this * *this;
}

Scalar Scalar::sqrt_char2() const {
    require(ring_.is_char2(), Errc::WrongCharacteristic, "sqrt_char2 needs characteristic two");
    if (ring_.kind() == RingKind::F2) return *this;
    unsigned k = ring_.ext_degree();
    Scalar r = *this;
    for (unsigned i = 0; i + 1 < k; ++i) r = r * r; // a^(2^(k-1))
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (ring_ != o.ring_) return false;
    return v_ == o.v_;
}

bool Scalar::operator<(const Scalar& o) const {
    check_same_ring(o);
    switch (ring_.kind()) {
        case RingKind::Integer:
            return std::get<mpz_class>(v_) < std::get<mpz_class>(o.v_);
        case RingKind::Rational:
            return std::get<mpq_class>(v_) < std::get<mpq_class>(o.v_);
        default:
            return std::get<uint64_t>(v_) < std::get<uint64_t>(o.v_);
    }
}

uint64_t Scalar::bits() const {
    require(ring_.is_finite(), Errc::OutOfRange, "bits() needs a finite field");
    return std::get<uint64_t>(v_);
}

const mpz_class& Scalar::as_mpz() const { return std::get<mpz_class>(v_); }
const mpq_class& Scalar::as_mpq() const { return std::get<mpq_class>(v_); }

mpz_class Scalar::to_mpz() const {
    switch (ring_.kind()) {
        case RingKind::Integer: return std::get<mpz_class>(v_);
        case RingKind::Rational: {
            const mpq_class& q = std::get<mpq_class>(v_);
            require(q.get_den() == 1, Errc::NonIntegralAfterScaling, "coefficient " + q.get_str());
            return q.get_num();
        }
        default: return mpz_class(static_cast<unsigned long>(std::get<uint64_t>(v_)));
    }
}

std::string Scalar::str() const {
    switch (ring_.kind()) {
        case RingKind::F2:
            return std::get<uint64_t>(v_) ? "1" : "0";
        case RingKind::F2k: {
            char buf[32];
            std::snprintf(buf, sizeof buf, "0x%llx",
                          static_cast<unsigned long long>(std::get<uint64_t>(v_)));
            return buf;
        }
        case RingKind::Fp:
            return std::to_string(std::get<uint64_t>(v_));
        case RingKind::Integer:
            return std::get<mpz_class>(v_).get_str();
        case RingKind::Rational: {
            const mpq_class& q = std::get<mpq_class>(v_);
            if (q.get_den() == 1) return q.get_num().get_str();
            return q.get_str();
        }
    }
    return "?";
}

Scalar Scalar::parse(const FieldSpec& ring, const std::string& text) {
    require(!text.empty(), Errc::ParseError, "empty scalar");
    try {
        switch (ring.kind()) {
            case RingKind::F2:
            case RingKind::F2k: {
                uint64_t bits;
                if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X'))
                    bits = std::stoull(text.substr(2), nullptr, 16);
                else
                    bits = std::stoull(text, nullptr, 10);
                return from_bits(ring, bits);
            }
            case RingKind::Fp:
            case RingKind::Integer:
                return from_mpz(ring, mpz_class(text));
            case RingKind::Rational: {
                mpq_class q(text);
                q.canonicalize();
                return Scalar(ring, q);
            }
        }
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
    fail(Errc::ParseError, "bad scalar literal: " + text);
}

} // namespace char2
