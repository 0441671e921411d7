#include "nlalg/field.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace nlalg {

namespace {

long checked_pow(long base, long exp, long cap) {
    long r = 1;
    for (long i = 0; i < exp; ++i) {
        if (r > cap / base) return cap + 1;
        r *= base;
    }
    return r;
}

bool is_prime_long(long p) {
    if (p < 2) return false;
    for (long i = 2; i * i <= p; ++i)
        if (p % i == 0) return false;
    return true;
}

bool is_squarefree(long d) {
    long a = d < 0 ? -d : d;
    for (long i = 2; i * i <= a; ++i)
        while (a % i == 0) {
            a /= i;
            if (a % i == 0) return false;
        }
    return true;
}

long mod_pos(long a, long p) {
    long r = a % p;
    return r < 0 ? r + p : r;
}

long mul_mod(long a, long b, long p) {
    return static_cast<long>((static_cast<__int128>(a) * b) % p);
}

long inv_mod(long a, long p) {
    long t = 0, nt = 1, r = p, nr = mod_pos(a, p);
    while (nr != 0) {
        long q = r / nr;
        std::swap(t, nt); nt -= q * t;
        std::swap(r, nr); nr -= q * r;
    }
    if (r != 1) fail(Errc::DivisionByZero, "no inverse mod " + std::to_string(p));
    return mod_pos(t, p);
}

// --- dense Z_p[t] helpers, coefficients low degree first -------------------

using ZpPoly = std::vector<long>;

void zp_trim(ZpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int zp_deg(const ZpPoly& f) { return static_cast<int>(f.size()) - 1; }

ZpPoly zp_mul(const ZpPoly& f, const ZpPoly& g, long p) {
    if (f.empty() || g.empty()) return {};
    ZpPoly r(f.size() + g.size() - 1, 0);
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j)
            r[i + j] = mod_pos(r[i + j] + mul_mod(f[i], g[j], p), p);
    zp_trim(r);
    return r;
}

// Remainder of f by monic-normalizable divisor d.
ZpPoly zp_rem(ZpPoly f, const ZpPoly& d, long p) {
    zp_trim(f);
    long lead_inv = inv_mod(d.back(), p);
    while (zp_deg(f) >= zp_deg(d)) {
        long c = mul_mod(f.back(), lead_inv, p);
        size_t shift = f.size() - d.size();
        for (size_t i = 0; i < d.size(); ++i)
            f[shift + i] = mod_pos(f[shift + i] - mul_mod(c, d[i], p), p);
        zp_trim(f);
    }
    return f;
}

// Exhaustive irreducibility: trial division by every monic polynomial of
// degree 1..deg/2. Certified for the capped field sizes.
bool zp_irreducible(const ZpPoly& f, long p) {
    int n = zp_deg(f);
    if (n <= 0) return false;
    if (n == 1) return true;
    for (int d = 1; d <= n / 2; ++d) {
        long count = checked_pow(p, d, std::numeric_limits<long>::max() / 2);
        for (long code = 0; code < count; ++code) {
            ZpPoly g(d + 1, 0);
            long m = code;
            for (int i = 0; i < d; ++i) { g[i] = m % p; m /= p; }
            g[d] = 1;
            if (zp_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

ZpPoly zp_canonical_irreducible(long p, int degree) {
    long count = checked_pow(p, degree, std::numeric_limits<long>::max() / 2);
    for (long code = 0; code < count; ++code) {
        ZpPoly g(degree + 1, 0);
        long m = code;
        for (int i = 0; i < degree; ++i) { g[i] = m % p; m /= p; }
        g[degree] = 1;
        if (zp_irreducible(g, p)) return g;
    }
    fail(Errc::Internal, "no irreducible polynomial found"); // unreachable
}

std::string zp_poly_str(const ZpPoly& f, const std::string& var) {
    if (f.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = zp_deg(f); k >= 0; --k) {
        long c = f[k];
        if (c == 0) continue;
        if (!first) os << "+";
        first = false;
        if (k == 0) { os << c; continue; }
        if (c != 1) os << c << "*";
        os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

} // namespace

long field_size_cap() {
    static long cap = [] {
        if (const char* s = std::getenv("NLALG_MAX_FIELD_SIZE")) {
            long v = std::atol(s);
            if (v >= 2) return v;
        }
        return 4096L;
    }();
    return cap;
}

// --- FieldDescriptor --------------------------------------------------------

Field FieldDescriptor::rational() {
    static Field q = [] {
        auto f = std::shared_ptr<FieldDescriptor>(new FieldDescriptor());
        f->kind_ = FieldKind::Rational;
        return Field(f);
    }();
    return q;
}

Field FieldDescriptor::quad_ext(long d) {
    if (d == 0 || d == 1)
        fail(Errc::UnknownField, "Q(sqrt " + std::to_string(d) + "): d must not be 0 or 1");
    if (!is_squarefree(d))
        fail(Errc::UnknownField, "Q(sqrt " + std::to_string(d) + "): d must be squarefree");
    auto f = std::shared_ptr<FieldDescriptor>(new FieldDescriptor());
    f->kind_ = FieldKind::QuadExt;
    f->d_ = d;
    return f;
}

Field FieldDescriptor::prime_field(long p) {
    if (!is_prime_long(p))
        fail(Errc::UnknownField, "GF(" + std::to_string(p) + "): p must be prime");
    if (p > field_size_cap())
        fail(Errc::UnknownField, "GF(" + std::to_string(p) + ") exceeds the field size cap");
    auto f = std::shared_ptr<FieldDescriptor>(new FieldDescriptor());
    f->kind_ = FieldKind::PrimeField;
    f->p_ = p;
    return f;
}

Field FieldDescriptor::ext_field(long p, std::vector<long> modulus) {
    if (!is_prime_long(p))
        fail(Errc::UnknownField, "GF(p^k): p must be prime");
    for (auto& c : modulus) c = mod_pos(c, p);
    zp_trim(modulus);
    long k = static_cast<long>(modulus.size()) - 1;
    if (k < 2) fail(Errc::UnknownField, "GF(p^k): modulus degree must be >= 2");
    if (modulus.back() != 1) { // normalize to monic
        long li = inv_mod(modulus.back(), p);
        for (auto& c : modulus) c = mul_mod(c, li, p);
    }
    if (checked_pow(p, k, field_size_cap()) > field_size_cap())
        fail(Errc::UnknownField, "GF(p^k) exceeds the field size cap");
    if (!zp_irreducible(modulus, p))
        fail(Errc::UnknownField, "GF(p^k): modulus " + zp_poly_str(modulus, "x") +
                                     " is reducible over GF(" + std::to_string(p) + ")");
    auto f = std::shared_ptr<FieldDescriptor>(new FieldDescriptor());
    f->kind_ = FieldKind::ExtField;
    f->p_ = p;
    f->modulus_ = std::move(modulus);
    return f;
}

long FieldDescriptor::characteristic() const {
    switch (kind_) {
        case FieldKind::Rational:
        case FieldKind::QuadExt: return 0;
        default: return p_;
    }
}

long FieldDescriptor::size() const {
    switch (kind_) {
        case FieldKind::PrimeField: return p_;
        case FieldKind::ExtField: {
            long s = 1;
            for (long i = 0; i < ext_degree(); ++i) s *= p_;
            return s;
        }
        default: return 0;
    }
}

bool FieldDescriptor::is_ordered() const {
    return kind_ == FieldKind::Rational || (kind_ == FieldKind::QuadExt && d_ > 0);
}

std::string FieldDescriptor::name() const {
    switch (kind_) {
        case FieldKind::Rational: return "Q";
        case FieldKind::QuadExt: return "Q(sqrt " + std::to_string(d_) + ")";
        case FieldKind::PrimeField: return "GF(" + std::to_string(p_) + ")";
        case FieldKind::ExtField:
            return "GF(" + std::to_string(p_) + "^" + std::to_string(ext_degree()) +
                   "; " + zp_poly_str(modulus_, "x") + ")";
    }
    return "?";
}

bool FieldDescriptor::equals(const FieldDescriptor& o) const {
    return kind_ == o.kind_ && d_ == o.d_ && p_ == o.p_ && modulus_ == o.modulus_;
}

std::vector<Field> FieldDescriptor::proper_subfields() const {
    std::vector<Field> out;
    switch (kind_) {
        case FieldKind::Rational:
        case FieldKind::PrimeField: break;
        case FieldKind::QuadExt: out.push_back(rational()); break;
        case FieldKind::ExtField: {
            out.push_back(prime_field(p_));
            long k = ext_degree();
            for (long e = 2; e < k; ++e)
                if (k % e == 0)
                    out.push_back(ext_field(p_, zp_canonical_irreducible(p_, static_cast<int>(e))));
            break;
        }
    }
    return out;
}

bool embeds(const Field& sub, const Field& sup) {
    if (same_field(sub, sup)) return true;
    if (sub->characteristic() != sup->characteristic()) return false;
    switch (sub->kind()) {
        case FieldKind::Rational:
            return sup->kind() == FieldKind::QuadExt;
        case FieldKind::QuadExt:
            return sup->kind() == FieldKind::QuadExt && sub->quad_d() == sup->quad_d();
        case FieldKind::PrimeField:
            return sup->kind() == FieldKind::ExtField && sup->prime() == sub->prime();
        case FieldKind::ExtField:
            return sup->kind() == FieldKind::ExtField && sup->prime() == sub->prime() &&
                   sup->ext_degree() % sub->ext_degree() == 0;
    }
    return false;
}

// --- FieldElement -----------------------------------------------------------

FieldElement FieldElement::zero(const Field& f) { return from_int(f, 0); }
FieldElement FieldElement::one(const Field& f) { return from_int(f, 1); }

FieldElement FieldElement::from_int(const Field& f, long n) {
    return from_mpz(f, mpz_class(n));
}

FieldElement FieldElement::from_mpz(const Field& f, const mpz_class& n) {
    FieldElement e;
    e.field_ = f;
    switch (f->kind()) {
        case FieldKind::Rational: e.v_ = mpq_class(n); break;
        case FieldKind::QuadExt: e.v_ = QuadPayload{mpq_class(n), mpq_class(0)}; break;
        case FieldKind::PrimeField: {
            mpz_class r = n % f->prime();
            e.v_ = mod_pos(r.get_si(), f->prime());
            break;
        }
        case FieldKind::ExtField: {
            mpz_class r = n % f->prime();
            std::vector<long> c(f->ext_degree(), 0);
            c[0] = mod_pos(r.get_si(), f->prime());
            e.v_ = std::move(c);
            break;
        }
    }
    return e;
}

FieldElement FieldElement::rational(const Field& f, mpq_class q) {
    if (f->kind() == FieldKind::QuadExt) return quad(f, std::move(q), mpq_class(0));
    if (f->kind() != FieldKind::Rational)
        fail(Errc::NotInField, "rational payload for " + f->name());
    q.canonicalize();
    FieldElement e;
    e.field_ = f;
    e.v_ = std::move(q);
    return e;
}

FieldElement FieldElement::quad(const Field& f, mpq_class a, mpq_class b) {
    if (f->kind() != FieldKind::QuadExt)
        fail(Errc::NotInField, "quadratic payload for " + f->name());
    a.canonicalize();
    b.canonicalize();
    FieldElement e;
    e.field_ = f;
    e.v_ = QuadPayload{std::move(a), std::move(b)};
    return e;
}

FieldElement FieldElement::residue(const Field& f, long r) {
    if (f->kind() != FieldKind::PrimeField)
        fail(Errc::NotInField, "residue payload for " + f->name());
    FieldElement e;
    e.field_ = f;
    e.v_ = mod_pos(r, f->prime());
    return e;
}

FieldElement FieldElement::ext(const Field& f, std::vector<long> coeffs) {
    if (f->kind() != FieldKind::ExtField)
        fail(Errc::NotInField, "extension payload for " + f->name());
    long p = f->prime();
    for (auto& c : coeffs) c = mod_pos(c, p);
    zp_trim(coeffs);
    if (zp_deg(coeffs) >= f->ext_degree()) coeffs = zp_rem(std::move(coeffs), f->modulus(), p);
    coeffs.resize(f->ext_degree(), 0);
    FieldElement e;
    e.field_ = f;
    e.v_ = std::move(coeffs);
    return e;
}

bool FieldElement::is_zero() const {
    switch (field_->kind()) {
        case FieldKind::Rational: return rat() == 0;
        case FieldKind::QuadExt: return quad().a == 0 && quad().b == 0;
        case FieldKind::PrimeField: return residue() == 0;
        case FieldKind::ExtField:
            return std::all_of(ext().begin(), ext().end(), [](long c) { return c == 0; });
    }
    return false;
}

bool FieldElement::is_one() const { return *this == one(field_); }

void FieldElement::check_same(const FieldElement& o) const {
    if (!field_ || !o.field_ || !same_field(field_, o.field_))
        fail(Errc::DescriptorMismatch, "operands live in different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    FieldElement r;
    r.field_ = field_;
    switch (field_->kind()) {
        case FieldKind::Rational: r.v_ = mpq_class(rat() + o.rat()); break;
        case FieldKind::QuadExt:
            r.v_ = QuadPayload{mpq_class(quad().a + o.quad().a), mpq_class(quad().b + o.quad().b)};
            break;
        case FieldKind::PrimeField:
            r.v_ = mod_pos(residue() + o.residue(), field_->prime());
            break;
        case FieldKind::ExtField: {
            long p = field_->prime();
            std::vector<long> c(ext());
            for (size_t i = 0; i < c.size(); ++i) c[i] = mod_pos(c[i] + o.ext()[i], p);
            r.v_ = std::move(c);
            break;
        }
    }
    return r;
}

FieldElement FieldElement::operator-() const {
    FieldElement r;
    r.field_ = field_;
    switch (field_->kind()) {
        case FieldKind::Rational: r.v_ = mpq_class(-rat()); break;
        case FieldKind::QuadExt: r.v_ = QuadPayload{mpq_class(-quad().a), mpq_class(-quad().b)}; break;
        case FieldKind::PrimeField: r.v_ = mod_pos(-residue(), field_->prime()); break;
        case FieldKind::ExtField: {
            long p = field_->prime();
            std::vector<long> c(ext());
            for (auto& x : c) x = mod_pos(-x, p);
            r.v_ = std::move(c);
            break;
        }
    }
    return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    FieldElement r;
    r.field_ = field_;
    switch (field_->kind()) {
        case FieldKind::Rational: r.v_ = mpq_class(rat() * o.rat()); break;
        case FieldKind::QuadExt: {
            const auto& x = quad();
            const auto& y = o.quad();
            mpq_class d(field_->quad_d());
            r.v_ = QuadPayload{mpq_class(x.a * y.a + x.b * y.b * d),
                               mpq_class(x.a * y.b + x.b * y.a)};
            break;
        }
        case FieldKind::PrimeField:
            r.v_ = mul_mod(residue(), o.residue(), field_->prime());
            break;
        case FieldKind::ExtField: {
            long p = field_->prime();
            ZpPoly prod = zp_mul(ext(), o.ext(), p);
            zp_trim(prod);
            if (!prod.empty() && zp_deg(prod) >= field_->ext_degree())
                prod = zp_rem(std::move(prod), field_->modulus(), p);
            prod.resize(field_->ext_degree(), 0);
            r.v_ = std::move(prod);
            break;
        }
    }
    return r;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero in " + field_->name());
    FieldElement r;
    r.field_ = field_;
    switch (field_->kind()) {
        case FieldKind::Rational: r.v_ = mpq_class(1 / rat()); break;
        case FieldKind::QuadExt: {
            const auto& x = quad();
            mpq_class d(field_->quad_d());
            mpq_class norm = x.a * x.a - x.b * x.b * d; // nonzero: d is not a square in Q
            r.v_ = QuadPayload{mpq_class(x.a / norm), mpq_class(-x.b / norm)};
            break;
        }
        case FieldKind::PrimeField:
            r.v_ = inv_mod(residue(), field_->prime());
            break;
        case FieldKind::ExtField: {
            // extended Euclid in Z_p[t] against the modulus
            long p = field_->prime();
            ZpPoly r0 = field_->modulus(), r1 = ext();
            zp_trim(r1);
            ZpPoly t0 = {}, t1 = {1};
            while (!r1.empty()) {
                // divide r0 by r1
                ZpPoly q;
                ZpPoly rem = r0;
                long li = inv_mod(r1.back(), p);
                q.assign(std::max<size_t>(r0.size(), 1), 0);
                while (zp_deg(rem) >= zp_deg(r1)) {
                    long c = mul_mod(rem.back(), li, p);
                    size_t shift = rem.size() - r1.size();
                    q[shift] = c;
                    for (size_t i = 0; i < r1.size(); ++i)
                        rem[shift + i] = mod_pos(rem[shift + i] - mul_mod(c, r1[i], p), p);
                    zp_trim(rem);
                }
                zp_trim(q);
                ZpPoly qt1 = zp_mul(q, t1, p);
                ZpPoly nt(std::max(t0.size(), qt1.size()), 0);
                for (size_t i = 0; i < nt.size(); ++i) {
                    long a = i < t0.size() ? t0[i] : 0;
                    long b = i < qt1.size() ? qt1[i] : 0;
                    nt[i] = mod_pos(a - b, p);
                }
                zp_trim(nt);
                t0 = t1; t1 = nt;
                r0 = r1; r1 = rem;
            }
            // r0 is now a unit scalar gcd
            long scale = inv_mod(r0.empty() ? 1 : r0[0], p);
            for (auto& c : t0) c = mul_mod(c, scale, p);
            t0.resize(field_->ext_degree(), 0);
            r.v_ = std::move(t0);
            break;
        }
    }
    return r;
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same(o);
    return *this * o.inverse();
}

FieldElement FieldElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement base = *this, acc = one(field_);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (!field_ || !o.field_) return !field_ && !o.field_;
    if (!same_field(field_, o.field_)) return false;
    return v_ == o.v_;
}

int FieldElement::sign() const {
    if (field_->kind() == FieldKind::Rational) return sgn(rat());
    if (field_->kind() == FieldKind::QuadExt && field_->quad_d() > 0) {
        const auto& x = quad();
        int sa = sgn(x.a), sb = sgn(x.b);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // opposite signs: compare a^2 against b^2 d; sign follows the winner
        mpq_class lhs = x.a * x.a, rhs = x.b * x.b * field_->quad_d();
        int c = cmp(lhs, rhs);
        if (c == 0) fail(Errc::Internal, "sqrt d rational"); // impossible for squarefree d
        return c > 0 ? sa : sb;
    }
    fail(Errc::UnorderedField, field_->name() + " is not an ordered field");
}

bool FieldElement::canonical_less(const FieldElement& x, const FieldElement& y) {
    auto qless = [](const mpq_class& a, const mpq_class& b) {
        int c = cmp(a.get_num(), b.get_num());
        if (c != 0) return c < 0;
        return cmp(a.get_den(), b.get_den()) < 0;
    };
    switch (x.field_->kind()) {
        case FieldKind::Rational: return qless(x.rat(), y.rat());
        case FieldKind::QuadExt:
            if (x.quad().a != y.quad().a) return qless(x.quad().a, y.quad().a);
            return qless(x.quad().b, y.quad().b);
        case FieldKind::PrimeField: return x.residue() < y.residue();
        case FieldKind::ExtField: {
            const auto& a = x.ext();
            const auto& b = y.ext();
            for (size_t i = a.size(); i-- > 0;)
                if (a[i] != b[i]) return a[i] < b[i];
            return false;
        }
    }
    return false;
}

// --- formatting -------------------------------------------------------------

std::string FieldElement::str() const {
    switch (field_->kind()) {
        case FieldKind::Rational: return rat().get_str();
        case FieldKind::QuadExt: {
            const auto& x = quad();
            if (x.b == 0) return x.a.get_str();
            mpq_class ab = abs(x.b);
            return x.a.get_str() + (x.b > 0 ? "+" : "-") + ab.get_str() +
                   "*sqrt(" + std::to_string(field_->quad_d()) + ")";
        }
        case FieldKind::PrimeField: return std::to_string(residue());
        case FieldKind::ExtField: {
            ZpPoly c = ext();
            zp_trim(c);
            return zp_poly_str(c, "t");
        }
    }
    return "?";
}

std::string format_element(const FieldElement& e) { return e.str(); }

// --- parsing ----------------------------------------------------------------

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    bool done() const { return i >= s.size(); }
    char peek() const { return done() ? '\0' : s[i]; }
    bool eat(char c) {
        if (peek() == c) { ++i; return true; }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            fail(Errc::SyntaxError, "expected '" + std::string(1, c) + "' at position " +
                                        std::to_string(i) + " in \"" + s + "\"");
    }
};

mpz_class parse_int(Cursor& c) {
    size_t start = c.i;
    if (c.peek() == '-' || c.peek() == '+') ++c.i;
    size_t digits = c.i;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.i;
    if (c.i == digits)
        fail(Errc::SyntaxError, "expected integer at position " + std::to_string(start) +
                                    " in \"" + c.s + "\"");
    return mpz_class(c.s.substr(start, c.i - start));
}

mpq_class parse_rational(Cursor& c) {
    mpz_class num = parse_int(c);
    if (c.peek() == '/') {
        ++c.i;
        mpz_class den = parse_int(c);
        if (den <= 0) fail(Errc::SyntaxError, "denominator must be a positive integer");
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }
    return mpq_class(num);
}

// polynomial in `var` with integer coefficients, e.g. "t^2+2*t+1"
ZpPoly parse_int_poly(Cursor& c, char var) {
    ZpPoly coeffs;
    auto add_term = [&](long exp, const mpz_class& v, long p_hint) {
        (void)p_hint;
        if (exp >= static_cast<long>(coeffs.size())) coeffs.resize(exp + 1, 0);
        // accumulate as long; reduction happens at element construction
        coeffs[exp] += v.get_si();
    };
    bool first = true;
    while (true) {
        long sign = 1;
        if (c.eat('+')) sign = 1;
        else if (c.eat('-')) sign = -1;
        else if (!first)
            break;
        first = false;
        mpz_class coef = 1;
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coef = parse_int(c);
            have_coef = true;
        }
        long exp = 0;
        if (have_coef && c.eat('*')) {
            if (c.peek() != var) fail(Errc::SyntaxError, "expected variable after '*'");
        }
        if (c.peek() == var) {
            ++c.i;
            exp = 1;
            if (c.eat('^')) exp = parse_int(c).get_si();
            if (exp < 0) fail(Errc::SyntaxError, "negative exponent");
        } else if (!have_coef) {
            fail(Errc::SyntaxError, "expected term at position " + std::to_string(c.i) +
                                        " in \"" + c.s + "\"");
        }
        add_term(exp, sign * coef, 0);
        if (c.done()) break;
        if (c.peek() != '+' && c.peek() != '-') break;
    }
    return coeffs;
}

std::string strip_ws(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
    return out;
}

} // namespace

FieldElement parse_element(const std::string& raw, const Field& f) {
    std::string text = strip_ws(raw);
    if (text.empty()) fail(Errc::SyntaxError, "empty element literal");
    Cursor c{text};
    FieldElement result;
    switch (f->kind()) {
        case FieldKind::Rational:
            result = FieldElement::rational(f, parse_rational(c));
            break;
        case FieldKind::QuadExt: {
            mpq_class a = parse_rational(c);
            mpq_class b(0);
            if (c.peek() == '+' || c.peek() == '-') {
                long sign = c.eat('+') ? 1 : (c.eat('-'), -1);
                mpq_class mag = parse_rational(c);
                c.expect('*');
                for (char ch : std::string("sqrt(")) c.expect(ch);
                mpz_class d = parse_int(c);
                c.expect(')');
                if (d.get_si() != f->quad_d())
                    fail(Errc::NotInField, "sqrt(" + d.get_str() + ") is not in " + f->name());
                b = sign * mag;
            }
            result = FieldElement::quad(f, std::move(a), std::move(b));
            break;
        }
        case FieldKind::PrimeField: {
            mpz_class n = parse_int(c);
            result = FieldElement::from_mpz(f, n);
            break;
        }
        case FieldKind::ExtField: {
            ZpPoly coeffs = parse_int_poly(c, 't');
            result = FieldElement::ext(f, std::move(coeffs));
            break;
        }
    }
    if (!c.done())
        fail(Errc::SyntaxError, "trailing characters at position " + std::to_string(c.i) +
                                    " in \"" + text + "\"");
    return result;
}

Field parse_field(const std::string& raw) {
    std::string text = strip_ws(raw);
    if (text == "Q") return FieldDescriptor::rational();
    if (text.rfind("Q(sqrt", 0) == 0) {
        if (text.back() != ')') fail(Errc::UnknownField, "bad field literal: " + raw);
        std::string inner = text.substr(6, text.size() - 7);
        Cursor c{inner};
        mpz_class d = parse_int(c);
        if (!c.done()) fail(Errc::UnknownField, "bad field literal: " + raw);
        return FieldDescriptor::quad_ext(d.get_si());
    }
    if (text.rfind("GF(", 0) == 0 && text.back() == ')') {
        std::string inner = text.substr(3, text.size() - 4);
        auto semi = inner.find(';');
        if (semi == std::string::npos) {
            Cursor c{inner};
            mpz_class p = parse_int(c);
            if (!c.done()) {
                if (c.peek() == '^')
                    fail(Errc::UnknownField, "GF(p^k) needs an explicit modulus: " + raw);
                fail(Errc::UnknownField, "bad field literal: " + raw);
            }
            return FieldDescriptor::prime_field(p.get_si());
        }
        std::string head = inner.substr(0, semi);
        std::string mod = inner.substr(semi + 1);
        auto caret = head.find('^');
        if (caret == std::string::npos) fail(Errc::UnknownField, "bad field literal: " + raw);
        long p = std::stol(head.substr(0, caret));
        long k = std::stol(head.substr(caret + 1));
        Cursor c{mod};
        ZpPoly m = parse_int_poly(c, 'x');
        if (!c.done()) fail(Errc::UnknownField, "bad modulus in: " + raw);
        for (auto& x : m) x = mod_pos(x, p);
        zp_trim(m);
        if (zp_deg(m) != k)
            fail(Errc::UnknownField, "modulus degree does not match k in: " + raw);
        return FieldDescriptor::ext_field(p, std::move(m));
    }
    fail(Errc::UnknownField, "unrecognized field literal: " + raw);
}

// --- NField -----------------------------------------------------------------

NField::NField(std::vector<Field> components) {
    if (components.size() < 2)
        fail(Errc::ArityTooSmall, "an n-field needs at least 2 components");
    for (size_t i = 0; i < components.size(); ++i)
        for (size_t j = i + 1; j < components.size(); ++j)
            if (embeds(components[i], components[j]) || embeds(components[j], components[i]))
                fail(Errc::ContainmentViolation,
                     "components " + std::to_string(i + 1) + " (" + components[i]->name() +
                         ") and " + std::to_string(j + 1) + " (" + components[j]->name() +
                         ") are not independent: one embeds in the other");
    components_ = std::move(components);
}

NField validate_nfield(std::vector<Field> components) { return NField(std::move(components)); }

CharacteristicReport classify_characteristic(const std::vector<Field>& components) {
    CharacteristicReport r;
    bool any_zero = false, any_finite = false;
    for (const auto& f : components) {
        long c = f->characteristic();
        r.per_component.push_back(c);
        (c == 0 ? any_zero : any_finite) = true;
    }
    r.overall = any_zero && any_finite ? NCharacteristic::Mixed
                : any_zero             ? NCharacteristic::Zero
                                       : NCharacteristic::Finite;
    return r;
}

PrimenessReport classify_primeness(const std::vector<Field>& components) {
    PrimenessReport r;
    size_t primes = 0;
    for (size_t i = 0; i < components.size(); ++i) {
        const auto& f = components[i];
        bool prime = f->is_prime_field();
        r.component_prime.push_back(prime);
        r.proper_subfields.push_back(f->proper_subfields());
        if (prime) {
            ++primes;
        } else {
            Field sub = f->kind() == FieldKind::QuadExt ? FieldDescriptor::rational()
                                                        : FieldDescriptor::prime_field(f->prime());
            r.quasi.emplace_back(i, sub);
        }
    }
    r.overall = primes == components.size() ? NPrimeness::Prime
                : primes == 0               ? NPrimeness::NonPrime
                                            : NPrimeness::Semiprime;
    return r;
}

CharacteristicReport classify_characteristic(const NField& F) {
    return classify_characteristic(F.components());
}

PrimenessReport classify_primeness(const NField& F) { return classify_primeness(F.components()); }

const char* to_string(NCharacteristic c) {
    switch (c) {
        case NCharacteristic::Zero: return "zero";
        case NCharacteristic::Finite: return "finite";
        case NCharacteristic::Mixed: return "mixed";
    }
    return "?";
}

const char* to_string(NPrimeness p) {
    switch (p) {
        case NPrimeness::Prime: return "prime";
        case NPrimeness::Semiprime: return "semiprime";
        case NPrimeness::NonPrime: return "nonprime";
    }
    return "?";
}

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::DescriptorMismatch: return "DescriptorMismatch";
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::NotInField: return "NotInField";
        case Errc::ContainmentViolation: return "ContainmentViolation";
        case Errc::ArityTooSmall: return "ArityTooSmall";
        case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
        case Errc::BothZero: return "BothZero";
        case Errc::PositiveCharacteristic: return "PositiveCharacteristic";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::DuplicateAbscissa: return "DuplicateAbscissa";
        case Errc::FactorizationIncomplete: return "FactorizationIncomplete";
        case Errc::ShapeMismatch: return "ShapeMismatch";
        case Errc::SingularMatrix: return "SingularMatrix";
        case Errc::NotABasis: return "NotABasis";
        case Errc::AmbientMismatch: return "AmbientMismatch";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::NotInvariant: return "NotInvariant";
        case Errc::NotADirectSum: return "NotADirectSum";
        case Errc::NotCommuting: return "NotCommuting";
        case Errc::NotDiagonalizable: return "NotDiagonalizable";
        case Errc::NeedsFactorization: return "NeedsFactorization";
        case Errc::SplitFailure: return "SplitFailure";
        case Errc::UnorderedField: return "UnorderedField";
        case Errc::DependentInput: return "DependentInput";
        case Errc::NotSelfAdjoint: return "NotSelfAdjoint";
        case Errc::NotSymmetric: return "NotSymmetric";
        case Errc::CharacteristicTwo: return "CharacteristicTwo";
        case Errc::UnknownField: return "UnknownField";
        case Errc::UndefinedName: return "UndefinedName";
        case Errc::TooLargeForOracle: return "TooLargeForOracle";
        case Errc::Internal: return "Internal";
    }
    return "?";
}

} // namespace nlalg
