#include "nlalg/poly.hpp"

#include <sstream>

namespace nlalg {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::zero(const Field& f) {
    Poly p;
    p.field_ = f;
    return p;
}

Poly Poly::one(const Field& f) { return constant(FieldElement::one(f)); }

Poly Poly::x(const Field& f) {
    return from_coeffs(f, {FieldElement::zero(f), FieldElement::one(f)});
}

Poly Poly::constant(FieldElement c) {
    Poly p;
    p.field_ = c.field();
    p.c_.push_back(std::move(c));
    p.trim();
    return p;
}

Poly Poly::from_coeffs(const Field& f, std::vector<FieldElement> coeffs) {
    Poly p;
    p.field_ = f;
    p.c_ = std::move(coeffs);
    for (const auto& c : p.c_)
        if (!same_field(c.field(), f)) fail(Errc::DescriptorMismatch, "coefficient field differs");
    p.trim();
    return p;
}

Poly Poly::monomial(FieldElement c, long k) {
    Poly p;
    p.field_ = c.field();
    if (!c.is_zero()) {
        p.c_.assign(k, FieldElement::zero(p.field_));
        p.c_.push_back(std::move(c));
    }
    return p;
}

Poly Poly::linear(const FieldElement& c) {
    return from_coeffs(c.field(), {-c, FieldElement::one(c.field())});
}

FieldElement Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return FieldElement::zero(field_);
    return c_[k];
}

FieldElement Poly::leading() const {
    if (c_.empty()) fail(Errc::ZeroPolynomial, "zero polynomial has no leading coefficient");
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    if (!same_field(field_, o.field_)) fail(Errc::DescriptorMismatch, "polynomial fields differ");
    Poly r = *this;
    if (o.c_.size() > r.c_.size()) r.c_.resize(o.c_.size(), FieldElement::zero(field_));
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] = r.c_[i] + o.c_[i];
    r.trim();
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (!same_field(field_, o.field_)) fail(Errc::DescriptorMismatch, "polynomial fields differ");
    if (is_zero() || o.is_zero()) return zero(field_);
    Poly r;
    r.field_ = field_;
    r.c_.assign(c_.size() + o.c_.size() - 1, FieldElement::zero(field_));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

Poly Poly::scaled(const FieldElement& c) const {
    Poly r = *this;
    for (auto& x : r.c_) x = c * x;
    r.trim();
    return r;
}

Poly Poly::shifted(int k) const {
    if (is_zero()) return *this;
    Poly r;
    r.field_ = field_;
    r.c_.assign(k, FieldElement::zero(field_));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

Poly Poly::pow(long e) const {
    Poly acc = one(field_), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

bool Poly::operator==(const Poly& o) const {
    return same_field(field_, o.field_) && c_ == o.c_;
}

FieldElement Poly::eval(const FieldElement& at) const {
    FieldElement acc = FieldElement::zero(field_);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

Poly Poly::derivative() const {
    if (degree() <= 0) return zero(field_);
    Poly r;
    r.field_ = field_;
    for (size_t k = 1; k < c_.size(); ++k)
        r.c_.push_back(FieldElement::from_int(field_, static_cast<long>(k)) * c_[k]);
    r.trim();
    return r;
}

Poly Poly::derivative(int order) const {
    Poly r = *this;
    for (int i = 0; i < order; ++i) r = r.derivative();
    return r;
}

PolyDivMod poly_divmod(const Poly& f, const Poly& d) {
    if (d.is_zero()) fail(Errc::DivisionByZeroPoly, "polynomial division by zero");
    if (!same_field(f.field(), d.field()))
        fail(Errc::DescriptorMismatch, "polynomial fields differ");
    const Field& F = f.field();
    Poly r = f;
    std::vector<FieldElement> q(std::max(0, f.degree() - d.degree() + 1),
                                FieldElement::zero(F));
    FieldElement lead_inv = d.leading().inverse();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        FieldElement c = r.leading() * lead_inv;
        q[k] = c;
        r = r - d.scaled(c).shifted(k);
    }
    return {Poly::from_coeffs(F, std::move(q)), r};
}

bool poly_divides(const Poly& d, const Poly& f) {
    if (d.is_zero()) return f.is_zero();
    return poly_divmod(f, d).r.is_zero();
}

Poly poly_exact_div(const Poly& f, const Poly& d) {
    PolyDivMod qr = poly_divmod(f, d);
    if (!qr.r.is_zero()) fail(Errc::Internal, "expected exact polynomial division");
    return qr.q;
}

PolyGcd gcd_bezout(const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero()) fail(Errc::BothZero, "gcd(0, 0) is undefined");
    const Field& F = f.field();
    Poly r0 = f, r1 = g;
    Poly u0 = Poly::one(F), u1 = Poly::zero(F);
    Poly v0 = Poly::zero(F), v1 = Poly::one(F);
    while (!r1.is_zero()) {
        PolyDivMod qr = poly_divmod(r0, r1);
        Poly u2 = u0 - qr.q * u1;
        Poly v2 = v0 - qr.q * v1;
        r0 = r1; r1 = qr.r;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    FieldElement scale = r0.leading().inverse();
    return {r0.scaled(scale), u0.scaled(scale), v0.scaled(scale)};
}

Poly poly_gcd(const Poly& f, const Poly& g) { return gcd_bezout(f, g).d; }

Poly poly_lcm(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return Poly::zero(f.field());
    return poly_exact_div(f * g, poly_gcd(f, g)).monic();
}

std::vector<FieldElement> taylor_expand(const Poly& f, const FieldElement& c) {
    const Field& F = f.field();
    if (F->characteristic() != 0)
        fail(Errc::PositiveCharacteristic,
             "Taylor expansion requires characteristic 0, got " + F->name());
    int n = std::max(0, f.degree());
    std::vector<FieldElement> out;
    mpz_class kfact(1);
    Poly dk = f;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) {
            kfact *= k;
            dk = dk.derivative();
        }
        out.push_back(dk.eval(c) / FieldElement::from_mpz(F, kfact));
    }
    return out;
}

long root_multiplicity(const Poly& f, const FieldElement& c) {
    if (f.is_zero()) fail(Errc::ZeroPolynomial, "multiplicity in the zero polynomial");
    Poly lin = Poly::linear(c);
    Poly g = f;
    long r = 0;
    while (true) {
        PolyDivMod qr = poly_divmod(g, lin);
        if (!qr.r.is_zero()) break;
        ++r;
        g = qr.q;
    }
    return r;
}

std::vector<Poly> lagrange_basis(const std::vector<FieldElement>& ts) {
    for (size_t i = 0; i < ts.size(); ++i)
        for (size_t j = i + 1; j < ts.size(); ++j)
            if (ts[i] == ts[j])
                fail(Errc::DuplicateAbscissa,
                     "abscissae " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
    std::vector<Poly> basis;
    for (size_t i = 0; i < ts.size(); ++i) {
        Poly p = Poly::one(ts[i].field());
        FieldElement denom = FieldElement::one(ts[i].field());
        for (size_t j = 0; j < ts.size(); ++j) {
            if (j == i) continue;
            p = p * Poly::linear(ts[j]);
            denom = denom * (ts[i] - ts[j]);
        }
        basis.push_back(p.scaled(denom.inverse()));
    }
    return basis;
}

Poly lagrange_interpolate(const std::vector<FieldElement>& ts,
                          const std::vector<FieldElement>& values) {
    if (ts.size() != values.size() || ts.empty())
        fail(Errc::ShapeMismatch, "points and values differ in length");
    std::vector<Poly> basis = lagrange_basis(ts);
    Poly acc = Poly::zero(ts[0].field());
    for (size_t i = 0; i < ts.size(); ++i) acc = acc + basis[i].scaled(values[i]);
    return acc;
}

Matrix vandermonde(const std::vector<FieldElement>& ts) {
    if (ts.empty()) fail(Errc::ShapeMismatch, "vandermonde of no points");
    const Field& F = ts[0].field();
    int n = static_cast<int>(ts.size());
    Matrix m(F, n, n);
    for (int i = 0; i < n; ++i) {
        FieldElement p = FieldElement::one(F);
        for (int j = 0; j < n; ++j) {
            m.at(i, j) = p;
            p = p * ts[i];
        }
    }
    return m;
}

// --- literals ---------------------------------------------------------------

namespace {

bool coeff_needs_parens(const std::string& s) {
    for (size_t i = 1; i < s.size(); ++i)
        if (s[i] == '+' || s[i] == '-') return true;
    return false;
}

// Leading '-' that can be absorbed into the term joiner (Q and rational
// Q(sqrt d) values only; canonical residues never print a sign).
bool starts_negative(const std::string& s) { return !s.empty() && s[0] == '-'; }

} // namespace

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        FieldElement c = coeff(k);
        if (c.is_zero()) continue;
        std::string lit = c.str();
        if (starts_negative(lit) && !coeff_needs_parens(lit)) {
            os << "-";
            lit = (-c).str();
        } else if (!first) {
            os << "+";
        }
        if (k == 0) {
            os << (coeff_needs_parens(lit) ? "(" + lit + ")" : lit);
        } else {
            if (lit != "1") {
                os << (coeff_needs_parens(lit) ? "(" + lit + ")" : lit) << "*";
            }
            os << "x";
            if (k >= 2) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

Poly parse_poly(const std::string& raw, const Field& f) {
    std::string text;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) text.push_back(ch);
    if (text.empty()) fail(Errc::SyntaxError, "empty polynomial literal");

    // split into signed terms at top-level +/-
    struct Term {
        int sign;
        std::string body;
    };
    std::vector<Term> terms;
    int depth = 0;
    int sign = 1;
    std::string cur;
    size_t i = 0;
    if (text[0] == '-') { sign = -1; i = 1; }
    else if (text[0] == '+') { i = 1; }
    for (; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (depth == 0 && (ch == '+' || ch == '-')) {
            if (cur.empty()) fail(Errc::SyntaxError, "empty term in \"" + raw + "\"");
            terms.push_back({sign, cur});
            cur.clear();
            sign = ch == '+' ? 1 : -1;
            continue;
        }
        cur.push_back(ch);
    }
    if (cur.empty()) fail(Errc::SyntaxError, "dangling sign in \"" + raw + "\"");
    terms.push_back({sign, cur});

    Poly acc = Poly::zero(f);
    for (const auto& t : terms) {
        // locate the variable at top level
        int d = 0;
        size_t xpos = std::string::npos;
        for (size_t j = 0; j < t.body.size(); ++j) {
            char ch = t.body[j];
            if (ch == '(') ++d;
            if (ch == ')') --d;
            if (d == 0 && ch == 'x') { xpos = j; break; }
        }
        long exp = 0;
        std::string coeff_text;
        if (xpos == std::string::npos) {
            coeff_text = t.body;
        } else {
            exp = 1;
            size_t after = xpos + 1;
            if (after < t.body.size() && t.body[after] == '^') {
                size_t e = after + 1, start = e;
                while (e < t.body.size() && std::isdigit(static_cast<unsigned char>(t.body[e]))) ++e;
                if (e == start || e != t.body.size())
                    fail(Errc::SyntaxError, "bad exponent in term \"" + t.body + "\"");
                exp = std::stol(t.body.substr(start, e - start));
            } else if (after != t.body.size()) {
                fail(Errc::SyntaxError, "unexpected text after variable in \"" + t.body + "\"");
            }
            coeff_text = t.body.substr(0, xpos);
            if (!coeff_text.empty()) {
                if (coeff_text.back() != '*')
                    fail(Errc::SyntaxError, "expected '*' before variable in \"" + t.body + "\"");
                coeff_text.pop_back();
            }
        }
        if (coeff_text.size() >= 2 && coeff_text.front() == '(' && coeff_text.back() == ')')
            coeff_text = coeff_text.substr(1, coeff_text.size() - 2);
        FieldElement c = coeff_text.empty() ? FieldElement::one(f) : parse_element(coeff_text, f);
        if (t.sign < 0) c = -c;
        acc = acc + Poly::monomial(std::move(c), exp);
    }
    return acc;
}

} // namespace nlalg
