#include <algorithm>
#include <map>

#include "nlalg/poly.hpp"

namespace nlalg {

namespace {

// deterministic ordering of monic polynomials for factor lists
bool poly_canonical_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int k = a.degree(); k >= 0; --k) {
        FieldElement ca = a.coeff(k), cb = b.coeff(k);
        if (ca != cb) return FieldElement::canonical_less(ca, cb);
    }
    return false;
}

void add_factor(std::vector<FactorTerm>& out, const Poly& p, long mult, bool certified) {
    for (auto& t : out)
        if (t.p == p && t.certified == certified) {
            t.mult += mult;
            return;
        }
    out.push_back({p, mult, certified});
}

void sort_factors(std::vector<FactorTerm>& out) {
    std::sort(out.begin(), out.end(), [](const FactorTerm& a, const FactorTerm& b) {
        return poly_canonical_less(a.p, b.p);
    });
}

// --- finite field machinery --------------------------------------------------

std::vector<FieldElement> all_field_elements(const Field& F) {
    std::vector<FieldElement> out;
    if (F->kind() == FieldKind::PrimeField) {
        for (long r = 0; r < F->prime(); ++r) out.push_back(FieldElement::residue(F, r));
    } else {
        long p = F->prime(), k = F->ext_degree();
        long q = F->size();
        for (long code = 0; code < q; ++code) {
            std::vector<long> c(k);
            long m = code;
            for (long i = 0; i < k; ++i) { c[i] = m % p; m /= p; }
            out.push_back(FieldElement::ext(F, std::move(c)));
        }
    }
    return out;
}

// monic polynomial of given degree from an enumeration code (base q digits)
Poly monic_from_code(const Field& F, const std::vector<FieldElement>& elems, int degree,
                     long code) {
    std::vector<FieldElement> c;
    c.reserve(degree + 1);
    long q = static_cast<long>(elems.size());
    long m = code;
    for (int i = 0; i < degree; ++i) { c.push_back(elems[m % q]); m /= q; }
    c.push_back(FieldElement::one(F));
    return Poly::from_coeffs(F, std::move(c));
}

Poly poly_powmod(const Poly& base, long e, const Poly& mod) {
    Poly acc = Poly::one(base.field());
    Poly b = poly_divmod(base, mod).r;
    while (e > 0) {
        if (e & 1) acc = poly_divmod(acc * b, mod).r;
        e >>= 1;
        if (e) b = poly_divmod(b * b, mod).r;
    }
    return acc;
}

// p-th root of f = g(x^p) over GF(q): coefficient a -> a^(q/p)
Poly pth_root(const Poly& f) {
    const Field& F = f.field();
    long p = F->characteristic();
    long q = F->size();
    std::vector<FieldElement> c;
    for (int k = 0; k <= f.degree(); k += static_cast<int>(p))
        c.push_back(f.coeff(k).pow(q / p));
    return Poly::from_coeffs(F, std::move(c));
}

// squarefree decomposition over GF(q); emits (g, mult) pairs with g monic
// squarefree, multiplicities scaled by `scale`
void squarefree_decomp_finite(const Poly& f, long scale,
                              std::vector<std::pair<Poly, long>>& out) {
    if (f.degree() < 1) return;
    Poly fp = f.derivative();
    if (fp.is_zero()) {
        squarefree_decomp_finite(pth_root(f), scale * f.field()->characteristic(), out);
        return;
    }
    Poly c = poly_gcd(f, fp);
    Poly w = poly_exact_div(f, c).monic();
    long i = 1;
    while (w.degree() > 0) {
        Poly y = poly_gcd(w, c);
        Poly z = poly_exact_div(w, y).monic();
        if (z.degree() > 0) out.emplace_back(z, i * scale);
        w = y;
        c = poly_exact_div(c, y).monic();
        ++i;
    }
    if (c.degree() > 0) // what is left has all multiplicities divisible by p
        squarefree_decomp_finite(pth_root(c), scale * f.field()->characteristic(), out);
}

// exhaustive equal-degree splitting: h is squarefree, a product of monic
// irreducibles all of degree d; trial-divide by every monic polynomial of
// degree d (any hit is necessarily irreducible)
std::vector<Poly> edf_exhaustive(Poly h, int d, const std::vector<FieldElement>& elems) {
    std::vector<Poly> out;
    const Field& F = h.field();
    if (h.degree() == d) return {h};
    long q = static_cast<long>(elems.size());
    long count = 1;
    for (int i = 0; i < d; ++i) count *= q;
    for (long code = 0; code < count && h.degree() > d; ++code) {
        Poly cand = monic_from_code(F, elems, d, code);
        PolyDivMod qr = poly_divmod(h, cand);
        if (qr.r.is_zero()) {
            out.push_back(cand);
            h = qr.q;
        }
    }
    if (h.degree() > 0) out.push_back(h);
    return out;
}

void factor_finite_squarefree(const Poly& g, long mult, std::vector<FactorTerm>& out) {
    const Field& F = g.field();
    long q = F->size();
    std::vector<FieldElement> elems = all_field_elements(F);
    Poly G = g;
    Poly h = Poly::x(F);
    int d = 0;
    while (G.degree() > 0 && 2 * (d + 1) <= G.degree()) {
        ++d;
        h = poly_powmod(h, q, G);
        Poly gd = poly_gcd(h - Poly::x(F), G);
        if (gd.degree() > 0) {
            for (const Poly& irr : edf_exhaustive(gd, d, elems))
                add_factor(out, irr, mult, true);
            G = poly_exact_div(G, gd).monic();
            h = poly_divmod(h, G).r;
        }
    }
    if (G.degree() > 0) add_factor(out, G, mult, true);
}

Factorization factor_finite(const Poly& f) {
    Factorization res;
    res.unit = f.leading();
    std::vector<std::pair<Poly, long>> parts;
    squarefree_decomp_finite(f.monic(), 1, parts);
    for (const auto& [g, m] : parts) factor_finite_squarefree(g, m, res.factors);
    res.complete = true;
    return res;
}

// --- rational machinery -------------------------------------------------------

using ZPoly = std::vector<mpz_class>; // low degree first

ZPoly to_primitive_int(const Poly& f) {
    mpz_class den(1);
    for (const auto& c : f.coeffs()) den = lcm(den, c.rat().get_den());
    ZPoly z;
    for (const auto& c : f.coeffs()) {
        mpq_class v = c.rat() * den;
        z.push_back(v.get_num());
    }
    mpz_class content(0);
    for (const auto& c : z) content = gcd(content, c);
    if (content != 0)
        for (auto& c : z) c /= content;
    return z;
}

mpz_class zpoly_eval(const ZPoly& f, const mpz_class& t) {
    mpz_class acc(0);
    for (size_t i = f.size(); i-- > 0;) acc = acc * t + f[i];
    return acc;
}

std::vector<mpz_class> divisors_signed(const mpz_class& n) {
    std::vector<mpz_class> out;
    mpz_class a = abs(n);
    for (mpz_class i(1); i * i <= a; ++i) {
        if (a % i == 0) {
            out.push_back(i);
            if (i * i != a) out.push_back(a / i);
        }
    }
    std::sort(out.begin(), out.end());
    std::vector<mpz_class> both;
    for (const auto& d : out) {
        both.push_back(d);
        both.push_back(-d);
    }
    return both;
}

// extract roots in Q of a rational polynomial, dividing them out of f
std::vector<std::pair<FieldElement, long>> extract_rational_roots(Poly& f) {
    const Field& F = f.field();
    std::vector<std::pair<FieldElement, long>> roots;
    // strip powers of x
    long zero_mult = 0;
    while (f.degree() >= 1 && f.coeff(0).is_zero()) {
        f = poly_exact_div(f, Poly::x(F));
        ++zero_mult;
    }
    if (zero_mult > 0) roots.emplace_back(FieldElement::zero(F), zero_mult);
    if (f.degree() < 1) return roots;
    ZPoly z = to_primitive_int(f);
    std::vector<mpz_class> nums = divisors_signed(z.front());
    std::vector<mpz_class> dens = divisors_signed(z.back());
    for (const auto& num : nums) {
        for (const auto& den : dens) {
            if (den <= 0) continue;
            mpq_class cand(num, den);
            cand.canonicalize();
            FieldElement r = FieldElement::rational(F, cand);
            long mult = 0;
            while (f.degree() >= 1 && f.eval(r).is_zero()) {
                f = poly_exact_div(f, Poly::linear(r));
                ++mult;
            }
            if (mult > 0) {
                roots.emplace_back(r, mult);
                if (f.degree() < 1) return roots;
                z = to_primitive_int(f);
            }
        }
    }
    return roots;
}

// Kronecker search for a monic factor of degree m of the rational polynomial
// g (no rational roots, degree >= 2). Returns the factor if one exists.
std::optional<Poly> kronecker_find_factor(const Poly& g, int m) {
    const Field& F = g.field();
    ZPoly z = to_primitive_int(g);
    std::vector<FieldElement> ts;
    std::vector<std::vector<mpz_class>> divs;
    long t = 0;
    while (static_cast<int>(ts.size()) < m + 1) {
        mpz_class tz(t);
        mpz_class v = zpoly_eval(z, tz);
        if (v != 0) { // rational roots were removed, but integer points can still vanish only if root
            ts.push_back(FieldElement::from_mpz(F, tz));
            divs.push_back(divisors_signed(v));
        }
        t = t > 0 ? -t : -t + 1; // 0, 1, -1, 2, -2, ...
    }
    std::vector<size_t> idx(m + 1, 0);
    while (true) {
        std::vector<FieldElement> vals;
        vals.reserve(m + 1);
        for (int i = 0; i <= m; ++i) vals.push_back(FieldElement::from_mpz(F, divs[i][idx[i]]));
        Poly cand = lagrange_interpolate(ts, vals);
        if (cand.degree() == m) {
            PolyDivMod qr = poly_divmod(g, cand.monic());
            if (qr.r.is_zero()) return cand.monic();
        }
        // odometer
        int pos = 0;
        while (pos <= m) {
            if (++idx[pos] < divs[pos].size()) break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos > m) break;
    }
    return std::nullopt;
}

constexpr int kKroneckerDegreeCap = 6;

// factor a squarefree rational polynomial with no rational roots
void factor_rational_core(Poly g, long mult, std::vector<FactorTerm>& out, bool& complete) {
    if (g.degree() < 1) return;
    if (g.degree() == 1) {
        add_factor(out, g.monic(), mult, true);
        return;
    }
    if (g.degree() > kKroneckerDegreeCap) {
        add_factor(out, g.monic(), mult, false);
        complete = false;
        return;
    }
    for (int m = 2; 2 * m <= g.degree(); ++m) {
        if (auto h = kronecker_find_factor(g, m)) {
            factor_rational_core(*h, mult, out, complete);
            factor_rational_core(poly_exact_div(g, *h).monic(), mult, out, complete);
            return;
        }
    }
    add_factor(out, g.monic(), mult, true); // no factor up to deg/2: irreducible
}

// Yun's squarefree decomposition, characteristic 0
std::vector<std::pair<Poly, long>> squarefree_decomp_char0(const Poly& f) {
    std::vector<std::pair<Poly, long>> out;
    if (f.degree() < 1) return out;
    Poly g = poly_gcd(f, f.derivative());
    if (g.degree() == 0) {
        out.emplace_back(f.monic(), 1);
        return out;
    }
    Poly w = poly_exact_div(f, g).monic();
    Poly y = poly_exact_div(f.derivative(), g);
    Poly z = y - w.derivative();
    long i = 1;
    while (w.degree() > 0) {
        Poly gi = poly_gcd(w, z);
        if (gi.degree() > 0) out.emplace_back(gi.monic(), i);
        w = poly_exact_div(w, gi).monic();
        y = poly_exact_div(z, gi);
        z = y - w.derivative();
        ++i;
    }
    return out;
}

Factorization factor_rational(const Poly& f) {
    Factorization res;
    res.unit = f.leading();
    for (auto& [part, mult] : squarefree_decomp_char0(f.monic())) {
        Poly g = part;
        for (auto& [root, rm] : extract_rational_roots(g))
            add_factor(res.factors, Poly::linear(root), rm * mult, true);
        if (g.degree() >= 1) factor_rational_core(g.monic(), mult, res.factors, res.complete);
    }
    return res;
}

// --- Q(sqrt d) machinery ------------------------------------------------------

Poly conjugate_poly(const Poly& f) {
    const Field& F = f.field();
    std::vector<FieldElement> c;
    for (const auto& x : f.coeffs()) c.push_back(FieldElement::quad(F, x.quad().a, -x.quad().b));
    return Poly::from_coeffs(F, std::move(c));
}

bool all_coeffs_rational(const Poly& f) {
    for (const auto& c : f.coeffs())
        if (c.quad().b != 0) return false;
    return true;
}

Poly to_rational_poly(const Poly& f) {
    std::vector<FieldElement> c;
    Field Q = FieldDescriptor::rational();
    for (const auto& x : f.coeffs()) c.push_back(FieldElement::rational(Q, x.quad().a));
    return Poly::from_coeffs(Q, std::move(c));
}

Poly lift_to_quad(const Poly& f, const Field& QD) {
    std::vector<FieldElement> c;
    for (const auto& x : f.coeffs()) c.push_back(FieldElement::quad(QD, x.rat(), mpq_class(0)));
    return Poly::from_coeffs(QD, std::move(c));
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    if (q < 0) return std::nullopt;
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class rn = sqrt(num), rd = sqrt(den);
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    return mpq_class(rn, rd);
}

// All roots of g in Q(sqrt d), found through the norm polynomial N = g*conj(g):
// rational roots of N, plus roots read off monic quadratic factors of N.
std::vector<FieldElement> quad_roots(const Poly& g) {
    const Field& QD = g.field();
    long d = QD->quad_d();
    std::vector<FieldElement> candidates;
    Poly norm = g * conjugate_poly(g);
    Poly nQ = to_rational_poly(norm); // exact: norm is conjugation-invariant
    Field Q = FieldDescriptor::rational();

    Poly work = nQ;
    for (auto& [r, mult] : extract_rational_roots(work))
        candidates.push_back(FieldElement::quad(QD, r.rat(), mpq_class(0)));
    // monic quadratic factors of what is left of the norm
    while (work.degree() >= 2) {
        std::optional<Poly> quad;
        if (work.degree() == 2) quad = work.monic();
        else quad = kronecker_find_factor(work, 2);
        if (!quad) break;
        work = poly_exact_div(work, *quad).monic();
        // x^2 + Bx + C with roots (-B +- s*sqrt(d))/2 when disc = s^2 d
        mpq_class B = quad->coeff(1).rat(), C = quad->coeff(0).rat();
        mpq_class disc = B * B - 4 * C;
        if (auto s = rational_sqrt(disc / d)) {
            mpq_class half(1, 2);
            candidates.push_back(FieldElement::quad(QD, -B * half, *s * half));
            candidates.push_back(FieldElement::quad(QD, -B * half, -*s * half));
        } else if (auto r = rational_sqrt(disc)) {
            mpq_class half(1, 2);
            candidates.push_back(FieldElement::quad(QD, (-B + *r) * half, mpq_class(0)));
            candidates.push_back(FieldElement::quad(QD, (-B - *r) * half, mpq_class(0)));
        }
    }
    std::vector<FieldElement> roots;
    for (const auto& c : candidates)
        if (g.eval(c).is_zero() &&
            std::find(roots.begin(), roots.end(), c) == roots.end())
            roots.push_back(c);
    return roots;
}

Factorization factor_quad(const Poly& f) {
    const Field& QD = f.field();
    Factorization res;
    res.unit = f.leading();
    for (auto& [part, mult] : squarefree_decomp_char0(f.monic())) {
        Poly g = part;
        for (const auto& r : quad_roots(g)) {
            if (g.eval(r).is_zero()) {
                g = poly_exact_div(g, Poly::linear(r)).monic();
                add_factor(res.factors, Poly::linear(r), mult, true);
            }
        }
        if (g.degree() < 1) continue;
        if (!all_coeffs_rational(g)) {
            // no Trager machinery: leftover with irrational coefficients is flagged
            add_factor(res.factors, g.monic(), mult, false);
            res.complete = false;
            continue;
        }
        Factorization sub = factor_rational(to_rational_poly(g));
        for (const auto& t : sub.factors) {
            Poly lifted = lift_to_quad(t.p, QD);
            bool certified = t.certified;
            if (certified && t.p.degree() >= 2) {
                // a Q-irreducible factor can still split over Q(sqrt d):
                // odd degree cannot; degree 2 cannot (its roots were extracted);
                // even degree >= 4 is left undecided
                if (t.p.degree() >= 4 && t.p.degree() % 2 == 0) certified = false;
            }
            if (!certified) res.complete = false;
            add_factor(res.factors, lifted, t.mult * mult, certified);
        }
        if (!sub.complete) res.complete = false;
    }
    return res;
}

} // namespace

Factorization factor(const Poly& f) {
    if (f.is_zero()) fail(Errc::ZeroPolynomial, "cannot factor the zero polynomial");
    Factorization res;
    if (f.degree() == 0) {
        res.unit = f.leading();
        return res;
    }
    switch (f.field()->kind()) {
        case FieldKind::PrimeField:
        case FieldKind::ExtField: res = factor_finite(f); break;
        case FieldKind::Rational: res = factor_rational(f); break;
        case FieldKind::QuadExt: res = factor_quad(f); break;
    }
    sort_factors(res.factors);
    return res;
}

Poly squarefree_part(const Poly& f) {
    if (f.is_zero()) fail(Errc::ZeroPolynomial, "squarefree part of the zero polynomial");
    if (f.degree() == 0) return Poly::one(f.field());
    Poly d = poly_gcd(f, f.derivative());
    return poly_exact_div(f.monic(), d).monic();
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    Factorization fac = factor(f);
    if (fac.factors.size() == 1 && fac.factors[0].mult == 1) {
        if (fac.factors[0].certified) return true;
        fail(Errc::FactorizationIncomplete,
             "irreducibility of " + f.str() + " over " + f.field()->name() +
                 " is undecided by the supported strategies");
    }
    return false;
}

std::vector<std::pair<FieldElement, long>> roots_in_field(const Poly& f) {
    if (f.is_zero()) fail(Errc::ZeroPolynomial, "roots of the zero polynomial");
    std::vector<std::pair<FieldElement, long>> out;
    if (f.degree() < 1) return out;
    // linear-factor extraction is certified for every supported kind even
    // when the full factorization carries maybe-reducible leftovers
    Factorization fac = factor(f);
    for (const auto& t : fac.factors)
        if (t.p.degree() == 1) out.emplace_back(-t.p.coeff(0), t.mult);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return FieldElement::canonical_less(a.first, b.first);
    });
    return out;
}

} // namespace nlalg
