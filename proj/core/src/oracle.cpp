#include "nlalg/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace nlalg {
namespace oracle {

namespace {

constexpr int kDetCap = 5;

template <typename Mat, typename Entry>
Entry permutation_det(const Mat& a, Entry zero, Entry one) {
    int n = a.rows();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Entry acc = zero;
    do {
        // parity by counting inversions
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Entry term = one;
        for (int i = 0; i < n; ++i) term = term * a.at(i, perm[i]);
        acc = inversions % 2 == 0 ? acc + term : acc - term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

void require_det_size(int rows, int cols) {
    if (rows != cols) fail(Errc::ShapeMismatch, "determinant needs a square matrix");
    if (rows > kDetCap)
        fail(Errc::TooLargeForOracle, "permutation expansion is capped at " +
                                          std::to_string(kDetCap) + "x" + std::to_string(kDetCap));
}

void require_finite(const Field& f) {
    if (!f->is_finite())
        fail(Errc::TooLargeForOracle,
             "exhaustive enumeration needs a finite field, got " + f->name());
}

std::vector<FieldElement> enumerate_field(const Field& f) {
    std::vector<FieldElement> out;
    if (f->kind() == FieldKind::PrimeField) {
        for (long r = 0; r < f->prime(); ++r) out.push_back(FieldElement::residue(f, r));
    } else {
        long p = f->prime(), k = f->ext_degree();
        for (long code = 0; code < f->size(); ++code) {
            std::vector<long> c(k);
            long m = code;
            for (long i = 0; i < k; ++i) { c[i] = m % p; m /= p; }
            out.push_back(FieldElement::ext(f, std::move(c)));
        }
    }
    return out;
}

// local Horner evaluation of a polynomial at a matrix (kept separate from the
// engine's eval_poly_at_matrix on purpose)
Matrix poly_at(const Poly& p, const Matrix& a) {
    const Field& F = a.field();
    int n = a.rows();
    Matrix acc(F, n, n);
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * a;
        if (!p.coeff(k).is_zero())
            for (int i = 0; i < n; ++i) acc.at(i, i) = acc.at(i, i) + p.coeff(k);
    }
    return acc;
}

} // namespace

FieldElement det(const Matrix& a) {
    require_det_size(a.rows(), a.cols());
    return permutation_det(a, FieldElement::zero(a.field()), FieldElement::one(a.field()));
}

Poly det(const PolyMatrix& a) {
    require_det_size(a.rows(), a.cols());
    return permutation_det(a, Poly::zero(a.field()), Poly::one(a.field()));
}

Poly charpoly(const Matrix& a) { return det(PolyMatrix::x_identity_minus(a)); }

std::vector<std::pair<FieldElement, long>> roots(const Poly& f) {
    if (f.is_zero()) fail(Errc::ZeroPolynomial, "roots of the zero polynomial");
    require_finite(f.field());
    std::vector<std::pair<FieldElement, long>> out;
    for (const auto& c : enumerate_field(f.field())) {
        Poly g = f;
        long mult = 0;
        while (!g.is_constant() && g.eval(c).is_zero()) {
            g = poly_divmod(g, Poly::linear(c)).q;
            ++mult;
        }
        if (mult > 0) out.emplace_back(c, mult);
    }
    return out;
}

namespace {

// all monic polynomials of the given degree, ascending enumeration order
std::vector<Poly> monic_of_degree(const Field& f, int degree,
                                  const std::vector<FieldElement>& elems) {
    std::vector<Poly> out;
    long count = 1;
    for (int i = 0; i < degree; ++i) count *= static_cast<long>(elems.size());
    for (long code = 0; code < count; ++code) {
        std::vector<FieldElement> c;
        long m = code;
        for (int i = 0; i < degree; ++i) {
            c.push_back(elems[m % elems.size()]);
            m /= static_cast<long>(elems.size());
        }
        c.push_back(FieldElement::one(f));
        out.push_back(Poly::from_coeffs(f, std::move(c)));
    }
    return out;
}

void factor_rec(const Poly& f, std::vector<std::pair<Poly, long>>& out,
                const std::vector<FieldElement>& elems) {
    if (f.degree() < 1) return;
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        for (const auto& cand : monic_of_degree(f.field(), d, elems)) {
            PolyDivMod qr = poly_divmod(f, cand);
            if (qr.r.is_zero()) {
                factor_rec(cand, out, elems);
                factor_rec(qr.q, out, elems);
                return;
            }
        }
    }
    for (auto& [p, m] : out)
        if (p == f) {
            ++m;
            return;
        }
    out.emplace_back(f, 1);
}

} // namespace

std::vector<std::pair<Poly, long>> factor(const Poly& f) {
    if (f.is_zero()) fail(Errc::ZeroPolynomial, "cannot factor the zero polynomial");
    require_finite(f.field());
    std::vector<std::pair<Poly, long>> out;
    factor_rec(f.monic(), out, enumerate_field(f.field()));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (int k = a.first.degree(); k >= 0; --k) {
            FieldElement ca = a.first.coeff(k), cb = b.first.coeff(k);
            if (ca != cb) return FieldElement::canonical_less(ca, cb);
        }
        return false;
    });
    return out;
}

Poly minpoly(const Matrix& a) {
    require_finite(a.field());
    Poly cp = oracle::charpoly(a);
    std::vector<std::pair<Poly, long>> primes = oracle::factor(cp);
    // enumerate exponent tuples; pick the least-degree annihilating divisor
    std::vector<long> exps(primes.size(), 0);
    Poly best;
    bool have = false;
    while (true) {
        Poly cand = Poly::one(a.field());
        for (size_t i = 0; i < primes.size(); ++i)
            cand = cand * primes[i].first.pow(exps[i]);
        if (cand.degree() >= 1 && (!have || cand.degree() < best.degree())) {
            if (poly_at(cand, a).is_zero()) {
                best = cand;
                have = true;
            }
        }
        size_t pos = 0;
        while (pos < exps.size()) {
            if (++exps[pos] <= primes[pos].second) break;
            exps[pos] = 0;
            ++pos;
        }
        if (pos == exps.size()) break;
    }
    if (!have) fail(Errc::Internal, "no divisor of the characteristic polynomial annihilates A");
    return best;
}

} // namespace oracle
} // namespace nlalg
