#include "nlalg/operators.hpp"

#include <algorithm>

namespace nlalg {

NOperator::NOperator(NField field, NMatrix a) : field_(std::move(field)), a_(std::move(a)) {
    if (field_.arity() != a_.arity()) fail(Errc::ShapeMismatch, "arity differs from the n-field");
    for (size_t i = 0; i < a_.arity(); ++i) {
        if (!a_.parts[i].is_square()) fail(Errc::ShapeMismatch, "operator components must be square");
        if (!same_field(a_.parts[i].field(), field_.component(i)))
            fail(Errc::DescriptorMismatch, "component field disagrees with the n-field");
    }
}

Matrix eval_poly_at_matrix(const Poly& p, const Matrix& a) {
    if (!a.is_square()) fail(Errc::ShapeMismatch, "polynomial evaluation needs a square matrix");
    const Field& F = a.field();
    int n = a.rows();
    Matrix acc(F, n, n);
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * a;
        FieldElement c = p.coeff(k);
        if (!c.is_zero())
            for (int i = 0; i < n; ++i) acc.at(i, i) = acc.at(i, i) + c;
    }
    return acc;
}

Matrix companion(const Poly& q) {
    if (!q.is_monic() || q.degree() < 1)
        fail(Errc::ShapeMismatch, "companion matrix needs a monic polynomial of degree >= 1");
    const Field& F = q.field();
    int k = q.degree();
    Matrix c(F, k, k);
    for (int i = 0; i + 1 < k; ++i) c.at(i + 1, i) = FieldElement::one(F);
    for (int i = 0; i < k; ++i) c.at(i, k - 1) = -q.coeff(i);
    return c;
}

Poly charpoly(const Matrix& a) {
    Poly f = poly_det_bareiss(PolyMatrix::x_identity_minus(a));
    if (f.degree() != a.rows() || !f.is_monic())
        fail(Errc::Internal, "characteristic polynomial is not monic of full degree");
    return f;
}

NPoly charpoly(const NOperator& t) {
    NPoly r;
    for (size_t i = 0; i < t.arity(); ++i) r.parts.push_back(charpoly(t.part(i)));
    return r;
}

namespace {

Vec vectorize(const Matrix& m) {
    Vec v;
    v.reserve(static_cast<size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

// least-degree monic annihilating polynomial via the first dependency among
// the vectorized powers of A
Poly minpoly_by_powers(const Matrix& a) {
    const Field& F = a.field();
    int n = a.rows();
    std::vector<Vec> powers;
    Matrix pk = Matrix::identity(F, n);
    powers.push_back(vectorize(pk));
    for (int k = 1; k <= n; ++k) {
        pk = pk * a;
        Vec target = vectorize(pk);
        auto combo = try_solve(Matrix::from_cols(F, powers), target);
        if (combo) {
            std::vector<FieldElement> coeffs;
            for (int j = 0; j < k; ++j) coeffs.push_back(-(*combo)[j]);
            coeffs.push_back(FieldElement::one(F));
            return Poly::from_coeffs(F, std::move(coeffs));
        }
        powers.push_back(std::move(target));
    }
    fail(Errc::Internal, "no annihilating polynomial up to the space dimension");
}

} // namespace

ComponentInvariants snf_invariant_factors(const Matrix& a) {
    ComponentInvariants out{{}, smith_normal_form(PolyMatrix::x_identity_minus(a))};
    for (auto it = out.snf.diagonal.rbegin(); it != out.snf.diagonal.rend(); ++it)
        if (it->degree() >= 1) out.chain.push_back(*it);
    return out;
}

NInvariantFactors snf_invariant_factors(const NOperator& t) {
    NInvariantFactors r;
    for (size_t i = 0; i < t.arity(); ++i) r.parts.push_back(snf_invariant_factors(t.part(i)));
    return r;
}

Poly minpoly(const Matrix& a) {
    if (!a.is_square()) fail(Errc::ShapeMismatch, "minimal polynomial needs a square matrix");
    Poly byp = minpoly_by_powers(a);
    ComponentInvariants inv = snf_invariant_factors(a);
    if (inv.chain.empty() || inv.chain.front() != byp)
        fail(Errc::Internal,
             "minimal polynomial routes disagree: powers gave " + byp.str() + ", SNF gave " +
                 (inv.chain.empty() ? std::string("nothing") : inv.chain.front().str()));
    return byp;
}

NPoly minpoly(const NOperator& t) {
    NPoly r;
    for (size_t i = 0; i < t.arity(); ++i) r.parts.push_back(minpoly(t.part(i)));
    return r;
}

// --- factorization helpers ---------------------------------------------------

namespace {

struct PrimePowers {
    std::vector<Poly> primes;
    std::vector<long> exponents;
};

PrimePowers factor_minpoly_or_throw(const Poly& m) {
    Factorization fac = factor(m);
    if (!fac.complete)
        fail(Errc::NeedsFactorization,
             "minimal polynomial " + m.str() + " over " + m.field()->name() +
                 " could not be fully factored");
    PrimePowers pp;
    for (const auto& t : fac.factors) {
        pp.primes.push_back(t.p);
        pp.exponents.push_back(t.mult);
    }
    return pp;
}

} // namespace

// --- rational form ------------------------------------------------------------

namespace {

Matrix block_diagonal(const Field& F, const std::vector<Matrix>& blocks) {
    int n = 0;
    for (const auto& b : blocks) n += b.rows();
    Matrix m(F, n, n);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) m.at(off + i, off + j) = b.at(i, j);
        off += b.rows();
    }
    return m;
}

// Krylov columns alpha, A alpha, ..., A^{k-1} alpha
Matrix krylov_columns(const Matrix& a, const Vec& alpha, int k) {
    Matrix m(a.field(), a.rows(), k);
    Vec v = alpha;
    for (int j = 0; j < k; ++j) {
        m.set_col(j, v);
        if (j + 1 < k) v = a.apply(v);
    }
    return m;
}

// least-degree monic q with q(A) v = 0, by the first Krylov dependency
Poly vector_annihilator(const Matrix& a, const Vec& v) {
    const Field& F = a.field();
    if (vec_is_zero(v)) return Poly::one(F);
    std::vector<Vec> krylov{v};
    Vec cur = v;
    for (int k = 1; k <= a.rows(); ++k) {
        cur = a.apply(cur);
        auto combo = try_solve(Matrix::from_cols(F, krylov), cur);
        if (combo) {
            std::vector<FieldElement> coeffs;
            for (int j = 0; j < k; ++j) coeffs.push_back(-(*combo)[j]);
            coeffs.push_back(FieldElement::one(F));
            return Poly::from_coeffs(F, std::move(coeffs));
        }
        krylov.push_back(cur);
    }
    fail(Errc::Internal, "Krylov sequence did not close");
}

// u | f, v | g with u*v = lcm(f, g) and gcd(u, v) = 1; gcd arithmetic only
std::pair<Poly, Poly> coprime_split(const Poly& f, const Poly& g) {
    Poly h = poly_gcd(f, g);
    Poly u = poly_exact_div(f, h).monic();
    while (true) {
        Poly e = poly_gcd(u, h);
        if (e.degree() == 0) break;
        u = (u * e).monic();
        h = poly_exact_div(h, e).monic();
    }
    Poly v = poly_exact_div(poly_lcm(f, g), u).monic();
    return {u, v};
}

// vector whose annihilator is the full minimal polynomial; needs no
// factorization (the lcm of two annihilators is realized through a coprime
// split of the pair)
Vec maximal_vector(const Matrix& a) {
    const Field& F = a.field();
    int n = a.rows();
    Vec alpha = vec_zero(F, n);
    alpha[0] = FieldElement::one(F);
    Poly p = vector_annihilator(a, alpha);
    for (int i = 1; i < n; ++i) {
        Vec e = vec_zero(F, n);
        e[i] = FieldElement::one(F);
        Poly q = vector_annihilator(a, e);
        if (poly_divides(q, p)) continue;
        auto [u, v] = coprime_split(p, q);
        alpha = vec_add(eval_poly_at_matrix(poly_exact_div(p, u), a).apply(alpha),
                        eval_poly_at_matrix(poly_exact_div(q, v), a).apply(e));
        p = (u * v).monic();
    }
    return alpha;
}

// cyclic generators with annihilator chain q_1 (= minpoly), q_2, ... built by
// quotient recursion and conductor-corrected lifts
void cyclic_generators(const Matrix& a, std::vector<Vec>& gens, std::vector<Poly>& anns) {
    const Field& F = a.field();
    int n = a.rows();
    Poly m = minpoly_by_powers(a);
    Vec alpha = maximal_vector(a);
    if (vector_annihilator(a, alpha) != m)
        fail(Errc::Internal, "maximal vector construction missed the minimal polynomial");
    int k = m.degree();
    Matrix kry = krylov_columns(a, alpha, k);
    gens.push_back(alpha);
    anns.push_back(m);
    if (k == n) return;

    // extend the cyclic basis to a full basis with standard basis vectors
    Matrix ext = kry.hstack(Matrix::identity(F, n));
    RrefResult rr = rref(ext);
    std::vector<int> section_cols;
    for (int p : rr.pivot_cols)
        if (p >= k) section_cols.push_back(p - k);
    if (static_cast<int>(section_cols.size()) != n - k)
        fail(Errc::Internal, "basis extension failed");
    Matrix section(F, n, n - k);
    for (size_t j = 0; j < section_cols.size(); ++j)
        section.at(section_cols[j], static_cast<int>(j)) = FieldElement::one(F);

    Matrix full = kry.hstack(section);
    Matrix full_inv = inverse(full);
    Matrix conj = full_inv * a * full; // [[B, C], [0, D]] with W invariant
    Matrix quot(F, n - k, n - k);
    for (int i = 0; i < n - k; ++i)
        for (int j = 0; j < n - k; ++j) quot.at(i, j) = conj.at(k + i, k + j);

    std::vector<Vec> qgens;
    std::vector<Poly> qanns;
    cyclic_generators(quot, qgens, qanns);

    for (size_t g = 0; g < qgens.size(); ++g) {
        const Poly& q = qanns[g];
        Vec lift = section.apply(qgens[g]);
        // q(A) lift lies in W = Z(alpha); divide its cyclic coordinates by q
        Vec gamma = eval_poly_at_matrix(q, a).apply(lift);
        auto coords = try_solve(kry, gamma);
        if (!coords) fail(Errc::Internal, "conductor image escaped the cyclic subspace");
        Poly gpoly = Poly::from_coeffs(F, *coords);
        PolyDivMod qr = poly_divmod(gpoly, q);
        if (!qr.r.is_zero()) fail(Errc::Internal, "admissibility division failed");
        Vec beta = vec_sub(lift, eval_poly_at_matrix(qr.q, a).apply(alpha));
        if (!vec_is_zero(eval_poly_at_matrix(q, a).apply(beta)))
            fail(Errc::Internal, "lifted generator has the wrong annihilator");
        gens.push_back(beta);
        anns.push_back(q);
    }
}

} // namespace

RationalFormComponent rational_form(const Matrix& a, bool with_transition) {
    RationalFormComponent out;
    ComponentInvariants inv = snf_invariant_factors(a);
    out.chain = inv.chain;
    std::vector<Matrix> blocks;
    for (const auto& q : out.chain) blocks.push_back(companion(q));
    out.form = block_diagonal(a.field(), blocks);
    if (with_transition) {
        std::vector<Vec> gens;
        std::vector<Poly> anns;
        cyclic_generators(a, gens, anns);
        if (anns != out.chain)
            fail(Errc::Internal, "cyclic decomposition disagrees with the SNF chain");
        std::vector<Matrix> cols;
        for (size_t g = 0; g < gens.size(); ++g)
            cols.push_back(krylov_columns(a, gens[g], anns[g].degree()));
        Matrix p = cols[0];
        for (size_t g = 1; g < cols.size(); ++g) p = p.hstack(cols[g]);
        if (!is_invertible(p)) fail(Errc::Internal, "transition basis is singular");
        if (inverse(p) * a * p != out.form)
            fail(Errc::Internal, "transition basis does not conjugate to the rational form");
        out.transition = p;
    }
    return out;
}

NRationalForm rational_form(const NOperator& t, bool with_transition) {
    NRationalForm r;
    for (size_t i = 0; i < t.arity(); ++i)
        r.parts.push_back(rational_form(t.part(i), with_transition));
    return r;
}

// --- eigen / diagonalization ---------------------------------------------------

EigenComponent eigen(const Matrix& a) {
    EigenComponent out;
    Poly f = charpoly(a);
    for (const auto& [root, mult] : roots_in_field(f)) {
        (void)mult;
        out.values.push_back(root);
        Matrix shifted = a;
        for (int i = 0; i < a.rows(); ++i) shifted.at(i, i) = shifted.at(i, i) - root;
        out.eigenspaces.push_back(nullspace(shifted));
    }
    return out;
}

DiagonalizeComponent diagonalize(const Matrix& a) {
    DiagonalizeComponent out;
    Poly m = minpoly(a);
    // squarefree and fully split: both checks are certified for every kind
    if (poly_gcd(m, m.derivative()).degree() != 0) return out;
    auto roots = roots_in_field(m);
    Poly prod = Poly::one(a.field());
    for (const auto& [root, mult] : roots) {
        (void)mult;
        prod = prod * Poly::linear(root);
    }
    if (prod != m) return out;
    out.diagonalizable = true;
    const Field& F = a.field();
    Matrix p(F, a.rows(), 0);
    Matrix d(F, a.rows(), a.rows());
    int col = 0;
    for (const auto& [root, mult] : roots) {
        (void)mult;
        Matrix shifted = a;
        for (int i = 0; i < a.rows(); ++i) shifted.at(i, i) = shifted.at(i, i) - root;
        Matrix es = nullspace(shifted);
        p = p.cols() == 0 ? es : p.hstack(es);
        for (int j = 0; j < es.cols(); ++j, ++col) d.at(col, col) = root;
    }
    if (col != a.rows()) fail(Errc::Internal, "eigenspace dimensions do not fill the space");
    if (!is_invertible(p)) fail(Errc::Internal, "eigenvector matrix is singular");
    if (inverse(p) * a * p != d) fail(Errc::Internal, "diagonalization check failed");
    out.p = p;
    out.d = d;
    return out;
}

// --- Jordan ---------------------------------------------------------------------

JordanFormComponent jordan_form(const Matrix& a) {
    JordanFormComponent out;
    ComponentInvariants inv = snf_invariant_factors(a);
    Factorization fac = factor(inv.chain.front());
    if (!fac.complete) {
        out.factorization_incomplete = true;
        for (const auto& t : fac.factors)
            if (!t.certified) { out.failing_factor = t.p; break; }
        return out;
    }
    for (const auto& t : fac.factors)
        if (t.p.degree() >= 2) {
            out.failing_factor = t.p;
            return out;
        }
    out.split = true;
    std::vector<FieldElement> values;
    for (const auto& t : fac.factors) values.push_back(-t.p.coeff(0));
    std::sort(values.begin(), values.end(), FieldElement::canonical_less);
    for (const auto& c : values) {
        for (const auto& q : inv.chain) {
            long mult = root_multiplicity(q, c);
            if (mult > 0) out.blocks.push_back({c, static_cast<int>(mult)});
        }
    }
    // chain order already gives non-increasing sizes per eigenvalue
    std::vector<Matrix> blocks;
    const Field& F = a.field();
    for (const auto& b : out.blocks) {
        Matrix j(F, b.size, b.size);
        for (int i = 0; i < b.size; ++i) {
            j.at(i, i) = b.eigenvalue;
            if (i + 1 < b.size) j.at(i + 1, i) = FieldElement::one(F);
        }
        blocks.push_back(j);
    }
    out.form = block_diagonal(F, blocks);
    return out;
}

// --- primary decomposition / D + N ----------------------------------------------

namespace {

std::vector<PrimaryPart> primary_from_powers(const Matrix& a, const Poly& m,
                                             const PrimePowers& pp) {
    const Field& F = a.field();
    size_t k = pp.primes.size();
    std::vector<Poly> cofactors;
    for (size_t i = 0; i < k; ++i)
        cofactors.push_back(poly_exact_div(m, pp.primes[i].pow(pp.exponents[i])));

    // Bezout data: sum_i g_i * cofactor_i = 1 (cofactors are coprime)
    std::vector<Poly> gs(k, Poly::zero(F));
    Poly d = cofactors[0];
    gs[0] = Poly::one(F);
    for (size_t i = 1; i < k; ++i) {
        PolyGcd e = gcd_bezout(d, cofactors[i]);
        for (size_t j = 0; j < i; ++j) gs[j] = gs[j] * e.u;
        gs[i] = e.v;
        d = e.d;
    }
    if (d.degree() != 0) fail(Errc::Internal, "primary cofactors are not coprime");

    std::vector<PrimaryPart> parts;
    for (size_t i = 0; i < k; ++i) {
        PrimaryPart part;
        part.prime = pp.primes[i];
        part.exponent = pp.exponents[i];
        part.h = poly_divmod(gs[i] * cofactors[i], m).r;
        part.projection = eval_poly_at_matrix(part.h, a);
        Matrix power = eval_poly_at_matrix(pp.primes[i].pow(pp.exponents[i]), a);
        part.w = Subspace::span_cols(nullspace(power));
        parts.push_back(std::move(part));
    }
    return parts;
}

} // namespace

std::vector<PrimaryPart> primary_decomposition(const Matrix& a) {
    Poly m = minpoly(a);
    PrimePowers pp = factor_minpoly_or_throw(m);
    return primary_from_powers(a, m, pp);
}

DnPair dn_decomposition(const Matrix& a) {
    const Field& F = a.field();
    Poly m = minpoly(a);
    auto roots = roots_in_field(m);
    Poly prod = Poly::one(F);
    PrimePowers pp;
    for (const auto& [root, mult] : roots) {
        pp.primes.push_back(Poly::linear(root));
        pp.exponents.push_back(mult);
        prod = prod * Poly::linear(root).pow(mult);
    }
    if (prod != m) {
        Poly leftover = poly_exact_div(m, prod).monic();
        fail(Errc::SplitFailure, "minimal polynomial does not split: factor " + leftover.str() +
                                     " over " + F->name());
    }
    std::vector<PrimaryPart> parts = primary_from_powers(a, m, pp);
    Matrix d(F, a.rows(), a.rows());
    Poly dpoly = Poly::zero(F);
    for (size_t i = 0; i < parts.size(); ++i) {
        FieldElement c = -parts[i].prime.coeff(0);
        d = d + parts[i].projection.scaled(c);
        dpoly = dpoly + parts[i].h.scaled(c);
    }
    return {d, a - d, poly_divmod(dpoly, m).r};
}

// --- conductors ------------------------------------------------------------------

ConductorResult t_conductor(const Matrix& a, const Vec& alpha, const Subspace& w) {
    const Field& F = a.field();
    if (!is_invariant(a, w)) fail(Errc::NotInvariant, "W is not invariant under the operator");
    Poly m = minpoly_by_powers(a);
    int bound = m.degree();
    std::vector<Vec> krylov;
    Vec v = alpha;
    for (int j = 0; j <= bound; ++j) {
        krylov.push_back(v);
        v = a.apply(v);
    }
    Poly conductor;
    for (int deg = 0; deg <= bound; ++deg) {
        // A^deg alpha + sum_{j<deg} g_j A^j alpha in W
        std::vector<Vec> cols(krylov.begin(), krylov.begin() + deg);
        for (int j = 0; j < w.dim(); ++j) cols.push_back(w.basis().col(j));
        Vec rhs = vec_scale(-FieldElement::one(F), krylov[deg]);
        std::optional<Vec> sol;
        if (cols.empty()) {
            if (vec_is_zero(rhs)) sol = Vec{};
        } else {
            sol = try_solve(Matrix::from_cols(F, cols), rhs);
        }
        if (sol) {
            std::vector<FieldElement> coeffs;
            for (int j = 0; j < deg; ++j) coeffs.push_back((*sol)[j]);
            coeffs.push_back(FieldElement::one(F));
            conductor = Poly::from_coeffs(F, std::move(coeffs));
            break;
        }
    }
    if (conductor.is_zero()) fail(Errc::Internal, "conductor search exceeded the minimal degree");

    ConductorResult out;
    out.conductor = conductor;
    // the T-annihilator degree is the cyclic subspace dimension
    Poly ann = w.dim() == 0 ? conductor : t_annihilator(a, alpha);
    int k = ann.degree();
    out.cyclic_basis = k == 0 ? Matrix(F, a.rows(), 0) : krylov_columns(a, alpha, k);
    out.cyclic = Subspace::span_cols(out.cyclic_basis);
    return out;
}

Poly t_annihilator(const Matrix& a, const Vec& alpha) {
    return t_conductor(a, alpha, Subspace(a.field(), a.rows())).conductor;
}

// --- direct sums -------------------------------------------------------------------

std::vector<Matrix> direct_sum_projections(const std::vector<Subspace>& ws) {
    if (ws.empty()) fail(Errc::NotADirectSum, "no subspaces given");
    const Field& F = ws[0].field();
    int n = ws[0].ambient();
    int total = 0;
    for (const auto& w : ws) {
        if (w.ambient() != n) fail(Errc::AmbientMismatch, "ambient spaces differ");
        total += w.dim();
    }
    if (total != n)
        fail(Errc::NotADirectSum, "dimensions sum to " + std::to_string(total) + ", not " +
                                      std::to_string(n) + " (V is not the sum)");
    Matrix m(F, n, 0);
    for (const auto& w : ws)
        if (w.dim() > 0) m = m.cols() == 0 ? w.basis() : m.hstack(w.basis());
    if (!is_invertible(m))
        fail(Errc::NotADirectSum, "subspaces are not independent (concatenated bases singular)");
    Matrix minv = inverse(m);
    std::vector<Matrix> es;
    int off = 0;
    for (const auto& w : ws) {
        Matrix e(F, n, n);
        for (int c = 0; c < w.dim(); ++c)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    e.at(i, j) = e.at(i, j) + m.at(i, off + c) * minv.at(off + c, j);
        es.push_back(e);
        off += w.dim();
    }
    return es;
}

std::vector<bool> invariance_commute_check(const Matrix& a, const std::vector<Matrix>& es) {
    std::vector<bool> out;
    for (const auto& e : es) out.push_back(a * e == e * a);
    return out;
}

// --- simultaneous diagonalization ----------------------------------------------------

Matrix simultaneous_diagonalize(const std::vector<Matrix>& as) {
    if (as.empty()) fail(Errc::ShapeMismatch, "empty family");
    const Field& F = as[0].field();
    int n = as[0].rows();
    for (size_t i = 0; i < as.size(); ++i) {
        if (!as[i].is_square() || as[i].rows() != n || !same_field(as[i].field(), F))
            fail(Errc::ShapeMismatch, "family members act on different spaces");
        for (size_t j = i + 1; j < as.size(); ++j)
            if (as[i] * as[j] != as[j] * as[i])
                fail(Errc::NotCommuting, "operators " + std::to_string(i + 1) + " and " +
                                             std::to_string(j + 1) + " do not commute");
    }
    for (size_t i = 0; i < as.size(); ++i)
        if (!diagonalize(as[i]).diagonalizable)
            fail(Errc::NotDiagonalizable, "operator " + std::to_string(i + 1) +
                                              " is not diagonalizable");

    std::vector<Subspace> spaces{Subspace::full(F, n)};
    for (const auto& a : as) {
        std::vector<Subspace> refined;
        for (const auto& s : spaces) {
            Matrix r = restriction(a, s); // invariant: commuting family refinement
            EigenComponent eg = eigen(r);
            for (size_t v = 0; v < eg.values.size(); ++v) {
                Matrix lifted = s.basis() * eg.eigenspaces[v];
                refined.push_back(Subspace::span_cols(lifted));
            }
        }
        spaces = std::move(refined);
    }
    Matrix p(F, n, 0);
    for (const auto& s : spaces) p = p.cols() == 0 ? s.basis() : p.hstack(s.basis());
    if (p.cols() != n || !is_invertible(p))
        fail(Errc::Internal, "common eigenbasis does not fill the space");
    Matrix pinv = inverse(p);
    for (const auto& a : as) {
        Matrix d = pinv * a * p;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && !d.at(i, j).is_zero())
                    fail(Errc::Internal, "refinement failed to diagonalize a member");
    }
    return p;
}

// --- similarity ------------------------------------------------------------------------

bool similar(const Matrix& a, const Matrix& b) {
    if (!a.is_square() || !b.is_square()) fail(Errc::ShapeMismatch, "similarity needs square matrices");
    if (a.rows() != b.rows() || !same_field(a.field(), b.field()))
        fail(Errc::ShapeMismatch, "orders or fields differ");
    return snf_invariant_factors(a).chain == snf_invariant_factors(b).chain;
}

bool similar(const NOperator& a, const NOperator& b) {
    if (a.arity() != b.arity()) fail(Errc::ShapeMismatch, "arities differ");
    for (size_t i = 0; i < a.arity(); ++i)
        if (!similar(a.part(i), b.part(i))) return false;
    return true;
}

} // namespace nlalg
