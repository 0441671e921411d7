#include "nlalg/forms.hpp"

namespace nlalg {

namespace {

void require_ordered(const Field& f) {
    if (!f->is_ordered())
        fail(Errc::UnorderedField,
             f->name() + " is not ordered; the positivity axiom cannot hold");
}

Matrix outer_scaled(const Vec& u, const Vec& v, const FieldElement& c) {
    const Field& F = c.field();
    Matrix m(F, static_cast<int>(u.size()), static_cast<int>(v.size()));
    for (size_t i = 0; i < u.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = u[i] * v[j] * c;
    return m;
}

} // namespace

InnerProductSpace::InnerProductSpace(const Field& f, int dim)
    : g_(Matrix::identity(f, dim)) {
    require_ordered(f);
}

InnerProductSpace::InnerProductSpace(Matrix gram) : g_(std::move(gram)) {
    require_ordered(g_.field());
    if (!g_.is_symmetric()) fail(Errc::NotSymmetric, "Gram matrix must be symmetric");
    // positive definiteness: every leading principal minor is > 0
    for (int k = 1; k <= g_.rows(); ++k) {
        Matrix lead(g_.field(), k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) lead.at(i, j) = g_.at(i, j);
        if (det_bareiss(lead).sign() <= 0)
            fail(Errc::NotSymmetric, "Gram matrix is not positive definite (minor " +
                                         std::to_string(k) + ")");
    }
}

FieldElement InnerProductSpace::inner(const Vec& a, const Vec& b) const {
    if (static_cast<int>(a.size()) != dim() || static_cast<int>(b.size()) != dim())
        fail(Errc::ShapeMismatch, "vector lengths differ from the space dimension");
    Vec gb = g_.apply(b);
    FieldElement acc = FieldElement::zero(field());
    for (size_t i = 0; i < a.size(); ++i) acc = acc + a[i] * gb[i];
    return acc;
}

FieldElement InnerProductSpace::norm_sq(const Vec& a) const { return inner(a, a); }

std::vector<Vec> gram_schmidt(const InnerProductSpace& sp, const std::vector<Vec>& vectors) {
    if (vectors.empty()) return {};
    Matrix m = Matrix::from_cols(sp.field(), vectors);
    if (rref(m).rank != static_cast<int>(vectors.size()))
        fail(Errc::DependentInput, "Gram-Schmidt input is linearly dependent");
    std::vector<Vec> out;
    for (const auto& beta : vectors) {
        Vec alpha = beta;
        for (const auto& prev : out) {
            FieldElement coeff = sp.inner(beta, prev) / sp.norm_sq(prev);
            alpha = vec_sub(alpha, vec_scale(coeff, prev));
        }
        out.push_back(alpha);
    }
    return out;
}

BestApprox best_approx(const InnerProductSpace& sp, const Vec& beta, const Subspace& w) {
    const Field& F = sp.field();
    int n = sp.dim();
    if (w.ambient() != n) fail(Errc::AmbientMismatch, "subspace ambient differs");
    BestApprox out{vec_zero(F, n), Matrix(F, n, n)};
    if (w.dim() == 0) return out;
    std::vector<Vec> basis;
    for (int j = 0; j < w.dim(); ++j) basis.push_back(w.basis().col(j));
    std::vector<Vec> ortho = gram_schmidt(sp, basis);
    for (const auto& a : ortho) {
        FieldElement weight = sp.inner(beta, a) / sp.norm_sq(a);
        out.alpha = vec_add(out.alpha, vec_scale(weight, a));
        // E += a (G a)^T / ||a||^2
        out.projection = out.projection +
                         outer_scaled(a, sp.gram().apply(a), sp.norm_sq(a).inverse());
    }
    return out;
}

Subspace orth_complement(const InnerProductSpace& sp, const Subspace& s) {
    if (s.dim() == 0) return Subspace::full(sp.field(), sp.dim());
    // vectors v with basis^T G v = 0
    return Subspace::span_cols(nullspace(s.basis().transpose() * sp.gram()));
}

Matrix adjoint(const InnerProductSpace& sp, const Matrix& t) {
    if (t.rows() != sp.dim() || !t.is_square())
        fail(Errc::ShapeMismatch, "operator does not act on the space");
    return inverse(sp.gram()) * t.transpose() * sp.gram();
}

bool is_self_adjoint(const InnerProductSpace& sp, const Matrix& t) {
    return adjoint(sp, t) == t;
}

bool is_normal(const InnerProductSpace& sp, const Matrix& t) {
    Matrix ts = adjoint(sp, t);
    return t * ts == ts * t;
}

bool is_orthogonal_matrix(const Matrix& t) {
    return t.is_square() && t.transpose() * t == Matrix::identity(t.field(), t.rows());
}

SpectralResolution spectral_resolution(const InnerProductSpace& sp, const Matrix& t) {
    const Field& F = sp.field();
    bool self_adjoint = is_self_adjoint(sp, t);
    if (!self_adjoint && !is_normal(sp, t))
        fail(Errc::NotSelfAdjoint, "operator is neither self-adjoint nor normal");

    Poly m = minpoly(t);
    auto roots = roots_in_field(m);
    Poly prod = Poly::one(F);
    for (const auto& [c, mult] : roots) prod = prod * Poly::linear(c).pow(mult);
    if (prod != m)
        fail(Errc::SplitFailure, "characteristic polynomial does not split over " + F->name() +
                                     ": " + poly_exact_div(m, prod).str());
    for (const auto& [c, mult] : roots)
        if (mult > 1)
            fail(Errc::NotSelfAdjoint,
                 "minimal polynomial has a repeated root; the operator cannot be self-adjoint");

    SpectralResolution out;
    for (const auto& [c, mult] : roots) out.values.push_back(c);

    // Lagrange interpolation on the spectrum: e_j(c_k) = delta_jk
    for (size_t j = 0; j < out.values.size(); ++j) {
        Poly e = Poly::one(F);
        FieldElement denom = FieldElement::one(F);
        for (size_t k = 0; k < out.values.size(); ++k) {
            if (k == j) continue;
            e = e * Poly::linear(out.values[k]);
            denom = denom * (out.values[j] - out.values[k]);
        }
        e = e.scaled(denom.inverse());
        out.lagrange.push_back(e);
        out.projections.push_back(eval_poly_at_matrix(e, t));
    }

    // resolution identities; for the normal-but-not-self-adjoint path these
    // also certify that the eigenspaces are orthogonal
    int n = t.rows();
    Matrix esum(F, n, n), reconstructed(F, n, n);
    for (size_t j = 0; j < out.projections.size(); ++j) {
        const Matrix& e = out.projections[j];
        if (e * e != e) fail(Errc::Internal, "spectral projection is not idempotent");
        if (!is_self_adjoint(sp, e))
            fail(Errc::NotSelfAdjoint, "eigenspaces are not orthogonal in this inner product");
        for (size_t k = j + 1; k < out.projections.size(); ++k)
            if (!(e * out.projections[k]).is_zero())
                fail(Errc::Internal, "spectral projections do not annihilate each other");
        esum = esum + e;
        reconstructed = reconstructed + e.scaled(out.values[j]);
    }
    if (!esum.is_identity()) fail(Errc::Internal, "spectral projections do not sum to I");
    if (reconstructed != t) fail(Errc::Internal, "spectral resolution does not reconstruct T");
    return out;
}

Matrix spectral_function(const SpectralResolution& r,
                         const std::vector<std::pair<FieldElement, FieldElement>>& value_map) {
    if (r.projections.empty()) fail(Errc::ShapeMismatch, "empty resolution");
    const Field& F = r.values[0].field();
    int n = r.projections[0].rows();
    Matrix out(F, n, n);
    for (size_t j = 0; j < r.values.size(); ++j) {
        const FieldElement* image = nullptr;
        for (const auto& [from, to] : value_map)
            if (from == r.values[j]) { image = &to; break; }
        if (!image)
            fail(Errc::ShapeMismatch,
                 "value map does not cover the spectrum point " + r.values[j].str());
        out = out + r.projections[j].scaled(*image);
    }
    return out;
}

// --- bilinear forms ------------------------------------------------------------

BilinearForm::BilinearForm(Matrix m) : m_(std::move(m)) {
    if (!m_.is_square()) fail(Errc::ShapeMismatch, "a bilinear form matrix is square");
}

FieldElement BilinearForm::evaluate(const Vec& a, const Vec& b) const {
    if (static_cast<int>(a.size()) != m_.rows() || static_cast<int>(b.size()) != m_.rows())
        fail(Errc::ShapeMismatch, "vector lengths differ from the form");
    Vec mb = m_.apply(b);
    FieldElement acc = FieldElement::zero(m_.field());
    for (size_t i = 0; i < a.size(); ++i) acc = acc + a[i] * mb[i];
    return acc;
}

int BilinearForm::rank() const { return rref(m_).rank; }

bool BilinearForm::nondegenerate() const { return !det_bareiss(m_).is_zero(); }

BilinearForm BilinearForm::in_basis(const Matrix& p) const {
    if (!is_basis(p)) fail(Errc::NotABasis, "change of basis needs an invertible matrix");
    return BilinearForm(p.transpose() * m_ * p);
}

namespace {

// one congruence step: column operations mirrored on rows
SymmetricDiagonalization diagonalize_rec(const Matrix& m) {
    const Field& F = m.field();
    int n = m.rows();
    SymmetricDiagonalization out{Matrix::identity(F, n), m};
    if (m.is_zero() || n == 0) return out;

    // a vector with q(alpha) != 0: a diagonal entry, else e_i + e_j via the
    // polarization identity (2 M_ij != 0 needs characteristic != 2)
    Vec alpha = vec_zero(F, n);
    bool found = false;
    for (int i = 0; i < n && !found; ++i)
        if (!m.at(i, i).is_zero()) {
            alpha[i] = FieldElement::one(F);
            found = true;
        }
    if (!found) {
        for (int i = 0; i < n && !found; ++i)
            for (int j = i + 1; j < n && !found; ++j)
                if (!m.at(i, j).is_zero()) {
                    alpha[i] = FieldElement::one(F);
                    alpha[j] = FieldElement::one(F);
                    found = true;
                }
    }
    if (!found) return out; // fully zero handled above; defensive

    // W-perp relative to the form: f(alpha, v) = 0
    Matrix row(F, 1, n);
    Vec malpha = m.apply(alpha);
    for (int j = 0; j < n; ++j) row.at(0, j) = malpha[j];
    Matrix rest = nullspace(row); // n x (n-1)
    Matrix p(F, n, n);
    p.set_col(0, alpha);
    for (int j = 0; j < rest.cols(); ++j) p.set_col(j + 1, rest.col(j));
    Matrix mm = p.transpose() * m * p; // block diag [q(alpha)] + M'

    if (n == 1) {
        out.p = p;
        out.d = mm;
        return out;
    }
    Matrix sub(F, n - 1, n - 1);
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) sub.at(i - 1, j - 1) = mm.at(i, j);
    SymmetricDiagonalization inner = diagonalize_rec(sub);
    Matrix lift = Matrix::identity(F, n);
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) lift.at(i, j) = inner.p.at(i - 1, j - 1);
    out.p = p * lift;
    out.d = out.p.transpose() * m * out.p;
    return out;
}

} // namespace

SymmetricDiagonalization symmetric_diagonalize(const BilinearForm& f) {
    if (!f.symmetric()) fail(Errc::NotSymmetric, "the form is not symmetric");
    if (f.matrix().field()->characteristic() == 2)
        fail(Errc::CharacteristicTwo, "polarization needs 2 to be invertible");
    SymmetricDiagonalization out = diagonalize_rec(f.matrix());
    for (int i = 0; i < out.d.rows(); ++i)
        for (int j = 0; j < out.d.cols(); ++j)
            if (i != j && !out.d.at(i, j).is_zero())
                fail(Errc::Internal, "congruence did not reach diagonal form");
    return out;
}

Signature signature(const Matrix& diagonal) {
    Signature s;
    for (int i = 0; i < diagonal.rows(); ++i) {
        int sg = diagonal.at(i, i).sign();
        if (sg > 0) ++s.positive;
        else if (sg < 0) ++s.negative;
        else ++s.zero;
    }
    return s;
}

} // namespace nlalg
