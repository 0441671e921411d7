#include "nlalg/linalg.hpp"

namespace nlalg {

namespace {

template <typename F>
NMatrix lift2(const NMatrix& a, const NMatrix& b, F&& op) {
    if (a.arity() != b.arity()) fail(Errc::ShapeMismatch, "n-matrix arities differ");
    NMatrix r;
    for (size_t i = 0; i < a.arity(); ++i) r.parts.push_back(op(a.parts[i], b.parts[i]));
    return r;
}

} // namespace

NVector napply(const NMatrix& a, const NVector& v) {
    if (a.arity() != v.arity()) fail(Errc::ShapeMismatch, "n-matrix/n-vector arities differ");
    NVector r;
    for (size_t i = 0; i < a.arity(); ++i) r.parts.push_back(a.parts[i].apply(v.parts[i]));
    return r;
}

NMatrix nmul(const NMatrix& a, const NMatrix& b) {
    return lift2(a, b, [](const Matrix& x, const Matrix& y) { return x * y; });
}
NMatrix nadd(const NMatrix& a, const NMatrix& b) {
    return lift2(a, b, [](const Matrix& x, const Matrix& y) { return x + y; });
}
NMatrix nsub(const NMatrix& a, const NMatrix& b) {
    return lift2(a, b, [](const Matrix& x, const Matrix& y) { return x - y; });
}

NMatrix ntranspose(const NMatrix& a) {
    NMatrix r;
    for (const auto& m : a.parts) r.parts.push_back(m.transpose());
    return r;
}

NMatrix ninverse(const NMatrix& a) {
    NMatrix r;
    for (const auto& m : a.parts) r.parts.push_back(inverse(m));
    return r;
}

std::vector<FieldElement> ndet(const NMatrix& a) {
    std::vector<FieldElement> r;
    for (const auto& m : a.parts) r.push_back(det_bareiss(m));
    return r;
}

// --- Subspace ----------------------------------------------------------------

Subspace::Subspace(Field f, int ambient)
    : field_(f), ambient_(ambient), basis_(Matrix(f, ambient, 0)) {}

Subspace Subspace::span_cols(const Matrix& m) {
    Subspace s;
    s.field_ = m.field();
    s.ambient_ = m.rows();
    s.basis_ = column_echelon(m);
    return s;
}

Subspace Subspace::span_rows(const Field& f, const std::vector<Vec>& vectors, int ambient) {
    if (vectors.empty()) return Subspace(f, ambient);
    Matrix m = Matrix::from_rows(f, vectors).transpose();
    if (m.rows() != ambient) fail(Errc::AmbientMismatch, "vector length differs from ambient");
    return span_cols(m);
}

Subspace Subspace::full(const Field& f, int ambient) {
    return span_cols(Matrix::identity(f, ambient));
}

bool Subspace::contains(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient_) fail(Errc::AmbientMismatch, "ambient differs");
    if (vec_is_zero(v)) return true;
    if (dim() == 0) return false;
    return try_solve(basis_, v).has_value();
}

bool Subspace::contains(const Subspace& w) const {
    for (int j = 0; j < w.dim(); ++j)
        if (!contains(w.basis_.col(j))) return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && dim() == o.dim() && basis_ == o.basis_;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) fail(Errc::AmbientMismatch, "ambient spaces differ");
    if (a.dim() == 0) return b;
    if (b.dim() == 0) return a;
    return Subspace::span_cols(a.basis().hstack(b.basis()));
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) fail(Errc::AmbientMismatch, "ambient spaces differ");
    if (a.dim() == 0 || b.dim() == 0) return Subspace(a.field(), a.ambient());
    // null space of [A | B] gives A x + B y = 0; intersection vectors are A x
    Matrix ns = nullspace(a.basis().hstack(b.basis()));
    if (ns.cols() == 0) return Subspace(a.field(), a.ambient());
    Matrix gen(a.field(), a.ambient(), ns.cols());
    for (int k = 0; k < ns.cols(); ++k) {
        Vec full = ns.col(k);
        Vec x(full.begin(), full.begin() + a.dim());
        gen.set_col(k, a.basis().apply(x));
    }
    return Subspace::span_cols(gen);
}

// --- independence / bases ------------------------------------------------------

IndependenceVerdict linear_independence(const std::vector<NVector>& vectors) {
    IndependenceVerdict v;
    if (vectors.empty()) { // the empty n-set is independent
        v.kind = IndependenceKind::Independent;
        return v;
    }
    size_t arity = vectors[0].arity();
    size_t independent_count = 0;
    for (size_t c = 0; c < arity; ++c) {
        std::vector<Vec> cols;
        for (const auto& nv : vectors) {
            if (nv.arity() != arity) fail(Errc::ShapeMismatch, "n-vector arities differ");
            cols.push_back(nv.parts[c]);
        }
        const Field& f = cols[0].at(0).field();
        Matrix m = Matrix::from_cols(f, cols);
        bool indep = rref(m).rank == m.cols();
        v.component_independent.push_back(indep);
        if (indep) {
            ++independent_count;
            v.witness.emplace_back(std::nullopt);
        } else {
            Matrix ns = nullspace(m);
            v.witness.emplace_back(ns.col(0));
        }
    }
    v.kind = independent_count == arity ? IndependenceKind::Independent
             : independent_count == 0   ? IndependenceKind::Dependent
                                        : IndependenceKind::SemiDependent;
    return v;
}

bool is_basis(const Matrix& b) { return b.is_square() && is_invertible(b); }

void require_basis(const NMatrix& b) {
    for (const auto& m : b.parts)
        if (!is_basis(m)) fail(Errc::NotABasis, "columns do not form a basis");
}

NVector coordinates(const NVector& alpha, const NMatrix& basis) {
    require_basis(basis);
    NVector r;
    for (size_t i = 0; i < basis.arity(); ++i) {
        auto x = try_solve(basis.parts[i], alpha.parts[i]);
        if (!x) fail(Errc::Internal, "basis solve failed");
        r.parts.push_back(*x);
    }
    return r;
}

NVector from_coordinates(const NVector& coords, const NMatrix& basis) {
    return napply(basis, coords);
}

NMatrix change_of_basis(const NMatrix& b, const NMatrix& c) {
    require_basis(b);
    require_basis(c);
    NMatrix r;
    for (size_t i = 0; i < b.arity(); ++i) r.parts.push_back(inverse(b.parts[i]) * c.parts[i]);
    return r;
}

// --- LinearMap -----------------------------------------------------------------

LinearMap::LinearMap(NMatrix a, NMatrix basis_in, NMatrix basis_out)
    : a_(std::move(a)), in_(std::move(basis_in)), out_(std::move(basis_out)) {
    if (a_.arity() != in_.arity() || a_.arity() != out_.arity())
        fail(Errc::ShapeMismatch, "arities differ");
    require_basis(in_);
    require_basis(out_);
    for (size_t i = 0; i < a_.arity(); ++i) {
        if (!same_field(a_.parts[i].field(), in_.parts[i].field()) ||
            !same_field(a_.parts[i].field(), out_.parts[i].field()))
            fail(Errc::FieldMismatch,
                 "transformations exist only between spaces over the same n-field");
        if (a_.parts[i].cols() != in_.parts[i].rows() || a_.parts[i].rows() != out_.parts[i].rows())
            fail(Errc::ShapeMismatch, "matrix shape does not match the bases");
    }
}

LinearMap LinearMap::in_standard_basis(NMatrix a) {
    NMatrix bin, bout;
    for (const auto& m : a.parts) {
        bin.parts.push_back(Matrix::identity(m.field(), m.cols()));
        bout.parts.push_back(Matrix::identity(m.field(), m.rows()));
    }
    return LinearMap(std::move(a), std::move(bin), std::move(bout));
}

NVector LinearMap::apply(const NVector& alpha) const {
    NVector coords = coordinates(alpha, in_);
    NVector mapped = napply(a_, coords);
    return from_coordinates(mapped, out_);
}

LinearMap LinearMap::compose(const LinearMap& inner) const {
    if (a_.arity() != inner.a_.arity()) fail(Errc::ShapeMismatch, "arities differ");
    for (size_t i = 0; i < a_.arity(); ++i) {
        if (!same_field(a_.parts[i].field(), inner.a_.parts[i].field()))
            fail(Errc::FieldMismatch, "composition requires one n-field");
        if (inner.out_.parts[i] != in_.parts[i])
            fail(Errc::ShapeMismatch, "inner codomain basis differs from outer domain basis");
    }
    return LinearMap(nmul(a_, inner.a_), inner.in_, out_);
}

std::vector<std::pair<int, int>> LinearMap::rank_nullity() const {
    std::vector<std::pair<int, int>> rn;
    for (const auto& m : a_.parts) {
        int r = rref(m).rank;
        rn.emplace_back(r, m.cols() - r);
    }
    return rn;
}

bool LinearMap::invertible() const {
    for (const auto& m : a_.parts)
        if (!is_invertible(m)) return false;
    return true;
}

LinearMap LinearMap::inverse() const { return LinearMap(ninverse(a_), out_, in_); }

// --- duals ----------------------------------------------------------------------

Subspace annihilator(const Subspace& s) {
    if (s.dim() == 0) return Subspace::full(s.field(), s.ambient());
    // functionals f with f(v) = 0 for v in S: null space of basis^T
    return Subspace::span_cols(nullspace(s.basis().transpose()));
}

NSubspace annihilator(const NSubspace& s) {
    NSubspace r;
    for (const auto& p : s.parts) r.parts.push_back(annihilator(p));
    return r;
}

NMatrix transpose_transformation(const NMatrix& t) { return ntranspose(t); }

std::optional<Vec> functional_dependence(const Vec& g, const std::vector<Vec>& fs) {
    if (fs.empty()) return vec_is_zero(g) ? std::make_optional(Vec{}) : std::nullopt;
    const Field& f = g.at(0).field();
    return try_solve(Matrix::from_cols(f, fs), g);
}

// --- restriction ------------------------------------------------------------------

bool is_invariant(const Matrix& a, const Subspace& w) {
    for (int j = 0; j < w.dim(); ++j)
        if (!w.contains(a.apply(w.basis().col(j)))) return false;
    return true;
}

Matrix restriction(const Matrix& a, const Subspace& w) {
    if (w.dim() == 0) fail(Errc::ShapeMismatch, "restriction to the zero subspace");
    Matrix r(a.field(), w.dim(), w.dim());
    for (int j = 0; j < w.dim(); ++j) {
        Vec img = a.apply(w.basis().col(j));
        auto x = try_solve(w.basis(), img);
        if (!x) fail(Errc::NotInvariant, "subspace is not invariant under the operator");
        r.set_col(j, *x);
    }
    return r;
}

} // namespace nlalg
