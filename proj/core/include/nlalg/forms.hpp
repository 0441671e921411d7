#pragma once

#include "nlalg/operators.hpp"

namespace nlalg {

/// One component of an inner product space: an ordered field (Q or
/// Q(sqrt d), d > 0) with a symmetric positive definite Gram matrix.
/// Norms are handled as squared norms throughout; nothing is normalized.
class InnerProductSpace {
public:
    InnerProductSpace(const Field& f, int dim); // standard inner product, G = I
    explicit InnerProductSpace(Matrix gram);    // validates the axioms

    const Field& field() const { return g_.field(); }
    int dim() const { return g_.rows(); }
    const Matrix& gram() const { return g_; }

    FieldElement inner(const Vec& a, const Vec& b) const;
    FieldElement norm_sq(const Vec& a) const;

private:
    Matrix g_;
};

// Unnormalized Gram-Schmidt; prefix spans are preserved.
std::vector<Vec> gram_schmidt(const InnerProductSpace& sp, const std::vector<Vec>& vectors);

struct BestApprox {
    Vec alpha;         // the unique closest vector in W
    Matrix projection; // E with E^2 = E, range W, null space W-perp
};
BestApprox best_approx(const InnerProductSpace& sp, const Vec& beta, const Subspace& w);
Subspace orth_complement(const InnerProductSpace& sp, const Subspace& s);

// [T*] = G^-1 [T]^T G, the unique operator with (T a | b) = (a | T* b).
Matrix adjoint(const InnerProductSpace& sp, const Matrix& t);
bool is_self_adjoint(const InnerProductSpace& sp, const Matrix& t);
bool is_normal(const InnerProductSpace& sp, const Matrix& t);
bool is_orthogonal_matrix(const Matrix& t); // A^T A = I

struct SpectralResolution {
    std::vector<FieldElement> values; // distinct, canonical order
    std::vector<Matrix> projections;  // orthogonal, sum to I
    std::vector<Poly> lagrange;       // e_j with E_j = e_j(T)
};

// T = sum c_j E_j for a self-adjoint (or verified-normal) operator whose
// characteristic polynomial splits; SplitFailure otherwise.
SpectralResolution spectral_resolution(const InnerProductSpace& sp, const Matrix& t);

// sum f(c_j) E_j for an explicit value map on the spectrum.
Matrix spectral_function(const SpectralResolution& r,
                         const std::vector<std::pair<FieldElement, FieldElement>>& value_map);

/// A bilinear form via its matrix in the standard basis: f(a, b) = a^T M b.
class BilinearForm {
public:
    explicit BilinearForm(Matrix m);
    const Matrix& matrix() const { return m_; }
    bool symmetric() const { return m_.is_symmetric(); }
    FieldElement evaluate(const Vec& a, const Vec& b) const;
    FieldElement quadratic(const Vec& a) const { return evaluate(a, a); }
    int rank() const;
    bool nondegenerate() const;
    BilinearForm in_basis(const Matrix& p) const; // matrix becomes P^T M P

private:
    Matrix m_;
};

struct SymmetricDiagonalization {
    Matrix p; // invertible
    Matrix d; // P^T M P = D diagonal
};

// Constructive congruence diagonalization; characteristic 2 is rejected, odd
// characteristic is accepted (2 invertible is all the construction needs).
SymmetricDiagonalization symmetric_diagonalize(const BilinearForm& f);

struct Signature {
    int positive = 0, negative = 0, zero = 0;
};
// Sylvester signature counts of a congruence-diagonalized form; ordered
// fields only.
Signature signature(const Matrix& diagonal);

} // namespace nlalg
