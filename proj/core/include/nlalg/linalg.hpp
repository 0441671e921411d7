#pragma once

#include <optional>

#include "nlalg/matrix.hpp"

namespace nlalg {

/// Componentwise tuples over an n-field. Per-component shapes may differ.
struct NVector {
    std::vector<Vec> parts;
    size_t arity() const { return parts.size(); }
    bool operator==(const NVector& o) const { return parts == o.parts; }
};

struct NMatrix {
    std::vector<Matrix> parts;
    size_t arity() const { return parts.size(); }
    bool operator==(const NMatrix& o) const { return parts == o.parts; }
};

NVector napply(const NMatrix& a, const NVector& v);
NMatrix nmul(const NMatrix& a, const NMatrix& b);
NMatrix nadd(const NMatrix& a, const NMatrix& b);
NMatrix nsub(const NMatrix& a, const NMatrix& b);
NMatrix ntranspose(const NMatrix& a);
NMatrix ninverse(const NMatrix& a);
std::vector<FieldElement> ndet(const NMatrix& a);

/// One component subspace held as a canonical reduced column-echelon basis,
/// so equality of subspaces is equality of basis matrices.
class Subspace {
public:
    Subspace() = default;
    Subspace(Field f, int ambient); // zero subspace
    static Subspace span_cols(const Matrix& m);
    static Subspace span_rows(const Field& f, const std::vector<Vec>& vectors, int ambient);
    static Subspace full(const Field& f, int ambient);

    const Field& field() const { return field_; }
    int ambient() const { return ambient_; }
    int dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& w) const;
    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    Field field_;
    int ambient_ = 0;
    Matrix basis_; // ambient x dim, dim may be 0
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);

struct NSubspace {
    std::vector<Subspace> parts;
    size_t arity() const { return parts.size(); }
    bool operator==(const NSubspace& o) const { return parts == o.parts; }
};

enum class IndependenceKind { Independent, Dependent, SemiDependent };

struct IndependenceVerdict {
    IndependenceKind kind;
    std::vector<bool> component_independent;
    // For each dependent component: nonzero coefficients combining to zero.
    std::vector<std::optional<Vec>> witness;
};

// Componentwise test. Independent iff every component set is independent;
// SemiDependent when the verdicts differ across components.
IndependenceVerdict linear_independence(const std::vector<NVector>& vectors);

// Ordered bases are invertible matrices whose columns are the basis vectors.
bool is_basis(const Matrix& b);
void require_basis(const NMatrix& b);

NVector coordinates(const NVector& alpha, const NMatrix& basis);
NVector from_coordinates(const NVector& coords, const NMatrix& basis);

// P with [alpha]_B = P [alpha]_C; columns of P are the C-vectors in
// B-coordinates.
NMatrix change_of_basis(const NMatrix& b, const NMatrix& c);

/// An n-linear transformation in coordinates: per component a matrix from
/// B_in-coordinates to B_out-coordinates. Transformations only exist between
/// spaces over the same n-field.
class LinearMap {
public:
    LinearMap(NMatrix a, NMatrix basis_in, NMatrix basis_out);
    static LinearMap in_standard_basis(NMatrix a);

    const NMatrix& matrix() const { return a_; }
    const NMatrix& basis_in() const { return in_; }
    const NMatrix& basis_out() const { return out_; }

    NVector apply(const NVector& alpha) const;
    LinearMap compose(const LinearMap& inner) const; // (*this)(inner(x))
    std::vector<std::pair<int, int>> rank_nullity() const;
    bool invertible() const;
    LinearMap inverse() const;

private:
    NMatrix a_, in_, out_;
};

// Annihilator: functionals (coordinate rows, stored columnwise) vanishing on
// the subspace. dim W + dim W0 = dim V.
Subspace annihilator(const Subspace& s);
NSubspace annihilator(const NSubspace& s);

// Transpose transformation on functionals; matrix is the transpose.
NMatrix transpose_transformation(const NMatrix& t);

// g = sum c_i f_i if possible. Functionals are coordinate rows.
std::optional<Vec> functional_dependence(const Vec& g, const std::vector<Vec>& fs);

// Matrix of the restriction of a to the invariant subspace w (in w's basis);
// NotInvariant if a(w) is not contained in w.
Matrix restriction(const Matrix& a, const Subspace& w);
bool is_invariant(const Matrix& a, const Subspace& w);

} // namespace nlalg
