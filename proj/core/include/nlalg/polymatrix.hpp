#pragma once

#include "nlalg/matrix.hpp"
#include "nlalg/poly.hpp"

namespace nlalg {

/// Dense matrix over F[x]; the workhorse behind det(xI - A) and the Smith
/// normal form route to invariant factors.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(Field f, int rows, int cols);
    static PolyMatrix identity(const Field& f, int n);
    static PolyMatrix x_identity_minus(const Matrix& a); // xI - A
    static PolyMatrix from_scalar(const Matrix& a);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return field_; }
    Poly& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const Poly& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    PolyMatrix operator*(const PolyMatrix& o) const;
    bool operator==(const PolyMatrix& o) const;
    bool is_diagonal() const;

private:
    Field field_;
    int rows_ = 0, cols_ = 0;
    std::vector<Poly> e_;
};

// Fraction-free Bareiss over F[x]; divisions are exact by Sylvester's
// identity.
Poly poly_det_bareiss(const PolyMatrix& m);

struct SnfResult {
    PolyMatrix d;              // U * input * V = d, diagonal
    PolyMatrix u, v;           // unimodular (constant nonzero determinant)
    std::vector<Poly> diagonal; // monic, d_1 | d_2 | ... (units included)
};

SnfResult smith_normal_form(const PolyMatrix& m);

} // namespace nlalg
