#pragma once

#include <optional>
#include <vector>

#include "nlalg/field.hpp"

namespace nlalg {

using Vec = std::vector<FieldElement>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const FieldElement& c, const Vec& v);
bool vec_is_zero(const Vec& v);
Vec vec_zero(const Field& f, int n);

/// Dense exact matrix over one field component.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, int rows, int cols); // zero-filled
    static Matrix identity(const Field& f, int n);
    static Matrix from_rows(const Field& f, const std::vector<Vec>& rows);
    static Matrix from_cols(const Field& f, const std::vector<Vec>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return field_; }

    FieldElement& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const FieldElement& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const FieldElement& c) const;
    Vec apply(const Vec& v) const; // matrix * column
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const;
    FieldElement trace() const;
    bool is_zero() const;
    bool is_identity() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    Vec row(int i) const;
    Vec col(int j) const;
    void set_col(int j, const Vec& v);
    Matrix hstack(const Matrix& o) const;
    Matrix columns(const std::vector<int>& idx) const;

private:
    Field field_;
    int rows_ = 0, cols_ = 0;
    std::vector<FieldElement> e_;
};

// Fraction-free Bareiss determinant; works over every supported field.
FieldElement det_bareiss(const Matrix& a);

struct RrefResult {
    Matrix r;
    int rank = 0;
    std::vector<int> pivot_cols;
};

// Reduced row echelon form. Deterministic tie-breaking: leftmost nonzero
// pivot, first suitable row, pivot normalized to 1.
RrefResult rref(const Matrix& a);

// Columns form a basis of {v : Av = 0}; 0 columns for trivial null space.
Matrix nullspace(const Matrix& a);

Matrix inverse(const Matrix& a); // SingularMatrix when det = 0
bool is_invertible(const Matrix& a);

// One solution of Ax = b, or nullopt when inconsistent.
std::optional<Vec> try_solve(const Matrix& a, const Vec& b);

// Canonical reduced column-echelon form with zero columns dropped; two
// matrices span the same column space iff their forms are equal.
Matrix column_echelon(const Matrix& a);

} // namespace nlalg
