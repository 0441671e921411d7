#include "nlalg/matrix.hpp"

#include <algorithm>

namespace nlalg {

Vec vec_zero(const Field& f, int n) { return Vec(n, FieldElement::zero(f)); }

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) fail(Errc::ShapeMismatch, "vector lengths differ");
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) fail(Errc::ShapeMismatch, "vector lengths differ");
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
    return r;
}

Vec vec_scale(const FieldElement& c, const Vec& v) {
    Vec r(v);
    for (auto& x : r) x = c * x;
    return r;
}

bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const FieldElement& x) { return x.is_zero(); });
}

Matrix::Matrix(Field f, int rows, int cols)
    : field_(std::move(f)), rows_(rows), cols_(cols),
      e_(static_cast<size_t>(rows) * cols, FieldElement::zero(field_)) {
    // cols == 0 is allowed internally: it is the basis matrix of the zero subspace
    if (rows <= 0 || cols < 0) fail(Errc::ShapeMismatch, "matrix dimensions must be positive");
}

Matrix Matrix::identity(const Field& f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = FieldElement::one(f);
    return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<Vec>& rows) {
    if (rows.empty() || rows[0].empty()) fail(Errc::ShapeMismatch, "empty matrix literal");
    Matrix m(f, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows_; ++i) {
        if (rows[i].size() != static_cast<size_t>(m.cols_))
            fail(Errc::ShapeMismatch, "ragged matrix literal");
        for (int j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_cols(const Field& f, const std::vector<Vec>& cols) {
    if (cols.empty() || cols[0].empty()) fail(Errc::ShapeMismatch, "empty matrix literal");
    Matrix m(f, static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols_; ++j) {
        if (cols[j].size() != static_cast<size_t>(m.rows_))
            fail(Errc::ShapeMismatch, "ragged matrix literal");
        for (int i = 0; i < m.rows_; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::ShapeMismatch, "matrix shapes differ");
    Matrix r(*this);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::ShapeMismatch, "matrix shapes differ");
    Matrix r(*this);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) fail(Errc::ShapeMismatch, "inner dimensions differ");
    Matrix r(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const FieldElement& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) = r.at(i, j) + aik * o.at(k, j);
        }
    return r;
}

Matrix Matrix::scaled(const FieldElement& c) const {
    Matrix r(*this);
    for (auto& x : r.e_) x = c * x;
    return r;
}

Vec Matrix::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) fail(Errc::ShapeMismatch, "vector length differs");
    Vec r = vec_zero(field_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[i] = r[i] + at(i, j) * v[j];
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

FieldElement Matrix::trace() const {
    if (!is_square()) fail(Errc::ShapeMismatch, "trace needs a square matrix");
    FieldElement t = FieldElement::zero(field_);
    for (int i = 0; i < rows_; ++i) t = t + at(i, i);
    return t;
}

bool Matrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const FieldElement& x) { return x.is_zero(); });
}

bool Matrix::is_identity() const {
    if (!is_square()) return false;
    return *this == identity(field_, rows_);
}

bool Matrix::is_symmetric() const { return is_square() && *this == transpose(); }

Vec Matrix::row(int i) const {
    Vec r;
    r.reserve(cols_);
    for (int j = 0; j < cols_; ++j) r.push_back(at(i, j));
    return r;
}

Vec Matrix::col(int j) const {
    Vec r;
    r.reserve(rows_);
    for (int i = 0; i < rows_; ++i) r.push_back(at(i, j));
    return r;
}

void Matrix::set_col(int j, const Vec& v) {
    for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Matrix Matrix::hstack(const Matrix& o) const {
    if (rows_ != o.rows_) fail(Errc::ShapeMismatch, "row counts differ");
    Matrix r(field_, rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

Matrix Matrix::columns(const std::vector<int>& idx) const {
    if (idx.empty()) fail(Errc::ShapeMismatch, "empty column selection");
    Matrix r(field_, rows_, static_cast<int>(idx.size()));
    for (size_t j = 0; j < idx.size(); ++j)
        for (int i = 0; i < rows_; ++i) r.at(i, static_cast<int>(j)) = at(i, idx[j]);
    return r;
}

FieldElement det_bareiss(const Matrix& a) {
    if (!a.is_square()) fail(Errc::ShapeMismatch, "determinant needs a square matrix");
    const Field& F = a.field();
    int n = a.rows();
    Matrix m(a);
    bool negate = false;
    FieldElement prev = FieldElement::one(F);
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (!m.at(r, k).is_zero()) { pivot = r; break; }
            if (pivot < 0) return FieldElement::zero(F);
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            m.at(i, k) = FieldElement::zero(F);
        }
        prev = m.at(k, k);
    }
    FieldElement d = m.at(n - 1, n - 1);
    return negate ? -d : d;
}

RrefResult rref(const Matrix& a) {
    RrefResult out{a, 0, {}};
    Matrix& m = out.r;
    int lead = 0;
    for (int col = 0; col < m.cols() && lead < m.rows(); ++col) {
        int pivot = -1;
        for (int r = lead; r < m.rows(); ++r)
            if (!m.at(r, col).is_zero()) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != lead)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(lead, j), m.at(pivot, j));
        FieldElement inv = m.at(lead, col).inverse();
        for (int j = 0; j < m.cols(); ++j) m.at(lead, j) = m.at(lead, j) * inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == lead || m.at(r, col).is_zero()) continue;
            FieldElement factor = m.at(r, col);
            for (int j = 0; j < m.cols(); ++j)
                m.at(r, j) = m.at(r, j) - factor * m.at(lead, j);
        }
        out.pivot_cols.push_back(col);
        ++lead;
    }
    out.rank = lead;
    return out;
}

Matrix nullspace(const Matrix& a) {
    const Field& F = a.field();
    RrefResult rr = rref(a);
    std::vector<int> free_cols;
    {
        size_t p = 0;
        for (int j = 0; j < a.cols(); ++j) {
            if (p < rr.pivot_cols.size() && rr.pivot_cols[p] == j) { ++p; continue; }
            free_cols.push_back(j);
        }
    }
    Matrix basis(F, a.cols(), static_cast<int>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        basis.at(fc, static_cast<int>(k)) = FieldElement::one(F);
        for (size_t p = 0; p < rr.pivot_cols.size(); ++p)
            basis.at(rr.pivot_cols[p], static_cast<int>(k)) = -rr.r.at(static_cast<int>(p), fc);
    }
    return basis;
}

bool is_invertible(const Matrix& a) {
    return a.is_square() && !det_bareiss(a).is_zero();
}

Matrix inverse(const Matrix& a) {
    if (!a.is_square()) fail(Errc::ShapeMismatch, "inverse needs a square matrix");
    const Field& F = a.field();
    int n = a.rows();
    Matrix aug = a.hstack(Matrix::identity(F, n));
    RrefResult rr = rref(aug);
    for (int i = 0; i < n; ++i)
        if (rr.r.at(i, i).is_zero()) fail(Errc::SingularMatrix, "matrix is singular");
    Matrix inv(F, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = rr.r.at(i, n + j);
    return inv;
}

std::optional<Vec> try_solve(const Matrix& a, const Vec& b) {
    if (static_cast<int>(b.size()) != a.rows()) fail(Errc::ShapeMismatch, "rhs length differs");
    const Field& F = a.field();
    Matrix rhs(F, a.rows(), 1);
    for (int i = 0; i < a.rows(); ++i) rhs.at(i, 0) = b[i];
    RrefResult rr = rref(a.hstack(rhs));
    // inconsistent iff a pivot lands in the rhs column
    for (int i = 0; i < a.rows(); ++i) {
        bool all_zero = true;
        for (int j = 0; j < a.cols(); ++j)
            if (!rr.r.at(i, j).is_zero()) { all_zero = false; break; }
        if (all_zero && !rr.r.at(i, a.cols()).is_zero()) return std::nullopt;
    }
    Vec x = vec_zero(F, a.cols());
    for (size_t p = 0; p < rr.pivot_cols.size(); ++p)
        if (rr.pivot_cols[p] < a.cols())
            x[rr.pivot_cols[p]] = rr.r.at(static_cast<int>(p), a.cols());
    return x;
}

Matrix column_echelon(const Matrix& a) {
    if (a.cols() == 0) return a;
    RrefResult rr = rref(a.transpose());
    Matrix b(a.field(), a.rows(), rr.rank);
    for (int k = 0; k < rr.rank; ++k)
        for (int i = 0; i < a.rows(); ++i) b.at(i, k) = rr.r.at(k, i);
    return b;
}

} // namespace nlalg
