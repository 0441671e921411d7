#include "nlalg/polymatrix.hpp"

namespace nlalg {

PolyMatrix::PolyMatrix(Field f, int rows, int cols)
    : field_(std::move(f)), rows_(rows), cols_(cols),
      e_(static_cast<size_t>(rows) * cols, Poly::zero(field_)) {
    if (rows <= 0 || cols <= 0) fail(Errc::ShapeMismatch, "matrix dimensions must be positive");
}

PolyMatrix PolyMatrix::identity(const Field& f, int n) {
    PolyMatrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Poly::one(f);
    return m;
}

PolyMatrix PolyMatrix::x_identity_minus(const Matrix& a) {
    if (!a.is_square()) fail(Errc::ShapeMismatch, "xI - A needs a square matrix");
    PolyMatrix m(a.field(), a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            Poly entry = Poly::constant(-a.at(i, j));
            if (i == j) entry = entry + Poly::x(a.field());
            m.at(i, j) = entry;
        }
    return m;
}

PolyMatrix PolyMatrix::from_scalar(const Matrix& a) {
    PolyMatrix m(a.field(), a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = Poly::constant(a.at(i, j));
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) fail(Errc::ShapeMismatch, "inner dimensions differ");
    PolyMatrix r(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
        }
    return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool PolyMatrix::is_diagonal() const {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (i != j && !at(i, j).is_zero()) return false;
    return true;
}

Poly poly_det_bareiss(const PolyMatrix& a) {
    if (a.rows() != a.cols()) fail(Errc::ShapeMismatch, "determinant needs a square matrix");
    const Field& F = a.field();
    int n = a.rows();
    PolyMatrix m(a);
    bool negate = false;
    Poly prev = Poly::one(F);
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (!m.at(r, k).is_zero()) { pivot = r; break; }
            if (pivot < 0) return Poly::zero(F);
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) =
                    poly_exact_div(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
            m.at(i, k) = Poly::zero(F);
        }
        prev = m.at(k, k);
    }
    Poly d = m.at(n - 1, n - 1);
    return negate ? -d : d;
}

namespace {

struct SnfWork {
    PolyMatrix m, u, v;

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
        for (int j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
    }
    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
        for (int i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
    }
    // row a -= q * row b
    void row_sub(int a, const Poly& q, int b) {
        for (int j = 0; j < m.cols(); ++j) m.at(a, j) = m.at(a, j) - q * m.at(b, j);
        for (int j = 0; j < u.cols(); ++j) u.at(a, j) = u.at(a, j) - q * u.at(b, j);
    }
    // col a -= q * col b
    void col_sub(int a, const Poly& q, int b) {
        for (int i = 0; i < m.rows(); ++i) m.at(i, a) = m.at(i, a) - q * m.at(i, b);
        for (int i = 0; i < v.rows(); ++i) v.at(i, a) = v.at(i, a) - q * v.at(i, b);
    }
    void row_add(int a, int b) { row_sub(a, -Poly::one(m.field()), b); }
    void scale_row(int a, const FieldElement& c) {
        for (int j = 0; j < m.cols(); ++j) m.at(a, j) = m.at(a, j).scaled(c);
        for (int j = 0; j < u.cols(); ++j) u.at(a, j) = u.at(a, j).scaled(c);
    }
};

} // namespace

SnfResult smith_normal_form(const PolyMatrix& input) {
    const Field& F = input.field();
    SnfWork w{input, PolyMatrix::identity(F, input.rows()), PolyMatrix::identity(F, input.cols())};
    int n = std::min(input.rows(), input.cols());

    for (int k = 0; k < n; ++k) {
        while (true) {
            // minimal-degree nonzero entry into the pivot slot
            int bi = -1, bj = -1;
            for (int i = k; i < w.m.rows(); ++i)
                for (int j = k; j < w.m.cols(); ++j) {
                    if (w.m.at(i, j).is_zero()) continue;
                    if (bi < 0 || w.m.at(i, j).degree() < w.m.at(bi, bj).degree()) {
                        bi = i;
                        bj = j;
                    }
                }
            if (bi < 0) break; // submatrix is zero
            w.swap_rows(k, bi);
            w.swap_cols(k, bj);

            bool reduced = false;
            for (int i = k + 1; i < w.m.rows(); ++i) {
                if (w.m.at(i, k).is_zero()) continue;
                Poly q = poly_divmod(w.m.at(i, k), w.m.at(k, k)).q;
                w.row_sub(i, q, k);
                if (!w.m.at(i, k).is_zero()) reduced = true; // smaller-degree remainder
            }
            for (int j = k + 1; j < w.m.cols(); ++j) {
                if (w.m.at(k, j).is_zero()) continue;
                Poly q = poly_divmod(w.m.at(k, j), w.m.at(k, k)).q;
                w.col_sub(j, q, k);
                if (!w.m.at(k, j).is_zero()) reduced = true;
            }
            if (reduced) continue;

            // pivot must divide the whole remaining block for the chain
            bool divides_all = true;
            for (int i = k + 1; i < w.m.rows() && divides_all; ++i)
                for (int j = k + 1; j < w.m.cols() && divides_all; ++j)
                    if (!poly_divides(w.m.at(k, k), w.m.at(i, j))) {
                        w.row_add(k, i);
                        divides_all = false;
                    }
            if (divides_all) break;
        }
        if (!w.m.at(k, k).is_zero() && !w.m.at(k, k).is_monic())
            w.scale_row(k, w.m.at(k, k).leading().inverse());
    }

    SnfResult res{w.m, w.u, w.v, {}};
    for (int k = 0; k < n; ++k) res.diagonal.push_back(w.m.at(k, k));
    return res;
}

} // namespace nlalg
