#pragma once

#include <random>

#include "nlalg/field.hpp"
#include "nlalg/matrix.hpp"
#include "nlalg/poly.hpp"

namespace testutil {

using namespace nlalg;

inline Field Q() { return FieldDescriptor::rational(); }
inline Field Q2() { return FieldDescriptor::quad_ext(2); }
inline Field Q3() { return FieldDescriptor::quad_ext(3); }
inline Field Z2() { return FieldDescriptor::prime_field(2); }
inline Field Z5() { return FieldDescriptor::prime_field(5); }
inline Field Z7() { return FieldDescriptor::prime_field(7); }
inline Field GF4() { return FieldDescriptor::ext_field(2, {1, 1, 1}); }
inline Field GF9() { return FieldDescriptor::ext_field(3, {1, 0, 1}); } // x^2+1 over GF(3)

// the four acceptance field kinds
inline std::vector<Field> corpus_fields() { return {Q(), Q2(), Z5(), GF4()}; }

using Rng = std::mt19937_64;

inline FieldElement rand_element(const Field& f, Rng& rng) {
    switch (f->kind()) {
        case FieldKind::Rational: {
            std::uniform_int_distribution<long> num(-4, 4), den(1, 4);
            return FieldElement::rational(f, mpq_class(num(rng), den(rng)));
        }
        case FieldKind::QuadExt: {
            std::uniform_int_distribution<long> num(-3, 3), den(1, 3);
            return FieldElement::quad(f, mpq_class(num(rng), den(rng)),
                                      mpq_class(num(rng), den(rng)));
        }
        case FieldKind::PrimeField: {
            std::uniform_int_distribution<long> r(0, f->prime() - 1);
            return FieldElement::residue(f, r(rng));
        }
        case FieldKind::ExtField: {
            std::uniform_int_distribution<long> r(0, f->prime() - 1);
            std::vector<long> c(f->ext_degree());
            for (auto& x : c) x = r(rng);
            return FieldElement::ext(f, std::move(c));
        }
    }
    return FieldElement::zero(f);
}

inline FieldElement rand_nonzero(const Field& f, Rng& rng) {
    while (true) {
        FieldElement e = rand_element(f, rng);
        if (!e.is_zero()) return e;
    }
}

inline Vec rand_vec(const Field& f, int n, Rng& rng) {
    Vec v;
    for (int i = 0; i < n; ++i) v.push_back(rand_element(f, rng));
    return v;
}

inline Matrix rand_matrix(const Field& f, int rows, int cols, Rng& rng) {
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = rand_element(f, rng);
    return m;
}

inline Matrix rand_invertible(const Field& f, int n, Rng& rng) {
    while (true) {
        Matrix m = rand_matrix(f, n, n, rng);
        if (!det_bareiss(m).is_zero()) return m;
    }
}

inline Poly rand_poly(const Field& f, int degree, Rng& rng) {
    std::vector<FieldElement> c;
    for (int i = 0; i < degree; ++i) c.push_back(rand_element(f, rng));
    c.push_back(rand_nonzero(f, rng));
    return Poly::from_coeffs(f, std::move(c));
}

inline Poly rand_nonzero_poly(const Field& f, int max_degree, Rng& rng) {
    std::uniform_int_distribution<int> d(0, max_degree);
    return rand_poly(f, d(rng), rng);
}

inline FieldElement el(const Field& f, const std::string& text) {
    return parse_element(text, f);
}

inline Poly pp(const Field& f, const std::string& text) { return parse_poly(text, f); }

inline Matrix mat(const Field& f, const std::vector<std::vector<std::string>>& rows) {
    std::vector<Vec> vs;
    for (const auto& r : rows) {
        Vec v;
        for (const auto& s : r) v.push_back(parse_element(s, f));
        vs.push_back(v);
    }
    return Matrix::from_rows(f, vs);
}

inline Vec vec(const Field& f, const std::vector<std::string>& entries) {
    Vec v;
    for (const auto& s : entries) v.push_back(parse_element(s, f));
    return v;
}

} // namespace testutil
