#pragma once

#include <string>
#include <vector>

#include "nlalg/field.hpp"
#include "nlalg/matrix.hpp"

namespace nlalg {

/// Dense univariate polynomial over one field component, coefficients stored
/// lowest degree first. The zero polynomial has degree -1 (a sentinel that
/// sorts below every natural degree).
class Poly {
public:
    Poly() = default;
    static Poly zero(const Field& f);
    static Poly one(const Field& f);
    static Poly x(const Field& f);
    static Poly constant(FieldElement c);
    static Poly from_coeffs(const Field& f, std::vector<FieldElement> coeffs);
    static Poly monomial(FieldElement c, long k);
    // x - c
    static Poly linear(const FieldElement& c);

    const Field& field() const { return field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return degree() <= 0; }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    FieldElement coeff(int k) const;
    FieldElement leading() const;
    const std::vector<FieldElement>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const FieldElement& c) const;
    Poly shifted(int k) const; // multiply by x^k
    Poly pow(long e) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    FieldElement eval(const FieldElement& c) const;
    Poly monic() const;
    Poly derivative() const;
    Poly derivative(int order) const;

    std::string str() const;

private:
    void trim();
    Field field_;
    std::vector<FieldElement> c_;
};

struct PolyDivMod {
    Poly q, r;
};

// f = d*q + r with r = 0 or deg r < deg d; the pair is unique.
PolyDivMod poly_divmod(const Poly& f, const Poly& d);
bool poly_divides(const Poly& d, const Poly& f);
Poly poly_exact_div(const Poly& f, const Poly& d); // Internal error if not divisible

struct PolyGcd {
    Poly d, u, v; // d monic, u*f + v*g = d
};

// Extended Euclid; d is the monic greatest common divisor, which also
// generates the ideal <f, g>.
PolyGcd gcd_bezout(const Poly& f, const Poly& g);
Poly poly_gcd(const Poly& f, const Poly& g);
Poly poly_lcm(const Poly& f, const Poly& g);

// Coefficients a_k with f = sum a_k (x-c)^k; characteristic 0 only.
std::vector<FieldElement> taylor_expand(const Poly& f, const FieldElement& c);

// Largest r with (x-c)^r dividing f; f must be nonzero.
long root_multiplicity(const Poly& f, const FieldElement& c);

// Lagrange basis P_i with P_i(t_j) = delta_ij; abscissae pairwise distinct.
std::vector<Poly> lagrange_basis(const std::vector<FieldElement>& ts);
Poly lagrange_interpolate(const std::vector<FieldElement>& ts,
                          const std::vector<FieldElement>& values);
Matrix vandermonde(const std::vector<FieldElement>& ts);

// --- factorization ----------------------------------------------------------

struct FactorTerm {
    Poly p;      // monic
    long mult;
    bool certified; // false = may factor further (char-0 high-degree leftovers)
};

struct Factorization {
    FieldElement unit; // leading coefficient: unit * prod(p_i^mult_i) = input
    std::vector<FactorTerm> factors;
    bool complete = true; // every factor certified irreducible
};

// Strategy per field kind: finite fields get certified squarefree + distinct
// degree + exhaustive equal-degree splitting; Q gets rational roots plus
// Kronecker search up to degree 6; Q(sqrt d) gets linear factors by the norm
// trick, then the Q machinery on rational-coefficient leftovers.
Factorization factor(const Poly& f);

Poly squarefree_part(const Poly& f);
// true/false when certified; throws FactorizationIncomplete when undecidable.
bool is_irreducible(const Poly& f);
// Roots in the coefficient field with multiplicities.
std::vector<std::pair<FieldElement, long>> roots_in_field(const Poly& f);

// Polynomial literal grammar: terms "c*x^k" joined by +/-; coefficients
// follow the element grammar, parenthesized when they contain +/-.
Poly parse_poly(const std::string& text, const Field& f);

/// Componentwise tuple of polynomials over an n-field.
struct NPoly {
    std::vector<Poly> parts;
    size_t arity() const { return parts.size(); }
    bool operator==(const NPoly& o) const { return parts == o.parts; }
};

} // namespace nlalg
