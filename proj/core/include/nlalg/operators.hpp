#pragma once

#include "nlalg/linalg.hpp"
#include "nlalg/poly.hpp"
#include "nlalg/polymatrix.hpp"

namespace nlalg {

/// A square n-matrix bound to its n-field, acting componentwise.
class NOperator {
public:
    NOperator(NField field, NMatrix a);
    const NField& nfield() const { return field_; }
    const NMatrix& matrix() const { return a_; }
    size_t arity() const { return a_.arity(); }
    const Matrix& part(size_t i) const { return a_.parts[i]; }

private:
    NField field_;
    NMatrix a_;
};

Matrix eval_poly_at_matrix(const Poly& p, const Matrix& a);
Matrix companion(const Poly& q); // q monic, deg >= 1; subdiagonal ones

// det(xI - A), monic of degree n, by fraction-free elimination over F[x].
Poly charpoly(const Matrix& a);
NPoly charpoly(const NOperator& t);

// Least-degree monic annihilating polynomial, computed by the first linear
// dependency among I, A, A^2, ... and cross-checked against the Smith normal
// form head factor (disagreement is a hard internal error).
Poly minpoly(const Matrix& a);
NPoly minpoly(const NOperator& t);

struct ComponentInvariants {
    std::vector<Poly> chain; // invariant factors, head (= minpoly) first
    SnfResult snf;           // U (xI - A) V diagonal, with unimodular U, V
};
ComponentInvariants snf_invariant_factors(const Matrix& a);

struct NInvariantFactors {
    std::vector<ComponentInvariants> parts;
};
NInvariantFactors snf_invariant_factors(const NOperator& t);

struct RationalFormComponent {
    std::vector<Poly> chain;
    Matrix form; // companion blocks of the chain, head block first
    std::optional<Matrix> transition; // P with P^-1 A P = form, on request
};
RationalFormComponent rational_form(const Matrix& a, bool with_transition = false);

struct NRationalForm {
    std::vector<RationalFormComponent> parts;
};
NRationalForm rational_form(const NOperator& t, bool with_transition = false);

struct JordanBlock {
    FieldElement eigenvalue;
    int size;
};

struct JordanFormComponent {
    bool split = false;
    std::vector<JordanBlock> blocks; // canonical eigenvalue order, sizes non-increasing
    std::optional<Matrix> form;
    std::optional<Poly> failing_factor; // a non-splitting (or undecided) factor
    bool factorization_incomplete = false;
};
JordanFormComponent jordan_form(const Matrix& a);

struct EigenComponent {
    std::vector<FieldElement> values; // canonical order
    std::vector<Matrix> eigenspaces;  // null space bases of A - cI
};
EigenComponent eigen(const Matrix& a);

struct DiagonalizeComponent {
    bool diagonalizable = false;
    std::optional<Matrix> p, d; // P^-1 A P = D when diagonalizable
};
// Certified for every supported field: square-freeness and linear-factor
// extraction never depend on the incomplete factorization paths.
DiagonalizeComponent diagonalize(const Matrix& a);

struct PrimaryPart {
    Poly prime;
    long exponent;
    Subspace w;        // null space of prime(A)^exponent
    Matrix projection; // E_i = h(A)
    Poly h;
};
// Throws NeedsFactorization when the minimal polynomial cannot be fully
// factored over a characteristic-0 component.
std::vector<PrimaryPart> primary_decomposition(const Matrix& a);

struct DnPair {
    Matrix d, n; // A = D + N, DN = ND, D diagonalizable, N nilpotent
    Poly d_poly; // D = d_poly(A)
};
DnPair dn_decomposition(const Matrix& a); // SplitFailure when minpoly does not split

struct ConductorResult {
    Poly conductor;      // least-degree monic g with g(A) alpha in W
    Subspace cyclic;     // Z(alpha; A)
    Matrix cyclic_basis; // columns alpha, A alpha, ..., A^{k-1} alpha
};
ConductorResult t_conductor(const Matrix& a, const Vec& alpha, const Subspace& w);
Poly t_annihilator(const Matrix& a, const Vec& alpha);

// Projections of a direct sum decomposition; NotADirectSum names the failing
// condition.
std::vector<Matrix> direct_sum_projections(const std::vector<Subspace>& ws);
std::vector<bool> invariance_commute_check(const Matrix& a, const std::vector<Matrix>& es);

// Common diagonalizing basis of a commuting diagonalizable family, built by
// recursive common-eigenspace refinement.
Matrix simultaneous_diagonalize(const std::vector<Matrix>& as);

bool similar(const Matrix& a, const Matrix& b);
bool similar(const NOperator& a, const NOperator& b);

} // namespace nlalg
