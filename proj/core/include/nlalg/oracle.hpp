#pragma once

#include "nlalg/polymatrix.hpp"

namespace nlalg {

// Reference implementations sharing no code path with the engine: full
// permutation expansion for determinants (<= 5x5), exhaustive enumeration
// over finite fields for roots/factors, and monic-divisor trial for minimal
// polynomials. Everything beyond those bounds throws TooLargeForOracle.
namespace oracle {

FieldElement det(const Matrix& a);
Poly det(const PolyMatrix& a);
Poly charpoly(const Matrix& a);

std::vector<std::pair<FieldElement, long>> roots(const Poly& f);
std::vector<std::pair<Poly, long>> factor(const Poly& f);
Poly minpoly(const Matrix& a);

} // namespace oracle

} // namespace nlalg
