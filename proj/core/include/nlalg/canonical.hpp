#pragma once

#include <json.hpp>

#include "nlalg/operators.hpp"

namespace nlalg {

using ojson = nlohmann::ordered_json;

ojson json_element(const FieldElement& e);
ojson json_vec(const Vec& v);
ojson json_matrix(const Matrix& m);
ojson json_poly(const Poly& p);
ojson json_subspace(const Subspace& s);

struct CanonicalWarning {
    std::string kind;   // "SplitFailure" | "NeedsFactorization" | ...
    size_t component;   // 1-based
    std::string detail;
};

/// Everything the canonical-form machinery knows about one operator, with
/// the product/head identities cross-checked at assembly time.
struct CanonicalReport {
    NPoly char_poly;
    NPoly min_poly;
    std::vector<std::vector<Poly>> invariant_factors; // head (minpoly) first
    std::vector<DiagonalizeComponent> diagonal;
    std::vector<RationalFormComponent> rational;
    std::vector<JordanFormComponent> jordan;
    std::vector<std::optional<std::vector<PrimaryPart>>> primary;
    std::vector<std::optional<DnPair>> dn;
    std::vector<CanonicalWarning> warnings;
};

CanonicalReport canonical_report(const NOperator& t);
ojson to_json(const CanonicalReport& r);

} // namespace nlalg
