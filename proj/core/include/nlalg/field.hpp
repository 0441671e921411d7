#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "nlalg/error.hpp"

namespace nlalg {

class FieldDescriptor;
using Field = std::shared_ptr<const FieldDescriptor>;

enum class FieldKind { Rational, QuadExt, PrimeField, ExtField };

// Default cap on finite field size p^k; override with NLALG_MAX_FIELD_SIZE.
long field_size_cap();

/// A concrete computable field: Q, Q(sqrt d), Z_p, or GF(p^k) with explicit
/// monic irreducible modulus. Immutable; shared by every element and
/// polynomial over it. Equality is structural (two GF(4) under different
/// moduli are distinct descriptors).
class FieldDescriptor {
public:
    static Field rational();
    static Field quad_ext(long d); // d squarefree, d != 0, 1 (may be negative)
    static Field prime_field(long p);
    // modulus: coefficients low degree first, monic, irreducible, deg >= 2
    static Field ext_field(long p, std::vector<long> modulus);

    FieldKind kind() const { return kind_; }
    long quad_d() const { return d_; }
    long prime() const { return p_; } // PrimeField / ExtField
    const std::vector<long>& modulus() const { return modulus_; }
    long ext_degree() const { return static_cast<long>(modulus_.size()) - 1; }
    long characteristic() const; // 0 for Rational/QuadExt, p otherwise
    long size() const;           // p^k for finite fields, 0 for infinite
    bool is_finite() const { return characteristic() != 0; }
    // Has no proper subfield (Q and Z_p).
    bool is_prime_field() const {
        return kind_ == FieldKind::Rational || kind_ == FieldKind::PrimeField;
    }
    // Ordered under the real embedding (Q, Q(sqrt d) with d > 0).
    bool is_ordered() const;

    std::string name() const; // "Q" | "Q(sqrt 2)" | "GF(5)" | "GF(2^2; x^2+x+1)"
    bool equals(const FieldDescriptor& o) const;

    // Proper subfields, as descriptors (canonical moduli for GF subfields).
    std::vector<Field> proper_subfields() const;

private:
    FieldDescriptor() = default;
    FieldKind kind_ = FieldKind::Rational;
    long d_ = 0;
    long p_ = 0;
    std::vector<long> modulus_;
};

inline bool same_field(const Field& a, const Field& b) {
    return a == b || a->equals(*b);
}

// Structural embedding rules of the supported field kinds:
// Q in Q(sqrt d); Z_p in GF(p^k); GF(p^j) in GF(p^k) iff j | k;
// Q(sqrt d) in Q(sqrt d') iff d = d'; every field in itself.
bool embeds(const Field& sub, const Field& sup);

struct QuadPayload {
    mpq_class a, b; // a + b*sqrt(d)
    bool operator==(const QuadPayload& o) const { return a == o.a && b == o.b; }
};

/// One exact element of a FieldDescriptor. Always normalized: fractions in
/// lowest terms with positive denominator, residues in [0, p), extension
/// coefficients reduced mod p.
class FieldElement {
public:
    FieldElement() = default;
    static FieldElement zero(const Field& f);
    static FieldElement one(const Field& f);
    static FieldElement from_int(const Field& f, long n);
    static FieldElement from_mpz(const Field& f, const mpz_class& n);
    static FieldElement rational(const Field& f, mpq_class q);
    static FieldElement quad(const Field& f, mpq_class a, mpq_class b);
    static FieldElement residue(const Field& f, long r);
    static FieldElement ext(const Field& f, std::vector<long> coeffs);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(long e) const; // e >= 0, or e < 0 with nonzero base
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    const mpq_class& rat() const { return std::get<mpq_class>(v_); }
    const QuadPayload& quad() const { return std::get<QuadPayload>(v_); }
    long residue() const { return std::get<long>(v_); }
    const std::vector<long>& ext() const { return std::get<std::vector<long>>(v_); }

    // For Q / Q(sqrt d) with d > 0: exact sign under the real embedding
    // (sqrt d > 0). Fails with UnorderedField otherwise.
    int sign() const;

    // Deterministic total order used for canonical output (Jordan block
    // ordering and report serialization); not the field order.
    static bool canonical_less(const FieldElement& x, const FieldElement& y);

    std::string str() const; // element grammar, round-trips through parse

private:
    void check_same(const FieldElement& o) const;
    Field field_;
    std::variant<mpq_class, QuadPayload, long, std::vector<long>> v_;
};

std::string format_element(const FieldElement& e);
FieldElement parse_element(const std::string& text, const Field& f);

Field parse_field(const std::string& text);

/// Validated tuple of n >= 2 pairwise non-embeddable fields.
class NField {
public:
    explicit NField(std::vector<Field> components); // validates, may throw
    size_t arity() const { return components_.size(); }
    const Field& component(size_t i) const { return components_.at(i); }
    const std::vector<Field>& components() const { return components_; }

private:
    std::vector<Field> components_;
};

NField validate_nfield(std::vector<Field> components);

struct NScalar {
    std::vector<FieldElement> parts;
    size_t arity() const { return parts.size(); }
};

enum class NCharacteristic { Zero, Finite, Mixed };
enum class NPrimeness { Prime, Semiprime, NonPrime };

struct CharacteristicReport {
    NCharacteristic overall;
    std::vector<long> per_component;
};

struct PrimenessReport {
    NPrimeness overall;
    std::vector<bool> component_prime;
    // Per component, its proper subfields (empty for Q and Z_p).
    std::vector<std::vector<Field>> proper_subfields;
    // Quasi m-subfield: the prime subfield of each non-prime component,
    // tagged with the 0-based component index. m = quasi.size().
    std::vector<std::pair<size_t, Field>> quasi;
};

CharacteristicReport classify_characteristic(const NField& F);
PrimenessReport classify_primeness(const NField& F);

// Tuple-level classification. The paper's own semiprime example pairs Z_7
// with GF(49), which the embedding rules reject as an n-field; classification
// only inspects the components, so it is also offered on raw tuples.
CharacteristicReport classify_characteristic(const std::vector<Field>& components);
PrimenessReport classify_primeness(const std::vector<Field>& components);

const char* to_string(NCharacteristic c);
const char* to_string(NPrimeness p);

} // namespace nlalg
