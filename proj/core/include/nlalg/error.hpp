#pragma once

#include <stdexcept>
#include <string>

namespace nlalg {

// Structured error codes. Domain errors map to CLI exit code 1, usage/parse
// errors to exit code 2.
enum class Errc {
    DivisionByZero,
    DescriptorMismatch,
    SyntaxError,
    NotInField,
    ContainmentViolation,
    ArityTooSmall,
    DivisionByZeroPoly,
    BothZero,
    PositiveCharacteristic,
    ZeroPolynomial,
    DuplicateAbscissa,
    FactorizationIncomplete,
    ShapeMismatch,
    SingularMatrix,
    NotABasis,
    AmbientMismatch,
    FieldMismatch,
    NotInvariant,
    NotADirectSum,
    NotCommuting,
    NotDiagonalizable,
    NeedsFactorization,
    SplitFailure,
    UnorderedField,
    DependentInput,
    NotSelfAdjoint,
    NotSymmetric,
    CharacteristicTwo,
    UnknownField,
    UndefinedName,
    TooLargeForOracle,
    Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }
    // Usage/parse errors versus domain errors (CLI exit-code contract).
    bool is_usage() const {
        return code_ == Errc::SyntaxError || code_ == Errc::UnknownField ||
               code_ == Errc::UndefinedName;
    }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
    throw Error(code, what);
}

} // namespace nlalg
