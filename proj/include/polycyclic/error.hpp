#pragma once

#include <stdexcept>
#include <string>

namespace polycyclic {

enum class Errc {
    NotPrime,
    ReducibleModulus,
    UnsupportedSize,
    DivisionByZero,
    FieldMismatch,
    ZeroPolynomial,
    NotMonic,
    DuplicateRoots,
    NotAUnit,
    IndexOutOfRange,
    LengthMismatch,
    InvalidFactorBasis,
    NonUnitConstantTerm,
    NotADivisor,
    DegreeTooLarge,
    BudgetExceeded,
    ModulusMismatch,
    PreconditionViolated,
    SingularMatrix,
    EmptyInput,
    ZeroCode,
    DistanceNotExact,
    NotNested,
    NotDualContaining,
    MNotScaledOrthogonal,
    Overflow,
    ParseError,
    SchemaError,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail);

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace polycyclic
