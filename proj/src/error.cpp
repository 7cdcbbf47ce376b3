#include "polycyclic/error.hpp"

namespace polycyclic {

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::ReducibleModulus: return "ReducibleModulus";
        case Errc::UnsupportedSize: return "UnsupportedSize";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::NotMonic: return "NotMonic";
        case Errc::DuplicateRoots: return "DuplicateRoots";
        case Errc::NotAUnit: return "NotAUnit";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::InvalidFactorBasis: return "InvalidFactorBasis";
        case Errc::NonUnitConstantTerm: return "NonUnitConstantTerm";
        case Errc::NotADivisor: return "NotADivisor";
        case Errc::DegreeTooLarge: return "DegreeTooLarge";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::ModulusMismatch: return "ModulusMismatch";
        case Errc::PreconditionViolated: return "PreconditionViolated";
        case Errc::SingularMatrix: return "SingularMatrix";
        case Errc::EmptyInput: return "EmptyInput";
        case Errc::ZeroCode: return "ZeroCode";
        case Errc::DistanceNotExact: return "DistanceNotExact";
        case Errc::NotNested: return "NotNested";
        case Errc::NotDualContaining: return "NotDualContaining";
        case Errc::MNotScaledOrthogonal: return "MNotScaledOrthogonal";
        case Errc::Overflow: return "Overflow";
        case Errc::ParseError: return "ParseError";
        case Errc::SchemaError: return "SchemaError";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

}  // namespace polycyclic
