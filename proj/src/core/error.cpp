#include "error.hpp"

namespace dk {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::AllZero: return "AllZero";
    case ErrorCode::ChartMismatch: return "ChartMismatch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::DegreeError: return "DegreeError";
    case ErrorCode::LocalizationMismatch: return "LocalizationMismatch";
    case ErrorCode::ZeroGenerator: return "ZeroGenerator";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::DegenerateFrame: return "DegenerateFrame";
    case ErrorCode::NotInvolutive: return "NotInvolutive";
    case ErrorCode::NotASubalgebroid: return "NotASubalgebroid";
    case ErrorCode::InvolutivityLost: return "InvolutivityLost";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::UnsupportedOverlap: return "UnsupportedOverlap";
    case ErrorCode::ConventionCheckFailed: return "ConventionCheckFailed";
    case ErrorCode::FlavorMismatch: return "FlavorMismatch";
    case ErrorCode::NonzeroHigherResidue: return "NonzeroHigherResidue";
    case ErrorCode::NonzeroEllipticResidue: return "NonzeroEllipticResidue";
    case ErrorCode::DegenerateSpinor: return "DegenerateSpinor";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace dk
