#include "kakeya/error.hpp"

namespace kakeya {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::DegenerateSeed: return "DegenerateSeed";
    case ErrorCode::UndefinedBasePoint: return "UndefinedBasePoint";
    case ErrorCode::SeedTooSmall: return "SeedTooSmall";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::HypothesisViolation: return "HypothesisViolation";
    case ErrorCode::GridMissing: return "GridMissing";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

} // namespace kakeya
