#ifndef KAKEYA_ERROR_HPP
#define KAKEYA_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace kakeya {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  ZeroVector,
  AmbientMismatch,
  UnsupportedDimension,
  DegenerateSeed,
  UndefinedBasePoint,
  SeedTooSmall,
  UnsupportedField,
  DimensionMismatch,
  ZeroPolynomial,
  NotHomogeneous,
  HypothesisViolation,
  GridMissing,
  InvalidInput,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; the code distinguishes failure modes.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace kakeya

#endif // KAKEYA_ERROR_HPP
