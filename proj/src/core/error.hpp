#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dk {

enum class ErrorCode {
  UnknownVariable,
  DivisionByZero,
  ZeroPolynomial,
  AllZero,
  ChartMismatch,
  DegreeMismatch,
  DegreeError,
  LocalizationMismatch,
  ZeroGenerator,
  BadParams,
  DegenerateFrame,
  NotInvolutive,
  NotASubalgebroid,
  InvolutivityLost,
  NotDivisible,
  UnsupportedOverlap,
  ConventionCheckFailed,
  FlavorMismatch,
  NonzeroHigherResidue,
  NonzeroEllipticResidue,
  DegenerateSpinor,
  ParseError,
  LimitExceeded,
  Internal,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace dk
