#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stripcert {

enum class ErrorCode {
  InvalidTarget,
  ZeroPolynomial,
  NotHomogeneous,
  OddDegreeY,
  InvalidBound,
  DegreeTooSmall,
  NotPositive,
  NotNonnegative,
  NotNonnegativeOn01,
  HypothesisViolated,
  PolyaNotFound,
  ParityMismatch,
  IrrationalZero,
  ExactUnavailable,
  InternalInvariant,
  SyntaxError,
  UnknownVariable,
  FormatError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace stripcert
