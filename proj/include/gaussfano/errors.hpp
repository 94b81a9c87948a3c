#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gaussfano {

enum class ErrorCode {
  UnknownVariable,
  SyntaxError,
  NegativeExponent,
  ArityMismatch,
  NotHomogeneousInST,
  RingMismatch,
  ZeroDivisorArgument,
  ComputationBudgetExceeded,
  CoincidentPoints,
  NotHomogeneous,
  BadCodimension,
  PointNotOnVariety,
  LineNotOnVariety,
  LineInSingularLocus,
  VerificationWindowMismatch,
  NonzeroRemainder,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI's exit-code mapping) can dispatch without parsing
/// message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parser failure with the byte offset into the source text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& message)
      : Error(ErrorCode::SyntaxError, message + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace gaussfano
