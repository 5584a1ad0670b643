#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace privword {

enum class ErrorCode {
  EmptyImage,
  UnknownLetter,
  NotProlongable,
  UnknownConstruction,
  BudgetExceeded,
  OutOfRange,
  EmptyPattern,
  EmptyWord,
  NotAFactor,
  CertificationTooShort,
  NonBinary,
  NotPrivileged,
  DomainViolation,
  RangeViolation,
  IndexTooSmall,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures are reported through this type; `code()` lets callers
// (the CLI in particular) map failures onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace privword
