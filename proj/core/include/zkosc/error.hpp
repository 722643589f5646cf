#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zkosc {

enum class ErrorKind {
  ZeroK,
  InvalidWindow,
  BadGradeIndex,
  NegativeStructure,
  NegativeLevel,
  IncompatibleRemainders,
  ZeroOmega,
  InvalidParams,
  InvalidGrid,
  DomainViolation,
  ConvergenceFailure,
  CountTooLarge,
  GridMismatch,
  EmptyInput,
  ConfigParse,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries one of the kinds above so the
// CLI can map it onto an exit code and a machine-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace zkosc
