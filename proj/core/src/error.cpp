#include "zkosc/error.hpp"

namespace zkosc {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroK: return "ZeroK";
    case ErrorKind::InvalidWindow: return "InvalidWindow";
    case ErrorKind::BadGradeIndex: return "BadGradeIndex";
    case ErrorKind::NegativeStructure: return "NegativeStructure";
    case ErrorKind::NegativeLevel: return "NegativeLevel";
    case ErrorKind::IncompatibleRemainders: return "IncompatibleRemainders";
    case ErrorKind::ZeroOmega: return "ZeroOmega";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::InvalidGrid: return "InvalidGrid";
    case ErrorKind::DomainViolation: return "DomainViolation";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::CountTooLarge: return "CountTooLarge";
    case ErrorKind::GridMismatch: return "GridMismatch";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::ConfigParse: return "ConfigParse";
  }
  return "Unknown";
}

}  // namespace zkosc
