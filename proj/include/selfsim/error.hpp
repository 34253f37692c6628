#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace selfsim {

enum class ErrorKind {
  EmptySet,
  NonpositiveDelta,
  ParameterOutOfRange,
  AlphabetMismatch,
  BudgetExceeded,
  UntaggedFamily,
  HypothesisViolated,
  NotCovered,
  StepBudgetExceeded,
  WrongFamilyRange,
  NotContractive,
  ParseError,
  DivisionByZero,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. The kind is stable and drives CLI
/// exit codes; the message names the violated condition.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::NonpositiveDelta: return "NonpositiveDelta";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::UntaggedFamily: return "UntaggedFamily";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::NotCovered: return "NotCovered";
    case ErrorKind::StepBudgetExceeded: return "StepBudgetExceeded";
    case ErrorKind::WrongFamilyRange: return "WrongFamilyRange";
    case ErrorKind::NotContractive: return "NotContractive";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
  }
  return "Unknown";
}

}  // namespace selfsim
