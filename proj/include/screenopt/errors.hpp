#pragma once

#include <stdexcept>
#include <string>

namespace screenopt {

/// Machine-readable failure categories, stable across the library and the CLI.
enum class ErrorCode {
  SkillOrdering,
  BudgetOrdering,
  BadDistribution,
  NegativeSubsidy,
  IndexOutOfRange,
  NonPositiveJump,
  BadOrdering,
  NonMonotoneRule,
  ZeroAllocation,
  BadRange,
  Unattainable,
  SearchTooLarge,
  LemmaViolation,
  BadEpsilon,
  ParseError,
  InternalError,
};

const char* to_string(ErrorCode code);

/// All library failures are reported through this exception type; `code()`
/// distinguishes input-validation errors from sizing guards so the CLI can
/// map them onto distinct exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SkillOrdering: return "SkillOrdering";
    case ErrorCode::BudgetOrdering: return "BudgetOrdering";
    case ErrorCode::BadDistribution: return "BadDistribution";
    case ErrorCode::NegativeSubsidy: return "NegativeSubsidy";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NonPositiveJump: return "NonPositiveJump";
    case ErrorCode::BadOrdering: return "BadOrdering";
    case ErrorCode::NonMonotoneRule: return "NonMonotoneRule";
    case ErrorCode::ZeroAllocation: return "ZeroAllocation";
    case ErrorCode::BadRange: return "BadRange";
    case ErrorCode::Unattainable: return "Unattainable";
    case ErrorCode::SearchTooLarge: return "SearchTooLarge";
    case ErrorCode::LemmaViolation: return "LemmaViolation";
    case ErrorCode::BadEpsilon: return "BadEpsilon";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace screenopt
