#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ritt {

// Every failure the library reports carries one of these codes. The CLI maps
// them onto exit codes through error_category().
enum class ErrorCode {
  // arithmetic and field construction
  DivisionByZero,
  FieldMismatch,
  NotMonic,
  ReduciblePolynomial,
  ZeroInput,
  // rational functions and decomposition
  ZeroDenominator,
  ConstantInput,
  NotAUnit,
  DegreeMismatch,
  NotNormalForm,
  NotSameTarget,
  DegreeTooLarge,
  // groups
  NotAGroup,
  TrivialGroup,
  GroupTooLarge,
  NotASubgroupOfFixingGroup,
  NotNormalCase,
  UnclassifiableGroup,
  SolveFailed,
  // casebook and parsing
  UnknownCase,
  SyntaxError,
  DivisionByZeroFunction,
  UnknownSymbol,
  // anything that should never happen
  Internal,
};

enum class ErrorCategory { Parse, Precondition, Internal };

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::ConstantInput: return "ConstantInput";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotNormalForm: return "NotNormalForm";
    case ErrorCode::NotSameTarget: return "NotSameTarget";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::TrivialGroup: return "TrivialGroup";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::NotASubgroupOfFixingGroup: return "NotASubgroupOfFixingGroup";
    case ErrorCode::NotNormalCase: return "NotNormalCase";
    case ErrorCode::UnclassifiableGroup: return "UnclassifiableGroup";
    case ErrorCode::SolveFailed: return "SolveFailed";
    case ErrorCode::UnknownCase: return "UnknownCase";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DivisionByZeroFunction: return "DivisionByZeroFunction";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

inline ErrorCategory error_category(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::UnknownSymbol:
    case ErrorCode::DivisionByZeroFunction:
    case ErrorCode::UnknownCase:
      return ErrorCategory::Parse;
    case ErrorCode::SolveFailed:
    case ErrorCode::Internal:
      return ErrorCategory::Internal;
    default:
      return ErrorCategory::Precondition;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failures additionally carry the byte offset of the offending token.
class SyntaxError : public Error {
 public:
  SyntaxError(ErrorCode code, const std::string& what, std::size_t position)
      : Error(code, what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace ritt
