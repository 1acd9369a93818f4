#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace conicnet {

enum class ErrorCode {
  NonOddPrime,
  DegreeOutOfRange,
  DivisionByZero,
  ZeroInput,
  EmptyInput,
  DegenerateConic,
  SingularMatrix,
  WrongRank,
  ZeroForm,
  DependentForms,
  DependentBasis,
  NotHyperplane,
  IdenticallyZero,
  CharThreeUnsupported,
  NotRankOne,
  LabelUnavailableForCharacteristic,
  NoAdmissibleC,
  ParameterSearchFailed,
  MemoryBoundExceeded,
  SearchBudgetExceeded,
  DimensionMismatch,
  FieldMismatch,
  MalformedInput,
  InternalInconsistency,
  ConsistencyViolation,
};

std::string_view error_code_name(ErrorCode code);

/// Domain errors whose code mirrors the failure names used throughout the
/// library and in the CLI's structured error output.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for failures that indicate a bug or a mathematical contradiction
  /// rather than bad input.
  bool is_internal() const noexcept {
    return code_ == ErrorCode::InternalInconsistency || code_ == ErrorCode::ConsistencyViolation ||
           code_ == ErrorCode::NoAdmissibleC || code_ == ErrorCode::ParameterSearchFailed;
  }

 private:
  ErrorCode code_;
};

}  // namespace conicnet
