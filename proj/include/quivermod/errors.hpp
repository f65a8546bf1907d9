#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace quivermod {

enum class ErrorCode {
  // quiver-core
  DanglingEndpoint,
  HeterogeneousRelation,
  DuplicateName,
  ZeroRelation,
  VertexMismatch,
  RankZero,
  NonunitBaseRank,
  PairingNonzero,
  // representation
  ForeignPath,
  PresentationMismatch,
  DimensionMismatch,
  BadVectorShape,
  NotSubrep,
  BadMatrixShape,
  // stability
  NotThin,
  WrongDimension,
  BaseDimNotOne,
  NotSemistable,
  ZeroDimension,
  // toric-moduli
  NonToricRelations,
  TorsionQuotient,
  NoDegreeOne,
  EmptyStableLocus,
  NonsmoothChart,
  RankMismatch,
  NotPointed,
  // constructions
  BadParameter,
  // cli-io
  Syntax,
  UnknownArrow,
  NoncomposableTerm,
  Usage,
};

/// Upper-case identifier used in diagnostics, e.g. "NON_TORIC_RELATIONS".
std::string_view code_name(ErrorCode code);

/// True for codes that mean "well-formed input, but the mathematics refuses".
bool is_mathematical_refusal(ErrorCode code);

class QuiverError : public std::runtime_error {
 public:
  QuiverError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct Violation {
  ErrorCode code;
  std::string message;
};

/// Thrown by validate_presentation; carries every violation found, not just the first.
class ValidationError : public QuiverError {
 public:
  explicit ValidationError(std::vector<Violation> violations);

  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

class SyntaxError : public QuiverError {
 public:
  SyntaxError(ErrorCode code, int line, int column, const std::string& message);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace quivermod
