#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sing {

enum class ErrorCode {
  FieldMismatch,
  BadIndex,
  NonSquare,
  ShapeMismatch,
  Singular,
  InfiniteDimensional,
  InadmissibleRelation,
  NotMonomial,
  NotQuadraticMonomial,
  AlgebraMismatch,
  NotExact,
  SourceTargetMismatch,
  BackendNotLinear,
  NotStrictlyStable,
  NotSelfInjective,
  NotRadicalSquareZero,
  ShiftOutOfRange,
  SchemaError,
  RelationNotParallel,
  MatrixShapeMismatch,
  RelationNotSatisfied,
  NotHomomorphism,
  Overflow,
  IoError,
  Internal,
};

std::string_view error_code_name(ErrorCode code);

/// All library failures surface as this exception; `code()` is the
/// machine-readable part, `what()` the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sing
