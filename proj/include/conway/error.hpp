#pragma once

#include <stdexcept>
#include <string>

namespace conway {

enum class ErrorCode {
  ParseError,
  DivisionByZero,
  MismatchedDiscriminant,
  NegativeDiscriminant,
  NonPositiveSide,
  TriangleInequalityViolated,
  IrrationalSideLength,
  DegenerateBarycentric,
  PointAtInfinity,
  IdenticalPoints,
  ParallelLines,
  DuplicatePoint,
  CollinearPoints,
  CollinearSeed,
  CoincidentDefiningPoints,
  PreconditionViolated,
  NotScalene,
  ExhaustedRejections,
  VerificationFailed,
  IoError,
};

const char* error_name(ErrorCode code);

/// Domain error carrying a stable machine-readable code next to the message.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

}  // namespace conway
