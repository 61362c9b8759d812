#include "conway/error.hpp"

namespace conway {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::MismatchedDiscriminant: return "MismatchedDiscriminant";
    case ErrorCode::NegativeDiscriminant: return "NegativeDiscriminant";
    case ErrorCode::NonPositiveSide: return "NonPositiveSide";
    case ErrorCode::TriangleInequalityViolated: return "TriangleInequalityViolated";
    case ErrorCode::IrrationalSideLength: return "IrrationalSideLength";
    case ErrorCode::DegenerateBarycentric: return "DegenerateBarycentric";
    case ErrorCode::PointAtInfinity: return "PointAtInfinity";
    case ErrorCode::IdenticalPoints: return "IdenticalPoints";
    case ErrorCode::ParallelLines: return "ParallelLines";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::CollinearPoints: return "CollinearPoints";
    case ErrorCode::CollinearSeed: return "CollinearSeed";
    case ErrorCode::CoincidentDefiningPoints: return "CoincidentDefiningPoints";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotScalene: return "NotScalene";
    case ErrorCode::ExhaustedRejections: return "ExhaustedRejections";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace conway
