#pragma once

#include <stdexcept>
#include <string>

namespace conesum {

enum class ErrorCode {
  InvalidInput,
  NotIrreducible,
  NotTotallyReal,
  DegenerateRoots,
  ZeroInput,
  NotAUnit,
  NotTotallyPositive,
  SearchBoundExceeded,
  NotFullDim,
  DegenerateVertex,
  PointNotInterior,
  RayNotRational,
  NotACycle,
  NotTopDegree,
  UnitDoesNotPreserveM,
  ConeNotInFan,
  OverlappingStars,
  RayOnExistingFace,
  SingularAt_x0,
  NotConvexUnion,
  DegreeTooSmall,
  SingularE,
  PrecisionExhausted,
  WindowTooSmall,
  MissingIntersectionEntry,
  CutoffTooSmall,
  NotFound,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace conesum
