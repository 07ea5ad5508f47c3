#pragma once

#include <stdexcept>
#include <string>

namespace sj {

enum class ErrorCode {
  SingularMatrix,
  SingularFactor,
  NotPositiveDefinite,
  NotHermitian,
  NotSymmetric,
  NotSymplectic,
  NotUnitary,
  DimensionMismatch,
  NonFinite,
  ConjugationMismatch,
  FormNotReal,
  IllConditionedMetric,
  JetOrderTooLow,
  UnsupportedDimension,
  UnsupportedOrder,
  UnsupportedDegree,
  IndexOutOfRange,
  IterationLimit,
  QuadratureNotConverged,
  NotCoprime,
  GridTooCoarse,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

// Every validation failure in the library surfaces as this exception. `defect`
// carries the measured violation (e.g. the max-norm symplectic defect) when one
// exists, and 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, double defect = 0.0)
      : std::runtime_error(message), code_(code), defect_(defect) {}

  ErrorCode code() const noexcept { return code_; }
  double defect() const noexcept { return defect_; }

 private:
  ErrorCode code_;
  double defect_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message, double defect = 0.0);

}  // namespace sj
