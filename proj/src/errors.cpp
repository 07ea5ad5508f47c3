#include "sj/errors.hpp"

#include "sj/config.hpp"

#include <mutex>

namespace sj {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::SingularFactor: return "SingularFactor";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotSymplectic: return "NotSymplectic";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::ConjugationMismatch: return "ConjugationMismatch";
    case ErrorCode::FormNotReal: return "FormNotReal";
    case ErrorCode::IllConditionedMetric: return "IllConditionedMetric";
    case ErrorCode::JetOrderTooLow: return "JetOrderTooLow";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::IterationLimit: return "IterationLimit";
    case ErrorCode::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& message, double defect) {
  throw Error(code, message, defect);
}

namespace {
std::mutex g_tol_mutex;
Tolerances g_tolerances;
}  // namespace

const Tolerances& default_tolerances() {
  return g_tolerances;
}

void set_default_tolerances(const Tolerances& tol) {
  std::lock_guard<std::mutex> lock(g_tol_mutex);
  g_tolerances = tol;
}

}  // namespace sj
