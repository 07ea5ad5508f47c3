#pragma once

#include "sj/jet.hpp"
#include "sj/types.hpp"

#include <utility>

namespace sj {

// Φ*(W, η) = (i(I+W)(I−W)⁻¹, 2iη(I−W)⁻¹).
template <class S>
std::pair<Mat<S>, Mat<S>> partial_cayley_t(const Mat<S>& W, const Mat<S>& eta) {
  const std::size_t n = W.rows();
  const RMat I = RMat::identity(n);
  Mat<S> inv;
  try {
    inv = inverse(Mat<S>(I - W));
  } catch (const Error& e) {
    fail(ErrorCode::SingularFactor, "I - W is numerically singular", e.defect());
  }
  Mat<S> omega = symmetric_part(kI * ((I + W) * inv));
  Mat<S> Z = (2.0 * kI) * (eta * inv);
  return {std::move(omega), std::move(Z)};
}

// W = (Ω−iI)(Ω+iI)⁻¹, η = Z(Ω+iI)⁻¹.
template <class S>
std::pair<Mat<S>, Mat<S>> partial_cayley_inverse_t(const Mat<S>& omega, const Mat<S>& Z) {
  const std::size_t n = omega.rows();
  const CMat iI = kI * CMat::identity(n);
  Mat<S> inv;
  try {
    inv = inverse(Mat<S>(omega + iI));
  } catch (const Error& e) {
    fail(ErrorCode::SingularFactor, "Ω + iI is numerically singular", e.defect());
  }
  Mat<S> W = symmetric_part((omega - iI) * inv);
  Mat<S> eta = Z * inv;
  return {std::move(W), std::move(eta)};
}

JacobiPoint partial_cayley(const DiskPoint& p);
DiskPoint partial_cayley_inverse(const JacobiPoint& p);

// max-norm of g·Φ*(p) − Φ*(g*·p) over both components.
double compatibility_residual(const JacobiGroupElement& g, const DiskPoint& p);
double compatibility_residual(const JacobiGroupElement& g, const DiskGroupElement& gstar, const DiskPoint& p);

ChartMap partial_cayley_map(std::size_t n, std::size_t m);
ChartMap partial_cayley_inverse_map(std::size_t n, std::size_t m);

}  // namespace sj
