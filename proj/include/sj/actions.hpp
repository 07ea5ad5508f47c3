#pragma once

// Actions of Sp(n,R) on H_n, of the Jacobi group on H_{n,m}, and of the
// conjugated group on the Siegel-Jacobi disk. The templates run over
// std::complex<double> and over Jet, so the same code yields images and their
// derivatives.

#include "sj/jet.hpp"
#include "sj/types.hpp"

#include <utility>

namespace sj {

template <class P>
struct ActionResult {
  P image;
  CMat factor;  // CΩ+D, or Q̄W+P̄ for the disk action
};

namespace detail {
template <class S>
Mat<S> invert_factor(const Mat<S>& F) {
  try {
    return inverse(F);
  } catch (const Error& e) {
    fail(ErrorCode::SingularFactor, "automorphy factor is numerically singular", e.defect());
  }
}
}  // namespace detail

// (AΩ+B)(CΩ+D)⁻¹, optionally returning CΩ+D.
template <class S>
Mat<S> siegel_action_t(const SymplecticMatrix& M, const Mat<S>& omega, Mat<S>* factor = nullptr) {
  if (omega.rows() != M.n()) fail(ErrorCode::DimensionMismatch, "degree of M and Ω differ");
  Mat<S> F = M.C() * omega + M.D();
  Mat<S> img = (M.A() * omega + M.B()) * detail::invert_factor(F);
  img = symmetric_part(img);
  if (factor) *factor = std::move(F);
  return img;
}

// (M∘Ω, (Z+λΩ+μ)(CΩ+D)⁻¹).
template <class S>
std::pair<Mat<S>, Mat<S>> jacobi_action_t(const JacobiGroupElement& g, const Mat<S>& omega, const Mat<S>& Z,
                                          Mat<S>* factor = nullptr) {
  if (Z.rows() != g.m() || Z.cols() != g.n()) fail(ErrorCode::DimensionMismatch, "Z does not match the group element");
  Mat<S> F = g.M.C() * omega + g.M.D();
  const Mat<S> Finv = detail::invert_factor(F);
  Mat<S> img = symmetric_part((g.M.A() * omega + g.M.B()) * Finv);
  Mat<S> zimg = (Z + g.h.lambda() * omega + g.h.mu()) * Finv;
  if (factor) *factor = std::move(F);
  return {std::move(img), std::move(zimg)};
}

// ((PW+Q)(Q̄W+P̄)⁻¹, (η+λW+μ)(Q̄W+P̄)⁻¹).
template <class S>
std::pair<Mat<S>, Mat<S>> disk_action_t(const DiskGroupElement& g, const Mat<S>& W, const Mat<S>& eta,
                                        Mat<S>* factor = nullptr) {
  if (W.rows() != g.n() || eta.rows() != g.m() || eta.cols() != g.n()) {
    fail(ErrorCode::DimensionMismatch, "disk point does not match the group element");
  }
  Mat<S> F = conj(g.Q()) * W + conj(g.P());
  const Mat<S> Finv = detail::invert_factor(F);
  Mat<S> wimg = symmetric_part((g.P() * W + g.Q()) * Finv);
  Mat<S> eimg = (eta + g.h().lambda * W + g.h().mu) * Finv;
  if (factor) *factor = std::move(F);
  return {std::move(wimg), std::move(eimg)};
}

ActionResult<SiegelPoint> siegel_action(const SymplecticMatrix& M, const SiegelPoint& p);
ActionResult<JacobiPoint> jacobi_action(const JacobiGroupElement& g, const JacobiPoint& p);
ActionResult<DiskPoint> disk_action(const DiskGroupElement& g, const DiskPoint& p);

JacobiGroupElement jacobi_multiply(const JacobiGroupElement& g0, const JacobiGroupElement& g1);
JacobiGroupElement jacobi_inverse(const JacobiGroupElement& g);
// Max-norm distance between two group elements (all blocks).
double jacobi_distance(const JacobiGroupElement& a, const JacobiGroupElement& b);

// T*⁻¹ g T*, verified against Φ*(g*·p) = g·Φ*(p) at 20 fixed disk points.
DiskGroupElement star_conjugate(const JacobiGroupElement& g);
DiskGroupElement star_conjugate_unchecked(const JacobiGroupElement& g);

// Chart maps for use with jets (pullbacks, invariance tests).
ChartMap siegel_action_map(const SymplecticMatrix& M);
ChartMap jacobi_action_map(const JacobiGroupElement& g);
ChartMap disk_action_map(const DiskGroupElement& g);

}  // namespace sj
