#include "sj/types.hpp"

#include "sj/linalg.hpp"

namespace sj {

namespace {

void require_finite(const RMat& M, const char* what) {
  if (!all_finite(M)) fail(ErrorCode::NonFinite, std::string(what) + " has non-finite entries");
}

void require_finite(const CMat& M, const char* what) {
  if (!all_finite(M)) fail(ErrorCode::NonFinite, std::string(what) + " has non-finite entries");
}

void require_shape(const RMat& M, std::size_t r, std::size_t c, const char* what) {
  if (M.rows() != r || M.cols() != c) {
    fail(ErrorCode::DimensionMismatch, std::string(what) + " must be " + std::to_string(r) + "x" +
                                           std::to_string(c));
  }
}

}  // namespace

SiegelPoint SiegelPoint::make(const RMat& X, const RMat& Y, const Tolerances& tol) {
  if (X.rows() == 0) fail(ErrorCode::DimensionMismatch, "Siegel point needs n >= 1");
  require_shape(X, X.rows(), X.rows(), "X");
  require_shape(Y, X.rows(), X.rows(), "Y");
  require_finite(X, "X");
  require_finite(Y, "Y");
  RMat Xs = symmetrize_checked(X, "X", tol);
  RMat Ys = symmetrize_checked(Y, "Y", tol);
  cholesky_posdef(Ys, tol);
  return SiegelPoint(std::move(Xs), std::move(Ys));
}

SiegelPoint SiegelPoint::from_omega(const CMat& omega, const Tolerances& tol) {
  return make(real(omega), imag(omega), tol);
}

SiegelPoint SiegelPoint::i_identity(std::size_t n) {
  return SiegelPoint(RMat(n, n), RMat::identity(n));
}

JacobiPoint JacobiPoint::make(const SiegelPoint& base, const RMat& U, const RMat& V) {
  if (U.rows() == 0) fail(ErrorCode::DimensionMismatch, "Jacobi point needs m >= 1");
  require_shape(U, U.rows(), base.n(), "U");
  require_shape(V, U.rows(), base.n(), "V");
  require_finite(U, "U");
  require_finite(V, "V");
  return JacobiPoint(base, U, V);
}

JacobiPoint JacobiPoint::from_complex(const CMat& omega, const CMat& Z, const Tolerances& tol) {
  return make(SiegelPoint::from_omega(omega, tol), real(Z), imag(Z));
}

DiskPoint DiskPoint::make(const CMat& W, const CMat& eta, const Tolerances& tol) {
  const std::size_t n = W.rows();
  if (n == 0 || !W.square()) fail(ErrorCode::DimensionMismatch, "W must be square with n >= 1");
  if (eta.rows() == 0 || eta.cols() != n) fail(ErrorCode::DimensionMismatch, "eta must be m x n with m >= 1");
  require_finite(W, "W");
  require_finite(eta, "eta");
  CMat Ws = symmetrize_checked(W, "W", tol);
  const CMat gap = CMat::identity(n) - Ws * conj(Ws);
  cholesky_posdef(0.5 * (gap + adjoint(gap)), true, tol);
  return DiskPoint(std::move(Ws), eta);
}

double symplectic_defect(const RMat& M) {
  const RMat J = standard_symplectic_form(M.rows() / 2);
  return max_abs(transpose(M) * J * M - J);
}

SymplecticMatrix SymplecticMatrix::make(const RMat& A, const RMat& B, const RMat& C, const RMat& D,
                                        const Tolerances& tol) {
  const std::size_t n = A.rows();
  if (n == 0) fail(ErrorCode::DimensionMismatch, "symplectic blocks need n >= 1");
  for (const auto* blk : {&A, &B, &C, &D}) require_shape(*blk, n, n, "symplectic block");
  for (const auto* blk : {&A, &B, &C, &D}) require_finite(*blk, "symplectic block");
  const double defect = symplectic_defect(assemble_blocks(A, B, C, D));
  if (defect > tol.symplectic_tol) fail(ErrorCode::NotSymplectic, "ᵗM J M differs from J", defect);
  return SymplecticMatrix(A, B, C, D);
}

SymplecticMatrix SymplecticMatrix::from_full(const RMat& M, const Tolerances& tol) {
  if (!M.square() || M.rows() % 2 != 0) fail(ErrorCode::DimensionMismatch, "symplectic matrix must be 2n x 2n");
  const std::size_t n = M.rows() / 2;
  return make(M.block(0, 0, n, n), M.block(0, n, n, n), M.block(n, 0, n, n), M.block(n, n, n, n), tol);
}

SymplecticMatrix SymplecticMatrix::identity(std::size_t n) {
  return SymplecticMatrix(RMat::identity(n), RMat(n, n), RMat(n, n), RMat::identity(n));
}

SymplecticMatrix SymplecticMatrix::inversion(std::size_t n) {
  return SymplecticMatrix(RMat(n, n), RMat::identity(n), -RMat::identity(n), RMat(n, n));
}

SymplecticMatrix SymplecticMatrix::translation(const RMat& S) {
  const RMat Ss = symmetrize_checked(S, "translation block");
  const std::size_t n = S.rows();
  return SymplecticMatrix(RMat::identity(n), Ss, RMat(n, n), RMat::identity(n));
}

SymplecticMatrix SymplecticMatrix::gl_embedding(const RMat& U) {
  const std::size_t n = U.rows();
  return make(U, RMat(n, n), RMat(n, n), transpose(sj::inverse(U)));
}

SymplecticMatrix SymplecticMatrix::operator*(const SymplecticMatrix& o) const {
  if (n() != o.n()) fail(ErrorCode::DimensionMismatch, "symplectic product of different degrees");
  return SymplecticMatrix(A_ * o.A_ + B_ * o.C_, A_ * o.B_ + B_ * o.D_, C_ * o.A_ + D_ * o.C_, C_ * o.B_ + D_ * o.D_);
}

SymplecticMatrix SymplecticMatrix::inverse() const {
  // M⁻¹ = -J ᵗM J = [[ᵗD, -ᵗB], [-ᵗC, ᵗA]].
  return SymplecticMatrix(transpose(D_), -transpose(B_), -transpose(C_), transpose(A_));
}

HeisenbergElement HeisenbergElement::make(const RMat& lambda, const RMat& mu, const RMat& kappa) {
  const std::size_t m = lambda.rows(), n = lambda.cols();
  if (m == 0 || n == 0) fail(ErrorCode::DimensionMismatch, "Heisenberg element needs m, n >= 1");
  require_shape(mu, m, n, "mu");
  require_shape(kappa, m, m, "kappa");
  require_finite(lambda, "lambda");
  require_finite(mu, "mu");
  require_finite(kappa, "kappa");
  return HeisenbergElement(lambda, mu, kappa);
}

HeisenbergElement HeisenbergElement::zero(std::size_t n, std::size_t m) {
  return HeisenbergElement(RMat(m, n), RMat(m, n), RMat(m, m));
}

JacobiGroupElement JacobiGroupElement::make(const SymplecticMatrix& M, const HeisenbergElement& h) {
  if (M.n() != h.n()) fail(ErrorCode::DimensionMismatch, "symplectic and Heisenberg degrees differ");
  return JacobiGroupElement{M, h};
}

JacobiGroupElement JacobiGroupElement::identity(std::size_t n, std::size_t m) {
  return JacobiGroupElement{SymplecticMatrix::identity(n), HeisenbergElement::zero(n, m)};
}

double disk_group_defect(const CMat& P, const CMat& Q) {
  const std::size_t n = P.rows();
  const double d1 = max_abs(P * transpose(Q) - Q * transpose(P));
  const double d2 = max_abs(P * adjoint(P) - Q * adjoint(Q) - CMat::identity(n));
  return std::max(d1, d2);
}

DiskGroupElement DiskGroupElement::make(const CMat& P, const CMat& Q, const DiskHeisenberg& h,
                                        const Tolerances& tol) {
  const std::size_t n = P.rows();
  if (n == 0 || !P.square() || Q.rows() != n || Q.cols() != n) {
    fail(ErrorCode::DimensionMismatch, "P and Q must be n x n");
  }
  const std::size_t m = h.lambda.rows();
  if (m == 0 || h.lambda.cols() != n || h.mu.rows() != m || h.mu.cols() != n || h.kappa.rows() != m ||
      h.kappa.cols() != m) {
    fail(ErrorCode::DimensionMismatch, "disk Heisenberg part has inconsistent shape");
  }
  require_finite(P, "P");
  require_finite(Q, "Q");
  const double defect = disk_group_defect(P, Q);
  if (defect > tol.symplectic_tol) fail(ErrorCode::NotSymplectic, "P, Q violate the disk-group relations", defect);
  return DiskGroupElement(P, Q, h);
}

DiskGroupElement DiskGroupElement::identity(std::size_t n, std::size_t m) {
  return DiskGroupElement(CMat::identity(n), CMat(n, n), DiskHeisenberg{CMat(m, n), CMat(m, n), CMat(m, m)});
}

}  // namespace sj
