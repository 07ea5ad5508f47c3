#pragma once

// Validated points and group elements. Constructors are the only way in, and
// every constructed value satisfies its invariants (symmetry within sym_tol,
// positivity certified by Cholesky, group relations within symplectic_tol).

#include "sj/config.hpp"
#include "sj/matrix.hpp"

namespace sj {

class SiegelPoint {
 public:
  static SiegelPoint make(const RMat& X, const RMat& Y, const Tolerances& tol = default_tolerances());
  static SiegelPoint from_omega(const CMat& omega, const Tolerances& tol = default_tolerances());
  static SiegelPoint i_identity(std::size_t n);

  std::size_t n() const noexcept { return X_.rows(); }
  const RMat& X() const noexcept { return X_; }
  const RMat& Y() const noexcept { return Y_; }
  CMat omega() const { return complexify(X_, Y_); }

 private:
  SiegelPoint(RMat X, RMat Y) : X_(std::move(X)), Y_(std::move(Y)) {}
  RMat X_, Y_;
};

class JacobiPoint {
 public:
  static JacobiPoint make(const SiegelPoint& base, const RMat& U, const RMat& V);
  static JacobiPoint from_complex(const CMat& omega, const CMat& Z, const Tolerances& tol = default_tolerances());

  std::size_t n() const noexcept { return base_.n(); }
  std::size_t m() const noexcept { return U_.rows(); }
  const SiegelPoint& base() const noexcept { return base_; }
  const RMat& U() const noexcept { return U_; }
  const RMat& V() const noexcept { return V_; }
  CMat omega() const { return base_.omega(); }
  CMat Z() const { return complexify(U_, V_); }

 private:
  JacobiPoint(SiegelPoint base, RMat U, RMat V) : base_(std::move(base)), U_(std::move(U)), V_(std::move(V)) {}
  SiegelPoint base_;
  RMat U_, V_;
};

class DiskPoint {
 public:
  static DiskPoint make(const CMat& W, const CMat& eta, const Tolerances& tol = default_tolerances());

  std::size_t n() const noexcept { return W_.rows(); }
  std::size_t m() const noexcept { return eta_.rows(); }
  const CMat& W() const noexcept { return W_; }
  const CMat& eta() const noexcept { return eta_; }

 private:
  DiskPoint(CMat W, CMat eta) : W_(std::move(W)), eta_(std::move(eta)) {}
  CMat W_, eta_;
};

class SymplecticMatrix {
 public:
  static SymplecticMatrix make(const RMat& A, const RMat& B, const RMat& C, const RMat& D,
                               const Tolerances& tol = default_tolerances());
  static SymplecticMatrix from_full(const RMat& M, const Tolerances& tol = default_tolerances());
  static SymplecticMatrix identity(std::size_t n);
  // J_n = [[0, I], [-I, 0]].
  static SymplecticMatrix inversion(std::size_t n);
  // [[I, S], [0, I]] with S symmetric.
  static SymplecticMatrix translation(const RMat& S);
  // [[U, 0], [0, ᵗU⁻¹]].
  static SymplecticMatrix gl_embedding(const RMat& U);

  std::size_t n() const noexcept { return A_.rows(); }
  const RMat& A() const noexcept { return A_; }
  const RMat& B() const noexcept { return B_; }
  const RMat& C() const noexcept { return C_; }
  const RMat& D() const noexcept { return D_; }
  RMat full() const { return assemble_blocks(A_, B_, C_, D_); }
  SymplecticMatrix operator*(const SymplecticMatrix& o) const;
  SymplecticMatrix inverse() const;

 private:
  SymplecticMatrix(RMat A, RMat B, RMat C, RMat D)
      : A_(std::move(A)), B_(std::move(B)), C_(std::move(C)), D_(std::move(D)) {}
  RMat A_, B_, C_, D_;
};

// Max-norm defect of ᵗM J M - J.
double symplectic_defect(const RMat& M);

class HeisenbergElement {
 public:
  static HeisenbergElement make(const RMat& lambda, const RMat& mu, const RMat& kappa);
  static HeisenbergElement zero(std::size_t n, std::size_t m);

  std::size_t n() const noexcept { return lambda_.cols(); }
  std::size_t m() const noexcept { return lambda_.rows(); }
  const RMat& lambda() const noexcept { return lambda_; }
  const RMat& mu() const noexcept { return mu_; }
  const RMat& kappa() const noexcept { return kappa_; }

 private:
  HeisenbergElement(RMat l, RMat u, RMat k) : lambda_(std::move(l)), mu_(std::move(u)), kappa_(std::move(k)) {}
  RMat lambda_, mu_, kappa_;
};

struct JacobiGroupElement {
  SymplecticMatrix M;
  HeisenbergElement h;

  static JacobiGroupElement make(const SymplecticMatrix& M, const HeisenbergElement& h);
  static JacobiGroupElement identity(std::size_t n, std::size_t m);
  std::size_t n() const noexcept { return M.n(); }
  std::size_t m() const noexcept { return h.m(); }
};

// Heisenberg part of a disk-group element. Conjugation by T* makes it complex
// in general: (λ, μ) ↦ ((λ+iμ)/2, (λ−iμ)/2).
struct DiskHeisenberg {
  CMat lambda, mu, kappa;
};

class DiskGroupElement {
 public:
  static DiskGroupElement make(const CMat& P, const CMat& Q, const DiskHeisenberg& h,
                               const Tolerances& tol = default_tolerances());
  static DiskGroupElement identity(std::size_t n, std::size_t m);

  std::size_t n() const noexcept { return P_.rows(); }
  std::size_t m() const noexcept { return h_.lambda.rows(); }
  const CMat& P() const noexcept { return P_; }
  const CMat& Q() const noexcept { return Q_; }
  const DiskHeisenberg& h() const noexcept { return h_; }

 private:
  DiskGroupElement(CMat P, CMat Q, DiskHeisenberg h) : P_(std::move(P)), Q_(std::move(Q)), h_(std::move(h)) {}
  CMat P_, Q_;
  DiskHeisenberg h_;
};

// Max-norm defects of P ᵗQ̄ - Q ᵗP̄ and P ᵗP̄ - Q ᵗQ̄ - I.
double disk_group_defect(const CMat& P, const CMat& Q);

}  // namespace sj
