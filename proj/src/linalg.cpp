#include "sj/linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace sj {

namespace {

Eigen::MatrixXd to_eigen(const RMat& M) {
  Eigen::MatrixXd E(M.rows(), M.cols());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) E(static_cast<long>(i), static_cast<long>(j)) = M(i, j);
  return E;
}

Eigen::MatrixXcd to_eigen(const CMat& M) {
  Eigen::MatrixXcd E(M.rows(), M.cols());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) E(static_cast<long>(i), static_cast<long>(j)) = M(i, j);
  return E;
}

}  // namespace

double relative_asymmetry(const RMat& M) {
  return max_asymmetry(M) / std::max(1.0, max_abs(M));
}

double relative_asymmetry(const CMat& M, bool hermitian) {
  double d = 0.0;
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = i; j < M.cols(); ++j) {
      const cplx other = hermitian ? std::conj(M(j, i)) : M(j, i);
      d = std::max(d, std::abs(M(i, j) - other));
    }
  return d / std::max(1.0, max_abs(M));
}

CholeskyResult try_cholesky(const CMat& S, bool hermitian, const Tolerances& tol) {
  CholeskyResult res;
  const std::size_t n = S.rows();
  CMat L(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    cplx diag = S(j, j);
    for (std::size_t k = 0; k < j; ++k) diag -= L(j, k) * (hermitian ? std::conj(L(j, k)) : L(j, k));
    const double pivot = diag.real();
    if (!(pivot > tol.posdef_tol)) {
      res.failed_pivot = static_cast<int>(j);
      res.pivot_value = pivot;
      return res;
    }
    const double root = std::sqrt(pivot);
    L(j, j) = root;
    for (std::size_t i = j + 1; i < n; ++i) {
      cplx s = S(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= L(i, k) * (hermitian ? std::conj(L(j, k)) : L(j, k));
      L(i, j) = s / root;
    }
  }
  res.ok = true;
  res.L = std::move(L);
  return res;
}

CMat cholesky_posdef(const CMat& S, bool hermitian, const Tolerances& tol) {
  if (!S.square()) fail(ErrorCode::DimensionMismatch, "cholesky of non-square matrix");
  const double asym = relative_asymmetry(S, hermitian);
  if (asym > tol.sym_tol) {
    fail(hermitian ? ErrorCode::NotHermitian : ErrorCode::NotSymmetric,
         hermitian ? "matrix is not Hermitian" : "matrix is not symmetric", asym);
  }
  if (!hermitian) {
    for (const auto& x : S.data()) {
      if (std::abs(x.imag()) > tol.sym_tol * std::max(1.0, max_abs(S))) {
        fail(ErrorCode::NotSymmetric, "real-symmetric Cholesky given complex entries", std::abs(x.imag()));
      }
    }
  }
  auto res = try_cholesky(S, hermitian, tol);
  if (!res.ok) {
    fail(ErrorCode::NotPositiveDefinite,
         "Cholesky pivot " + std::to_string(res.failed_pivot) + " is not positive", -res.pivot_value);
  }
  return res.L;
}

RMat cholesky_posdef(const RMat& S, const Tolerances& tol) {
  return real(cholesky_posdef(complexify(S), false, tol));
}

RMat symmetrize_checked(const RMat& M, const char* what, const Tolerances& tol) {
  if (!M.square()) fail(ErrorCode::DimensionMismatch, std::string(what) + " must be square");
  const double asym = relative_asymmetry(M);
  if (asym > tol.sym_tol) fail(ErrorCode::NotSymmetric, std::string(what) + " is not symmetric", asym);
  return symmetric_part(M);
}

CMat symmetrize_checked(const CMat& M, const char* what, const Tolerances& tol) {
  if (!M.square()) fail(ErrorCode::DimensionMismatch, std::string(what) + " must be square");
  const double asym = relative_asymmetry(M, false);
  if (asym > tol.sym_tol) fail(ErrorCode::NotSymmetric, std::string(what) + " is not symmetric", asym);
  return symmetric_part(M);
}

double infinity_norm(const CMat& M) {
  double best = 0.0;
  for (std::size_t i = 0; i < M.rows(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < M.cols(); ++j) row += std::abs(M(i, j));
    best = std::max(best, row);
  }
  return best;
}

CMat matrix_inverse(const CMat& M, const Tolerances& tol) {
  if (!M.square()) fail(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  if (!all_finite(M)) fail(ErrorCode::NonFinite, "matrix has non-finite entries");
  CMat inv = inverse(M, tol);
  const double cond = infinity_norm(M) * infinity_norm(inv);
  if (cond > tol.cond_max) fail(ErrorCode::SingularMatrix, "condition estimate exceeds cond_max", cond);
  return inv;
}

double condition_number(const RMat& M) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(M));
  const auto& s = svd.singularValues();
  if (s.size() == 0) return 1.0;
  const double lo = s(s.size() - 1);
  return lo > 0.0 ? s(0) / lo : std::numeric_limits<double>::infinity();
}

double condition_number(const CMat& M) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(M));
  const auto& s = svd.singularValues();
  if (s.size() == 0) return 1.0;
  const double lo = s(s.size() - 1);
  return lo > 0.0 ? s(0) / lo : std::numeric_limits<double>::infinity();
}

std::vector<double> singular_values(const RMat& M) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(M));
  const auto& s = svd.singularValues();
  return std::vector<double>(s.data(), s.data() + s.size());
}

int numerical_rank(const RMat& M, double rel_tol) {
  const auto s = singular_values(M);
  if (s.empty() || s[0] == 0.0) return 0;
  return static_cast<int>(std::count_if(s.begin(), s.end(), [&](double v) { return v > rel_tol * s[0]; }));
}

CMat unitary_from_qr(const CMat& G) {
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(to_eigen(G));
  const long n = static_cast<long>(G.rows());
  Eigen::MatrixXcd Q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
  const Eigen::MatrixXcd R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (long j = 0; j < n; ++j) {
    const cplx d = R(j, j);
    const double a = std::abs(d);
    if (a > 0.0) Q.col(j) *= d / a;
  }
  CMat out(G.rows(), G.cols());
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Q(i, j);
  return out;
}

std::vector<double> symmetric_eigenvalues(const RMat& S) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(S), Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

RMat expm(const RMat& A) {
  int squarings = 0;
  double norm = max_abs(A) * static_cast<double>(A.rows());
  while (norm > 0.5) {
    norm *= 0.5;
    ++squarings;
  }
  const RMat As = std::ldexp(1.0, -squarings) * A;
  RMat term = RMat::identity(A.rows());
  RMat sum = term;
  for (int k = 1; k <= 20; ++k) {
    term = (1.0 / k) * (term * As);
    sum = sum + term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

namespace {
constexpr double kDefectFloor = 1e-12;
}  // namespace

double relative_defect(cplx a, cplx b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) / (scale < kDefectFloor ? 1.0 : scale);
}

double relative_defect(const CMat& A, const CMat& B) {
  const double scale = std::max(max_abs(A), max_abs(B));
  return max_abs_diff(A, B) / (scale < kDefectFloor ? 1.0 : scale);
}

double relative_defect(const RMat& A, const RMat& B) { return relative_defect(complexify(A), complexify(B)); }

}  // namespace sj
