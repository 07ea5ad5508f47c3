#pragma once

#include "sj/config.hpp"
#include "sj/matrix.hpp"

#include <optional>

namespace sj {

struct CholeskyResult {
  bool ok = false;
  CMat L;                 // lower-triangular factor when ok
  int failed_pivot = -1;  // 0-based index of the first pivot <= posdef_tol
  double pivot_value = 0.0;
};

// Cholesky factorization S = L ᵗL̄ of a Hermitian (or, with hermitian=false,
// real symmetric) matrix. Never throws for indefinite input; see require_posdef.
CholeskyResult try_cholesky(const CMat& S, bool hermitian, const Tolerances& tol = default_tolerances());

// Throws NotHermitian / NotPositiveDefinite; returns L on success.
CMat cholesky_posdef(const CMat& S, bool hermitian, const Tolerances& tol = default_tolerances());
RMat cholesky_posdef(const RMat& S, const Tolerances& tol = default_tolerances());

// Largest |M_ij - M_ji| (or |M_ij - conj M_ji|) relative to max(1, max|M|).
double relative_asymmetry(const RMat& M);
double relative_asymmetry(const CMat& M, bool hermitian);

// Returns the symmetric part of M after checking the asymmetry is within sym_tol.
RMat symmetrize_checked(const RMat& M, const char* what, const Tolerances& tol = default_tolerances());
CMat symmetrize_checked(const CMat& M, const char* what, const Tolerances& tol = default_tolerances());

// Inverse with a residual check; SingularMatrix below pivot_tol or above cond_max.
CMat matrix_inverse(const CMat& M, const Tolerances& tol = default_tolerances());

// 2-norm condition number via SVD.
double condition_number(const RMat& M);
double condition_number(const CMat& M);

// Numerical rank from singular values above rel_tol * sigma_max.
int numerical_rank(const RMat& M, double rel_tol = 1e-10);

// Singular values, descending.
std::vector<double> singular_values(const RMat& M);

// Unitary factor of the QR decomposition of G with the R diagonal made positive.
CMat unitary_from_qr(const CMat& G);

// Symmetric eigen-decomposition helpers.
std::vector<double> symmetric_eigenvalues(const RMat& S);

// Matrix exponential of a (small) real matrix via scaling and squaring.
RMat expm(const RMat& A);

double infinity_norm(const CMat& M);

// |a − b| / max(|a|, |b|); absolute when both are below 1e-12.
double relative_defect(cplx a, cplx b);
// Max-entry version: max|A − B| / max(max|A|, max|B|), same floor.
double relative_defect(const CMat& A, const CMat& B);
double relative_defect(const RMat& A, const RMat& B);

}  // namespace sj
