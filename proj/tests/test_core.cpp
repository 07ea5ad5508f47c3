#include "test_util.hpp"

#include "sj/errors.hpp"
#include "sj/linalg.hpp"
#include "sj/types.hpp"

using namespace sjt;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected sj::Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("matrix inverse") {
  CHECK(max_abs_diff(matrix_inverse(CMat::identity(3)), CMat::identity(3)) == 0.0);
  const CMat d = cmat(2, 2, {2.0, 0.0, 0.0, kI});
  const CMat di = matrix_inverse(d);
  CHECK(std::abs(di(0, 0) - 0.5) < 1e-15);
  CHECK(std::abs(di(1, 1) + kI) < 1e-15);
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    CMat M = rng.complex_matrix(4, 4) + CMat(4.0 * CMat::identity(4));
    CHECK(max_abs_diff(M * matrix_inverse(M), CMat::identity(4)) < 1e-12);
  }
  CHECK(code_of([] { matrix_inverse(CMat(2, 2, cplx(1.0))); }) == ErrorCode::SingularMatrix);
}

TEST_CASE("cholesky") {
  CHECK(max_abs_diff(cholesky_posdef(RMat::identity(2)), RMat::identity(2)) == 0.0);
  const RMat S = rmat(2, 2, {2, 1, 1, 2});
  const RMat L = cholesky_posdef(S);
  CHECK(max_abs_diff(L * transpose(L), S) < 1e-14);
  CHECK(L(0, 1) == 0.0);
  CHECK(code_of([] { cholesky_posdef(rmat(2, 2, {1, 2, 2, 1})); }) == ErrorCode::NotPositiveDefinite);
}

TEST_CASE("relative defect") {
  CHECK(relative_defect(cplx(1.0), cplx(1.0)) == 0.0);
  CHECK(relative_defect(cplx(2.0), cplx(1.0)) == doctest::Approx(0.5));
  // Below the scale floor it is the absolute difference.
  CHECK(relative_defect(cplx(0.0), cplx(1e-14)) == doctest::Approx(1e-14));
}

TEST_CASE("symplectic matrices") {
  const auto I = SymplecticMatrix::make(RMat::identity(2), RMat(2, 2), RMat(2, 2), RMat::identity(2));
  CHECK(max_abs_diff(I.full(), RMat::identity(4)) == 0.0);
  const auto J = SymplecticMatrix::make(RMat(1, 1), RMat::identity(1), -RMat::identity(1), RMat(1, 1));
  CHECK(symplectic_defect(J.full()) == 0.0);
  // Non-symmetric B breaks ᵗM J M = J.
  CHECK(code_of([] {
          SymplecticMatrix::make(RMat::identity(2), rmat(2, 2, {0, 1, 0, 0}), RMat(2, 2), RMat::identity(2));
        }) == ErrorCode::NotSymplectic);
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto M = rng.symplectic(2);
    CHECK(max_abs_diff((M * M.inverse()).full(), RMat::identity(4)) < 1e-12);
  }
}

TEST_CASE("point validation") {
  CHECK(code_of([] { SiegelPoint::make(RMat(1, 1), rmat(1, 1, {-1})); }) == ErrorCode::NotPositiveDefinite);
  CHECK(code_of([] { SiegelPoint::make(rmat(2, 2, {0, 1, 0, 0}), RMat::identity(2)); }) == ErrorCode::NotSymmetric);
  CHECK(code_of([] { SiegelPoint::make(RMat(1, 1), rmat(1, 1, {std::nan("")})); }) == ErrorCode::NonFinite);
  CHECK(code_of([] { DiskPoint::make(CMat(1, 1, cplx(1.2)), CMat(1, 1)); }) == ErrorCode::NotPositiveDefinite);
  CHECK(code_of([] {
          JacobiPoint::make(SiegelPoint::i_identity(2), RMat(1, 3), RMat(1, 3));
        }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("seeded generator is deterministic") {
  Rng a(derive_seed(42, "x")), b(derive_seed(42, "x"));
  CHECK(max_abs_diff(a.jacobi_point(2, 1).omega(), b.jacobi_point(2, 1).omega()) == 0.0);
  CHECK(derive_seed(42, "x") != derive_seed(42, "y"));
  CHECK(derive_seed(42, "x", 1) != derive_seed(42, "x", 2));
  Rng r(1);
  for (int t = 0; t < 20; ++t) {
    const CMat U = r.unitary(3);
    CHECK(max_abs_diff(U * adjoint(U), CMat::identity(3)) < 1e-13);
  }
}
