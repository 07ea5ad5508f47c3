#include "test_util.hpp"

#include "sj/actions.hpp"
#include "sj/cayley.hpp"

using namespace sjt;

namespace {

SymplecticMatrix inversion1() { return SymplecticMatrix::inversion(1); }

JacobiGroupElement heis_only(const HeisenbergElement& h) {
  return JacobiGroupElement::make(SymplecticMatrix::identity(h.n()), h);
}

}  // namespace

TEST_CASE("Siegel action examples") {
  Rng rng(11);
  const auto p = rng.siegel_point(2);
  CHECK(max_abs_diff(siegel_action(SymplecticMatrix::identity(2), p).image.omega(), p.omega()) == 0.0);
  const auto fixed = siegel_action(SymplecticMatrix::inversion(2), SiegelPoint::i_identity(2)).image;
  CHECK(max_abs_diff(fixed.omega(), CMat(kI * CMat::identity(2))) < 1e-15);
  const auto T = SymplecticMatrix::translation(rmat(1, 1, {1}));
  CHECK(std::abs(siegel_action(T, spoint({0.3, 0.8})).image.omega()(0, 0) - cplx(1.3, 0.8)) < 1e-15);
}

TEST_CASE("Siegel action axioms") {
  Rng rng(12);
  for (int t = 0; t < 50; ++t) {
    const auto a = rng.symplectic(2), b = rng.symplectic(2);
    const auto p = rng.siegel_point(2);
    const auto lhs = siegel_action(a * b, p).image.omega();
    const auto rhs = siegel_action(a, siegel_action(b, p).image).image.omega();
    CHECK(relative_defect(lhs, rhs) < 1e-10);
  }
}

TEST_CASE("Jacobi group law") {
  const auto h0 = HeisenbergElement::make(rmat(1, 2, {1, 2}), rmat(1, 2, {3, -1}), rmat(1, 1, {0.5}));
  const auto h1 = HeisenbergElement::make(rmat(1, 2, {-2, 1}), rmat(1, 2, {0.5, 4}), rmat(1, 1, {-1}));
  const auto g = jacobi_multiply(heis_only(h0), heis_only(h1));
  CHECK(max_abs_diff(g.M.full(), RMat::identity(4)) == 0.0);
  CHECK(max_abs_diff(g.h.lambda(), h0.lambda() + h1.lambda()) == 0.0);
  CHECK(max_abs_diff(g.h.mu(), h0.mu() + h1.mu()) == 0.0);
  const RMat kappa = h0.kappa() + h1.kappa() + h0.lambda() * transpose(h1.mu()) - h0.mu() * transpose(h1.lambda());
  CHECK(max_abs_diff(g.h.kappa(), kappa) < 1e-15);

  Rng rng(13);
  for (int t = 0; t < 100; ++t) {
    const auto a = rng.jacobi_element(2, 2), b = rng.jacobi_element(2, 2), c = rng.jacobi_element(2, 2);
    CHECK(jacobi_distance(jacobi_multiply(jacobi_multiply(a, b), c), jacobi_multiply(a, jacobi_multiply(b, c))) < 1e-12);
    CHECK(jacobi_distance(jacobi_multiply(a, jacobi_inverse(a)), JacobiGroupElement::identity(2, 2)) < 1e-12);
  }
}

TEST_CASE("Jacobi action examples and axioms") {
  Rng rng(14);
  const auto p = rng.jacobi_point(2, 1);
  const auto id = jacobi_action(JacobiGroupElement::identity(2, 1), p).image;
  CHECK(max_abs_diff(id.Z(), p.Z()) == 0.0);

  const auto h = rng.heisenberg(2, 1);
  const auto img = jacobi_action(heis_only(h), p).image;
  CHECK(max_abs_diff(img.omega(), p.omega()) == 0.0);
  CHECK(max_abs_diff(img.Z(), CMat(p.Z() + h.lambda() * p.omega() + h.mu())) < 1e-14);

  const auto g = JacobiGroupElement::make(inversion1(), HeisenbergElement::zero(1, 1));
  const auto r = jacobi_action(g, jpoint(kI, 0.0));
  CHECK(std::abs(r.image.omega()(0, 0) - kI) < 1e-15);
  CHECK(std::abs(r.image.Z()(0, 0)) < 1e-15);
  CHECK(std::abs(r.factor(0, 0) + kI) < 1e-15);

  for (int t = 0; t < 50; ++t) {
    const auto a = rng.jacobi_element(2, 2), b = rng.jacobi_element(2, 2);
    const auto q = rng.jacobi_point(2, 2);
    const auto lhs = jacobi_action(jacobi_multiply(a, b), q).image;
    const auto rhs = jacobi_action(a, jacobi_action(b, q).image).image;
    CHECK(relative_defect(lhs.omega(), rhs.omega()) < 1e-10);
    CHECK(relative_defect(lhs.Z(), rhs.Z()) < 1e-10);
  }
}

TEST_CASE("disk action and the conjugated group") {
  Rng rng(15);
  const auto p = rng.disk_point(2, 1);
  CHECK(max_abs_diff(disk_action(DiskGroupElement::identity(2, 1), p).image.eta(), p.eta()) == 0.0);

  const auto gi = star_conjugate(JacobiGroupElement::identity(1, 1));
  CHECK(max_abs_diff(gi.P(), CMat::identity(1)) < 1e-15);
  CHECK(max_abs(gi.Q()) < 1e-15);

  const auto gs = star_conjugate(JacobiGroupElement::make(inversion1(), HeisenbergElement::zero(1, 1)));
  CHECK(std::abs(gs.P()(0, 0) - kI) < 1e-15);
  CHECK(std::abs(gs.Q()(0, 0)) < 1e-15);

  for (int t = 0; t < 50; ++t) {
    const auto g = star_conjugate(rng.jacobi_element(2, 2));
    const auto img = disk_action(g, rng.disk_point(2, 2)).image;
    CHECK(img.n() == 2);  // construction validated ‖W‖ < 1
  }
}

TEST_CASE("partial Cayley transform") {
  const auto c = partial_cayley(DiskPoint::make(CMat(2, 2), CMat(1, 2)));
  CHECK(max_abs_diff(c.omega(), CMat(kI * CMat::identity(2))) < 1e-15);
  CHECK(max_abs(c.Z()) == 0.0);

  const auto e = partial_cayley(DiskPoint::make(CMat(1, 1), CMat(1, 1, cplx(1, 2))));
  CHECK(std::abs(e.omega()(0, 0) - kI) < 1e-15);
  CHECK(std::abs(e.Z()(0, 0) - cplx(-4, 2)) < 1e-15);

  const auto back = partial_cayley_inverse(JacobiPoint::make(SiegelPoint::i_identity(1), RMat(1, 1), RMat(1, 1)));
  CHECK(max_abs(back.W()) < 1e-15);
  CHECK(max_abs(back.eta()) < 1e-15);

  Rng rng(16);
  for (int t = 0; t < 100; ++t) {
    const auto d = rng.disk_point(2, 2);
    const auto rt = partial_cayley_inverse(partial_cayley(d));
    CHECK(max_abs_diff(rt.W(), d.W()) < 1e-12);
    CHECK(max_abs_diff(rt.eta(), d.eta()) < 1e-12);
    const auto h = rng.jacobi_point(2, 1);
    const auto rt2 = partial_cayley(partial_cayley_inverse(h));
    CHECK(max_abs_diff(rt2.omega(), h.omega()) < 1e-12);
    CHECK(max_abs_diff(rt2.Z(), h.Z()) < 1e-12);
  }
}

TEST_CASE("Cayley compatibility") {
  Rng rng(17);
  CHECK(compatibility_residual(JacobiGroupElement::identity(2, 1), rng.disk_point(2, 1)) == 0.0);
  for (int t = 0; t < 50; ++t) {
    CHECK(compatibility_residual(heis_only(rng.heisenberg(1, 2)), rng.disk_point(1, 2)) < 1e-10);
    CHECK(compatibility_residual(rng.jacobi_element(2, 2), rng.disk_point(2, 2)) < 1e-9);
  }
}
