#include "test_util.hpp"

#include "sj/actions.hpp"
#include "sj/errors.hpp"
#include "sj/reduction.hpp"

#include <set>

using namespace sjt;

namespace {

// Exhaustive search over the free group on T, T⁻¹, S, words of length <= depth.
bool reachable(cplx from, cplx to, int depth) {
  std::vector<cplx> layer{from};
  for (int d = 0; d <= depth; ++d) {
    for (const cplx& z : layer)
      if (std::abs(z - to) < 1e-9) return true;
    if (d == depth) break;
    std::vector<cplx> next;
    next.reserve(layer.size() * 3);
    for (const cplx& z : layer) {
      next.push_back(z + 1.0);
      next.push_back(z - 1.0);
      next.push_back(-1.0 / z);
    }
    // Collapse duplicates so the layer stays small.
    std::set<std::pair<long long, long long>> seen;
    layer.clear();
    for (const cplx& z : next)
      if (seen.insert({std::llround(z.real() * 1e10), std::llround(z.imag() * 1e10)}).second) layer.push_back(z);
  }
  return false;
}

}  // namespace

TEST_CASE("Minkowski reduction") {
  CHECK(is_minkowski_reduced(RMat::identity(3)).member());
  CHECK(is_minkowski_reduced(rmat(2, 2, {1, 0.3, 0.3, 1})).member());
  CHECK_FALSE(is_minkowski_reduced(rmat(2, 2, {1, 0.6, 0.6, 1})).member());
  const auto r = minkowski_reduce(rmat(2, 2, {1, 0.6, 0.6, 1}));
  CHECK(r.membership.member());
  CHECK(determinant(r.Y) == doctest::Approx(0.64));
  CHECK(max_abs_diff(r.U * rmat(2, 2, {1, 0.6, 0.6, 1}) * transpose(r.U), r.Y) < 1e-14);
  const auto same = minkowski_reduce(RMat::identity(2));
  CHECK(max_abs_diff(same.U, RMat::identity(2)) == 0.0);
  CHECK(minkowski_reduce(rmat(1, 1, {3.5})).Y(0, 0) == 3.5);
  Rng rng(61);
  for (int t = 0; t < 100; ++t) {
    const RMat Y = rng.posdef(3, 2.0);
    const auto m = minkowski_reduce(Y);
    CHECK(m.membership.member());
    CHECK(std::abs(determinant(m.U)) == doctest::Approx(1.0));
    CHECK(relative_defect(cplx(determinant(m.Y)), cplx(determinant(Y))) < 1e-12);
  }
}

TEST_CASE("Siegel reduction, n = 1") {
  const auto r = siegel_reduce(spoint({5.0, 1.0}));
  CHECK(std::abs(r.point.omega()(0, 0) - kI) < 1e-15);
  REQUIRE(r.word.size() == 1);
  CHECK(r.word[0] == "T^-5");

  const auto inside = siegel_reduce(spoint({0.2, 1.5}));
  CHECK(inside.word.empty());
  CHECK(std::abs(inside.point.omega()(0, 0) - cplx(0.2, 1.5)) == 0.0);

  const cplx tau(0.3, 0.4);
  const auto q = siegel_reduce(spoint(tau));
  const cplx red = q.point.omega()(0, 0);
  CHECK(std::abs(red.real()) <= 0.5);
  CHECK(std::abs(red) >= 1.0);
  CHECK(reachable(tau, red, 10));

  Rng rng(62);
  for (int t = 0; t < 200; ++t) {
    const auto p = siegel_action(rng.symplectic(1, 1.5), rng.siegel_point(1)).image;
    const auto a = siegel_reduce(p);
    CHECK(a.membership.member());
    CHECK(siegel_reduce(a.point).word.empty());
    CHECK(std::abs(siegel_action(a.transform, p).image.omega()(0, 0) - a.point.omega()(0, 0)) < 1e-10);
  }
}

TEST_CASE("Siegel reduction, n = 2") {
  Rng rng(63);
  for (int t = 0; t < 50; ++t) {
    const auto p = siegel_action(rng.symplectic(2, 1.0), rng.siegel_point(2)).image;
    const auto r = siegel_reduce(p);
    CHECK(r.membership.S1.holds);
    CHECK(r.membership.S2.holds);
    CHECK(r.membership.S3.holds);
    CHECK(relative_defect(siegel_action(r.transform, p).image.omega(), r.point.omega()) < 1e-9);
  }
  CHECK(generator_ball_2().size() > 100);
  CHECK_THROWS_AS(siegel_reduce(SiegelPoint::i_identity(3)), Error);
}

TEST_CASE("Siegel-Jacobi fundamental domain") {
  CHECK(jacobi_domain_membership(JacobiPoint::make(SiegelPoint::i_identity(1), RMat(1, 1), RMat(1, 1))).PZ.holds);
  CHECK(jacobi_domain_membership(jpoint(kI, {0.5, 0.5})).PZ.holds);
  CHECK_FALSE(jacobi_domain_membership(jpoint(kI, 1.5)).PZ.holds);
  const auto [lam, mu] = parallelotope_coordinates(jpoint(kI, {0.5, 0.5}));
  CHECK(lam(0, 0) == doctest::Approx(0.5));
  CHECK(mu(0, 0) == doctest::Approx(0.5));

  const auto r = jacobi_reduce(jpoint(kI, {2.3, 0.7}));
  CHECK(r.membership.member());
  CHECK(std::abs(r.point.Z()(0, 0) - cplx(0.3, 0.7)) < 1e-14);

  const auto m = jacobi_reduce(jpoint({0.1, 1.2}, {0.2, 0.3}));
  CHECK(m.word.empty());

  Rng rng(64);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 2), k = 1 + static_cast<std::size_t>((t / 2) % 2);
    const auto p = rng.jacobi_point(n, k);
    const auto q = jacobi_reduce(p);
    CHECK(q.membership.member());
    const auto img = jacobi_action(q.transform, p).image;
    CHECK(relative_defect(img.Z(), q.point.Z()) < 1e-9);
  }
}
