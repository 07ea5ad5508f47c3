#include "test_util.hpp"

#include "sj/actions.hpp"
#include "sj/cayley.hpp"
#include "sj/chart.hpp"
#include "sj/maass.hpp"
#include "sj/metrics.hpp"
#include "sj/operators.hpp"

using namespace sjt;

namespace {

const Chart J11 = Chart::jacobi(1, 1);
const MetricScales kUnit = MetricScales::make(1.0, 1.0);

ScalarField constant(const Chart& c) { return constant_field(c, 2.5); }

}  // namespace

TEST_CASE("Siegel Laplacian") {
  Rng rng(31);
  const cplx s(1.7, 0.4);
  for (int t = 0; t < 10; ++t) {
    const auto p = rng.siegel_point(1);
    const double y = p.Y()(0, 0);
    CHECK(relative_defect(laplacian_siegel(y_power(Chart::siegel(1), s), p, 1.0), s * (s - 1.0) * std::pow(y, s)) <
          1e-12);
  }
  CHECK(std::abs(laplacian_siegel(constant(Chart::siegel(2)), rng.siegel_point(2), 1.0)) < 1e-14);
  for (int t = 0; t < 10; ++t) {
    const auto p = rng.siegel_point(2);
    const auto f = random_test_field(Chart::siegel(2), derive_seed(31, "f", t));
    CHECK(relative_defect(laplacian_siegel(f, p, 1.0), laplace_beltrami(siegel_metric_field(2, 1.0), f.eval, coords(p))) <
          1e-6);
  }
}

TEST_CASE("Siegel-Jacobi Laplacian on catalog functions") {
  Rng rng(32);
  const cplx s(0.6, -0.8);
  for (int t = 0; t < 10; ++t) {
    const auto p = rng.jacobi_point(1, 1);
    const double y = p.base().Y()(0, 0), v = p.V()(0, 0);
    CHECK(relative_defect(laplacian_jacobi(y_power(J11, s), p, kUnit), s * (s - 1.0) * std::pow(y, s)) < 1e-12);
    const auto ysv = field(J11, "y^s v", [s](std::span<const Jet> x) { return pow(x[1], s) * x[3]; });
    CHECK(relative_defect(laplacian_jacobi(ysv, p, kUnit), s * (s + 1.0) * std::pow(y, s) * v) < 1e-12);
    for (int i = 0; i < 4; ++i) {
      const auto lin = field(J11, "coord", [i](std::span<const Jet> x) { return x[static_cast<std::size_t>(i)]; });
      CHECK(std::abs(laplacian_jacobi(lin, p, kUnit)) < 1e-12);
    }
  }
}

TEST_CASE("closed-form Laplacians match Laplace-Beltrami") {
  Rng rng(33);
  for (auto [n, m] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    for (int t = 0; t < 4; ++t) {
      const auto s = MetricScales::make(rng.uniform(0.5, 2), rng.uniform(0.5, 2));
      const auto p = rng.jacobi_point(n, m);
      const auto f = random_test_field(Chart::jacobi(n, m), derive_seed(33, "j", n * 100 + m * 10 + t), true);
      CHECK(relative_defect(laplacian_jacobi(f, p, s), laplace_beltrami(jacobi_metric_field(n, m, s), f.eval, coords(p))) <
            1e-6);
      const auto d = rng.disk_point(n, m);
      const auto g = random_test_field(Chart::disk(n, m), derive_seed(33, "d", n * 100 + m * 10 + t));
      CHECK(relative_defect(laplacian_disk(g, d, s), laplace_beltrami(disk_metric_field(n, m, s), g.eval, coords(d))) <
            1e-6);
    }
  }
}

TEST_CASE("displayed trace formula differs from Laplace-Beltrami for n = 2") {
  Rng rng(34);
  // n = 1: the display and the symmetrized form coincide.
  {
    const auto p = rng.jacobi_point(1, 2);
    const auto f = random_test_field(Chart::jacobi(1, 2), 341);
    const auto disp = laplacian_jacobi_displayed_op(1, 2, kUnit).evaluate(f, coords(p))(0, 0);
    CHECK(relative_defect(disp, laplacian_jacobi(f, p, kUnit)) < 1e-12);
  }
  // n = 2 with V ≠ 0: a clear discrepancy.
  const auto p = rng.jacobi_point(2, 1);
  const auto f = random_test_field(Chart::jacobi(2, 1), 342);
  const auto disp = laplacian_jacobi_displayed_op(2, 1, kUnit).evaluate(f, coords(p))(0, 0);
  const auto lb = laplace_beltrami(jacobi_metric_field(2, 1, kUnit), f.eval, coords(p));
  CHECK(relative_defect(disp, lb) > 1e-3);
  CHECK(relative_defect(laplacian_jacobi(f, p, kUnit), lb) < 1e-6);
}

TEST_CASE("disk Laplacian transported through the Cayley map") {
  Rng rng(35);
  for (int t = 0; t < 10; ++t) {
    const auto d = rng.disk_point(2, 1);
    const auto f = random_test_field(Chart::jacobi(2, 1), derive_seed(35, "f", t));
    const auto pulled = compose(f, partial_cayley_map(2, 1), Chart::disk(2, 1));
    CHECK(relative_defect(laplacian_disk(pulled, d, kUnit), laplacian_jacobi(f, partial_cayley(d), kUnit)) < 1e-6);
  }
  const auto eta2 = field(Chart::disk(1, 1), "|eta|^2", [](std::span<const Jet> x) { return x[2] * x[2] + x[3] * x[3]; });
  const auto origin = DiskPoint::make(CMat(1, 1), CMat(1, 1));
  CHECK(std::abs(laplacian_disk(eta2, origin, kUnit) - laplacian_jacobi(compose(eta2, partial_cayley_inverse_map(1, 1), J11),
                                                                        partial_cayley(origin), kUnit)) < 1e-10);
  CHECK(std::abs(laplacian_disk(constant(Chart::disk(1, 1)), origin, kUnit)) < 1e-14);
}

TEST_CASE("generators on H_1 x C") {
  Rng rng(36);
  const auto p = rng.jacobi_point(1, 1);
  const double y = p.base().Y()(0, 0);
  const auto uv = field(J11, "u^2+v^2", [](std::span<const Jet> x) { return x[2] * x[2] + x[3] * x[3]; });
  CHECK(std::abs(generator_op("Psi").evaluate(uv, coords(p))(0, 0) - 4.0 * y) < 1e-12);
  const cplx s(2.2, 0.5);
  CHECK(relative_defect(generator_op("D").evaluate(y_power(J11, s), coords(p))(0, 0), s * (s - 1.0) * std::pow(y, s)) <
        1e-12);
  for (const char* name : {"D", "Psi", "D1", "D2"}) {
    CHECK(max_abs(generator_op(name).evaluate(constant(J11), coords(p))) < 1e-14);
    for (int t = 0; t < 10; ++t) {
      const auto f = random_test_field(J11, derive_seed(36, name, t));
      CHECK(invariance_residual(generator_op(name), jacobi_action_map(rng.jacobi_element(1, 1)), f,
                                coords(rng.jacobi_point(1, 1))) < 1e-8);
    }
  }
  CHECK(commutator_residual(constant(J11), p) < 1e-14);
  CHECK(commutator_residual(y_power(J11, s), p) < 1e-10);
  for (int t = 0; t < 20; ++t) {
    CHECK(commutator_residual(random_test_field(J11, derive_seed(36, "c", t)), rng.jacobi_point(1, 1)) < 1e-8);
  }
}

TEST_CASE("K and T operators") {
  Rng rng(37);
  const auto z11 = field(Chart::jacobi(2, 2), "z11", [](std::span<const Jet> x) {
    const Chart c = Chart::jacobi(2, 2);
    return x[static_cast<std::size_t>(c.iu(0, 0))] + kI * x[static_cast<std::size_t>(c.iv(0, 0))];
  });
  const auto p = rng.jacobi_point(2, 2);
  CHECK(max_abs(op_T_matrix(2, 2).evaluate(z11, coords(p))) < 1e-14);
  CHECK(max_abs(op_K_det(2, 2).evaluate(z11, coords(p))) < 1e-14);
  for (std::size_t n : {1u, 2u}) {
    for (int t = 0; t < 10; ++t) {
      const auto f = random_test_field(Chart::jacobi(n, 1), derive_seed(37, "K", n * 100 + t));
      CHECK(invariance_residual(op_K_det(n, 1), jacobi_action_map(rng.jacobi_element(n, 1)), f,
                                coords(rng.jacobi_point(n, 1))) < 1e-8);
      const auto g = random_test_field(Chart::jacobi(n, 2), derive_seed(37, "T", n * 100 + t));
      CHECK(invariance_residual(op_T_matrix(n, 2), jacobi_action_map(rng.jacobi_element(n, 2)), g,
                                coords(rng.jacobi_point(n, 2))) < 1e-8);
    }
  }
  // Heisenberg-only elements.
  for (int t = 0; t < 10; ++t) {
    const auto g = JacobiGroupElement::make(SymplecticMatrix::identity(2), rng.heisenberg(2, 1));
    const auto f = random_test_field(Chart::jacobi(2, 1), derive_seed(37, "H", t));
    CHECK(invariance_residual(op_T_matrix(2, 1), jacobi_action_map(g), f, coords(rng.jacobi_point(2, 1))) < 1e-10);
  }
}

TEST_CASE("Maass operators") {
  Rng rng(38);
  const auto p = rng.siegel_point(1);
  const auto y = field(Chart::siegel(1), "y", [](std::span<const Jet> x) { return x[1]; });
  CHECK(std::abs(maass_operators(y, p).K(0, 0) - p.Y()(0, 0)) < 1e-14);
  const auto c = maass_operators(constant(Chart::siegel(2)), rng.siegel_point(2));
  CHECK(max_abs(c.K) == 0.0);
  CHECK(max_abs(c.Lambda) == 0.0);
  // Real f: Λf = −conj(Kf).
  for (int t = 0; t < 10; ++t) {
    const auto f = random_test_field(Chart::siegel(2), derive_seed(38, "r", t));
    const auto mv = maass_operators(f, rng.siegel_point(2));
    CHECK(max_abs_diff(mv.Lambda, CMat(-conj(mv.K))) < 1e-12);
  }
  // H_1 = −Δ.
  for (int t = 0; t < 10; ++t) {
    const auto q = rng.siegel_point(2);
    const auto f = random_test_field(Chart::siegel(2), derive_seed(38, "h", t));
    CHECK(relative_defect(maass_Hj(f, q, 1), -laplacian_siegel(f, q, 1.0)) < 1e-12);
    CHECK(std::abs(maass_Hj(constant(Chart::siegel(2)), q, 2)) < 1e-14);
  }
  for (int j : {1, 2}) {
    for (int t = 0; t < 10; ++t) {
      const auto f = random_test_field(Chart::siegel(2), derive_seed(38, "i", j * 100 + t));
      CHECK(invariance_residual(maass_H(2, j), siegel_action_map(rng.symplectic(2)), f, coords(rng.siegel_point(2))) <
            1e-6);
    }
  }
}

TEST_CASE("symmetrization of q1") {
  Rng rng(39);
  const auto zero = symmetrize_polynomial_to_operator({0.0}, 2);
  const auto f = random_test_field(Chart::siegel(2), 390);
  CHECK(std::abs(zero.op.evaluate(f, coords(rng.siegel_point(2)))(0, 0)) == 0.0);
  const auto S1 = symmetrize_polynomial_to_operator({0.0, 1.0}, 1);
  const cplx s(1.3, 0.2);
  for (int t = 0; t < 30; ++t) {
    const auto p = rng.siegel_point(1);
    const cplx want = laplacian_siegel(y_power(Chart::siegel(1), s), p, 1.0);
    CHECK(relative_defect(S1.op.evaluate(y_power(Chart::siegel(1), s), coords(p))(0, 0), want) < 1e-6);
  }
  const auto S2 = symmetrize_polynomial_to_operator({0.0, 1.0}, 2);
  for (int t = 0; t < 10; ++t) {
    const auto p = rng.siegel_point(2);
    const auto g = random_test_field(Chart::siegel(2), derive_seed(39, "f", t));
    CHECK(relative_defect(S2.op.evaluate(g, coords(p))(0, 0), laplacian_siegel(g, p, 1.0)) < 1e-5);
  }
  CHECK_THROWS_AS(symmetrize_polynomial_to_operator({0.0, 0.0, 1.0}, 2), Error);
}

TEST_CASE("invariance residual of the identity element") {
  Rng rng(40);
  const auto f = random_test_field(Chart::jacobi(2, 1), 400);
  CHECK(invariance_residual(laplacian_jacobi_op(2, 1, kUnit), jacobi_action_map(JacobiGroupElement::identity(2, 1)), f,
                            coords(rng.jacobi_point(2, 1))) < 1e-14);
  for (int t = 0; t < 10; ++t) {
    const auto g = random_test_field(Chart::jacobi(2, 2), derive_seed(40, "g", t));
    CHECK(invariance_residual(laplacian_jacobi_op(2, 2, kUnit), jacobi_action_map(rng.jacobi_element(2, 2)), g,
                              coords(rng.jacobi_point(2, 2))) < 1e-8);
  }
}
