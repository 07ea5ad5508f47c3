#include "test_util.hpp"

#include "sj/actions.hpp"
#include "sj/bessel.hpp"
#include "sj/chart.hpp"
#include "sj/errors.hpp"
#include "sj/operators.hpp"
#include "sj/spectral.hpp"
#include "sj/volume.hpp"

#include <numbers>

using namespace sjt;

TEST_CASE("Siegel volumes") {
  const double pi = std::numbers::pi;
  CHECK(siegel_volume(1) == pi / 3.0);
  CHECK(relative_defect(cplx(siegel_volume(2)), cplx(std::pow(pi, 3) / 270.0)) < 1e-15);
  CHECK(relative_defect(cplx(siegel_volume(3)), cplx(std::pow(pi, 6) / 127575.0)) < 1e-15);
  CHECK(relative_defect(cplx(siegel_volume(4)), cplx(std::pow(pi, 10) / 200930625.0)) < 1e-15);
  CHECK_THROWS_AS(siegel_volume(5), Error);
  CHECK_THROWS_AS(siegel_volume(0), Error);
}

TEST_CASE("volume estimate") {
  const double est = volume_estimate_F1(1000000, 42);
  CHECK(std::abs(est - std::numbers::pi / 3.0) < 0.01 * std::numbers::pi / 3.0);
  // Independent of the worker count, and equal to the serial reference.
  const double serial = volume_estimate_F1_serial(100000, 7);
  for (int w : {1, 2, 3, 8}) CHECK(volume_estimate_F1(100000, 7, w) == serial);
  CHECK_THROWS_AS(volume_estimate_F1(0, 1), Error);
}

TEST_CASE("Bessel K") {
  const double pi = std::numbers::pi;
  CHECK(std::abs(bessel_K(0.5, 1.0) - std::sqrt(pi / 2.0) * std::exp(-1.0)) < 1e-13);
  // K_{3/2}(z) = √(π/2z) e^{-z} (1 + 1/z).
  for (double z : {0.2, 1.0, 4.0, 15.0}) {
    const double want = std::sqrt(pi / (2 * z)) * std::exp(-z) * (1 + 1 / z);
    CHECK(relative_defect(bessel_K(1.5, z), cplx(want)) < 1e-12);
  }
  for (double z : {0.3, 1.7, 6.0}) {
    const cplx s(0.8, 1.3);
    CHECK(relative_defect(bessel_K(s, z), bessel_K(-s, z)) < 1e-13);
  }
  double prev = 1e300;
  for (double z = 0.1; z < 10.0; z += 0.37) {
    const double k = bessel_K(0.7, z).real();
    CHECK(k < prev);
    prev = k;
  }
  // d/dz K_s = −(K_{s−1} + K_{s+1}) / 2.
  const auto d = bessel_K_derivatives(0.3, 2.0, 1);
  CHECK(relative_defect(d[1], -0.5 * (bessel_K(-0.7, 2.0) + bessel_K(1.3, 2.0))) < 1e-12);
  CHECK_THROWS_AS(bessel_K(0.5, -1.0), Error);
}

TEST_CASE("eigenfunction catalog") {
  CHECK(eigen_catalog().size() == 13);
  CHECK(eigen_entries_for_item(1).size() == 1);
  Rng rng(71);
  const cplx s(0.9, 0.6);
  for (const auto& e : eigen_catalog()) {
    for (int t = 0; t < 5; ++t) {
      const auto p = rng.jacobi_point(1, 1);
      CHECK(eigen_residual(e, s, p, 1.3) < (e.item == 1 ? 1e-5 : 1e-10));
    }
    const auto g = growth_check(e, s, rng.jacobi_point(1, 1), 30, 1.3);
    CHECK(g.holds);
  }
  CHECK(eigen_entry("y^s v").eigenvalue(s) == s * (s + 1.0));
  CHECK(eigen_entry("uv").eigenvalue(s) == cplx(0.0));
  CHECK_THROWS_AS(eigen_entry("nope"), Error);
}

TEST_CASE("Fourier coefficient equation") {
  CHECK(fourier_ode_residual(1.3, 1, 0, 0.7, 0.4) < 1e-5);
  const PlaneField zero = [](const Jet&, const Jet&) { return Jet(0.0); };
  CHECK(fourier_ode_residual(zero, 1.3, 1, 0, 0.7, 0.4) == 0.0);
  CHECK(fourier_ode_residual(cplx(0.4, 2.0), 0, 0, 1.1, -0.3) < 1e-10);
  Rng rng(72);
  for (int t = 0; t < 20; ++t) {
    CHECK(fourier_ode_residual(cplx(rng.uniform(0.5, 3), rng.uniform(-2, 2)), rng.integer(1, 3), 0, rng.uniform(0.1, 2),
                               rng.uniform(-1, 1)) < 1e-5);
  }
}

TEST_CASE("Eisenstein terms") {
  Rng rng(73);
  const auto p = rng.jacobi_point(1, 1);
  const cplx s(1.2, 0.3);
  const cplx base = std::pow(p.base().Y()(0, 0), s) * p.V()(0, 0);
  CHECK(relative_defect(eisenstein_term(EisensteinCoset{0, 1, 0}, s, p), base) < 1e-15);
  CHECK_THROWS_AS(coset_element(EisensteinCoset{2, 4, 0}), Error);
  const auto cosets = eisenstein_cosets(3);
  for (const auto& k : cosets) {
    const auto g = coset_element(k);
    CHECK(g.M.C()(0, 0) == static_cast<double>(k.c));
    CHECK(g.M.D()(0, 0) == static_cast<double>(k.d));
  }
  for (int t = 0; t < 50; ++t) {
    const auto g = coset_element(cosets[static_cast<std::size_t>(rng.integer(0, static_cast<long>(cosets.size()) - 1))]);
    const auto g0 = random_gamma_11(rng);
    const auto q = rng.jacobi_point(1, 1);
    CHECK(relative_defect(eisenstein_term(g, s, jacobi_action(g0, q).image), eisenstein_term(jacobi_multiply(g, g0), s, q)) <
          1e-10);
  }
  // Each term is y^s v transported by γ, hence a Δ-eigenfunction with eigenvalue s(s+1).
  const Chart J11 = Chart::jacobi(1, 1);
  const auto ysv = field(J11, "y^s v", [s](std::span<const Jet> x) { return pow(x[1], s) * x[3]; });
  for (int t = 0; t < 10; ++t) {
    const auto g = coset_element(cosets[static_cast<std::size_t>(t) % cosets.size()]);
    const auto term = compose(ysv, jacobi_action_map(g), J11);
    const auto q = rng.jacobi_point(1, 1);
    CHECK(relative_defect(term.value(coords(q)), eisenstein_term(g, s, q)) < 1e-12);
    CHECK(relative_defect(laplacian_jacobi(term, q, MetricScales::make(1, 1)), s * (s + 1.0) * eisenstein_term(g, s, q)) <
          1e-9);
  }
}

TEST_CASE("Riemann conditions") {
  const auto r = riemann_conditions_check(kI * CMat::identity(2));
  CHECK(r.rc1_defect == 0.0);
  CHECK(r.rc2_min_eig == doctest::Approx(2.0));
  CHECK(r.rc1);
  CHECK(r.rc2);
  Rng rng(74);
  for (int t = 0; t < 20; ++t) {
    const auto q = riemann_conditions_check(rng.siegel_point(3).omega());
    CHECK(q.rc1_defect < 1e-12);
    CHECK(q.rc2);
  }
  CHECK_FALSE(riemann_conditions_check(CMat(1, 1, cplx(0.2, -1.0))).rc2);
}

TEST_CASE("torus characters") {
  const auto P = spoint({0.3, 1.2});
  Rng rng(75);
  const CharacterIndex zero{RMat(1, 1), RMat(1, 1)};
  CHECK(std::abs(torus_character(P, zero, rng.complex_matrix(1, 1)) - 1.0) == 0.0);
  for (int t = 0; t < 20; ++t) {
    const CharacterIndex idx{RMat(1, 1, static_cast<double>(rng.integer(-3, 3))),
                             RMat(1, 1, static_cast<double>(rng.integer(-3, 3)))};
    const CMat Z = rng.complex_matrix(1, 1);
    const CMat S(1, 1, cplx(static_cast<double>(rng.integer(-4, 4))));
    const cplx e = torus_character(P, idx, Z);
    CHECK(std::abs(torus_character(P, idx, CMat(Z + S)) - e) < 1e-12);
    CHECK(std::abs(torus_character(P, idx, CMat(Z + S * P.omega())) - e) < 1e-12);
  }
  const auto single = torus_gram(P, {zero}, 8);
  CHECK(std::abs(single(0, 0) - 1.0) < 1e-15);
  for (cplx om : {kI, cplx(0.3, 1.2)}) {
    const auto G = torus_gram(spoint(om), character_box(1), 64);
    CHECK(max_abs_diff(G, CMat::identity(9)) < 1e-6);
    CHECK(max_abs_diff(torus_gram(spoint(om), character_box(1), 64, 1), G) == 0.0);
  }
  CHECK(character_box(2).size() == 25);
  CHECK_THROWS_AS(torus_gram(P, character_box(2), 3), Error);
}
