#include "test_util.hpp"

#include "sj/actions.hpp"
#include "sj/cayley.hpp"
#include "sj/chart.hpp"
#include "sj/linalg.hpp"
#include "sj/metrics.hpp"

using namespace sjt;

TEST_CASE("jets agree with closed-form derivatives") {
  const double pt[] = {0.7, -0.3};
  const auto v = seed_variables(pt, 4);
  const Jet f = exp(v[0] * v[1]) + sin(v[0]) * pow(v[1] + 2.0, cplx(0.5));
  const double x = 0.7, y = -0.3;
  CHECK(std::abs(f.value() - (std::exp(x * y) + std::sin(x) * std::sqrt(y + 2))) < 1e-15);
  CHECK(std::abs(f.partial({0}) - (y * std::exp(x * y) + std::cos(x) * std::sqrt(y + 2))) < 1e-14);
  CHECK(std::abs(f.partial({0, 1}) - ((1 + x * y) * std::exp(x * y) + std::cos(x) * 0.5 / std::sqrt(y + 2))) < 1e-14);
  CHECK(std::abs(f.partial({0, 0, 0, 0}) - (std::pow(y, 4) * std::exp(x * y) + std::sin(x) * std::sqrt(y + 2))) <
        1e-13);
  const Jet q = f / (v[0] + 3.0);
  CHECK(std::abs((q * (v[0] + 3.0) - f).partial({1, 1, 0})) < 1e-14);
}

TEST_CASE("Siegel metric") {
  CHECK(max_abs_diff(siegel_metric_tensor(spoint(kI), 1.0).G, RMat::identity(2)) < 1e-15);
  const auto G = siegel_metric_tensor(spoint({0.4, 2.0}), 1.0).G;
  CHECK(max_abs_diff(G, RMat(0.25 * RMat::identity(2))) < 1e-15);
  // Ω = iI₂: weight 1 on diagonal coordinates, 2 on the off-diagonal pair.
  const auto G2 = siegel_metric_tensor(SiegelPoint::i_identity(2), 1.0).G;
  const Chart c = Chart::siegel(2);
  CHECK(G2(c.ix(0, 0), c.ix(0, 0)) == doctest::Approx(1.0));
  CHECK(G2(c.ix(0, 1), c.ix(0, 1)) == doctest::Approx(2.0));
  CHECK(G2(c.iy(0, 1), c.iy(0, 1)) == doctest::Approx(2.0));
  CHECK(G2(c.ix(0, 0), c.ix(0, 1)) == doctest::Approx(0.0));
}

TEST_CASE("Siegel-Jacobi metric examples") {
  const auto s = MetricScales::make(1.0, 1.0);
  CHECK(max_abs_diff(jacobi_metric_tensor(jpoint(kI, 0.0), s).G, RMat::identity(4)) < 1e-15);
  const auto G = jacobi_metric_tensor(jpoint(kI, kI), s).G;
  CHECK(G(0, 0) == doctest::Approx(2.0));
  CHECK(G(0, 2) == doctest::Approx(-1.0));
  CHECK(G(2, 2) == doctest::Approx(1.0));
}

TEST_CASE("Siegel-Jacobi metric against a polarized finite difference") {
  Rng rng(21);
  const auto p = rng.jacobi_point(2, 1);
  const auto s = MetricScales::make(1.3, 0.7);
  const Chart chart = Chart::jacobi(2, 1);
  const auto G = jacobi_metric_tensor(p, s).G;
  const std::size_t d = chart.dim();
  auto form = [&](std::size_t i, std::size_t j) {
    std::vector<double> e(d, 0.0);
    e[i] += 1.0;
    e[j] += 1.0;
    const auto m = unpack<double>(chart, e);
    return jacobi_form(p.omega(), p.Z(), m.first, m.second, s.a, s.b).real();
  };
  auto diag = [&](std::size_t i) {
    std::vector<double> e(d, 0.0);
    e[i] = 1.0;
    const auto m = unpack<double>(chart, e);
    return jacobi_form(p.omega(), p.Z(), m.first, m.second, s.a, s.b).real();
  };
  double worst = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const double gij = i == j ? diag(i) : 0.5 * (form(i, j) - diag(i) - diag(j));
      worst = std::max(worst, std::abs(gij - G(i, j)));
    }
  CHECK(worst < 1e-8);
}

TEST_CASE("disk metric at the origin") {
  const auto G = disk_metric_tensor(DiskPoint::make(CMat(1, 1), CMat(1, 1)), MetricScales::make(1, 1)).G;
  CHECK(max_abs_diff(G, RMat(4.0 * RMat::identity(4))) < 1e-14);
  Rng rng(22);
  for (int t = 0; t < 20; ++t) {
    const auto g = disk_metric_tensor(rng.disk_point(2, 1), MetricScales::make(1, 1)).G;
    CHECK(try_cholesky(complexify(g), true).ok);
  }
}

TEST_CASE("disk metric is the Cayley pullback of the Siegel-Jacobi metric") {
  Rng rng(23);
  for (auto [n, m] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    for (int t = 0; t < 12; ++t) {
      const auto d = rng.disk_point(n, m);
      const auto s = MetricScales::make(rng.uniform(0.5, 2), rng.uniform(0.5, 2));
      const auto image = jacobi_metric_tensor(partial_cayley(d), s);
      const auto pulled = pullback_metric(partial_cayley_map(n, m), coords(d), image, Chart::disk(n, m));
      CHECK(relative_defect(pulled.G, disk_metric_tensor(d, s).G) < 1e-8);
    }
  }
}

TEST_CASE("pullback basics") {
  Rng rng(24);
  const auto p = rng.jacobi_point(1, 1);
  const auto G = jacobi_metric_tensor(p, MetricScales::make(1, 1));
  const ChartMap id = [](std::span<const Jet> v) { return std::vector<Jet>(v.begin(), v.end()); };
  CHECK(max_abs_diff(pullback_metric(id, coords(p), G, G.chart).G, G.G) == 0.0);
  // Linear map x ↦ S x.
  const RMat S = rng.normal_matrix(4, 4);
  const ChartMap lin = [&](std::span<const Jet> v) {
    std::vector<Jet> out(4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) out[i] += S(i, j) * v[j];
    return out;
  };
  CHECK(max_abs_diff(pullback_metric(lin, coords(p), G, G.chart).G, transpose(S) * G.G * S) < 1e-12);
}

TEST_CASE("metric invariance") {
  Rng rng(25);
  for (int t = 0; t < 20; ++t) {
    const auto g = rng.jacobi_element(2, 1);
    const auto p = rng.jacobi_point(2, 1);
    const auto s = MetricScales::make(1, 2);
    const auto pulled =
        pullback_metric(jacobi_action_map(g), coords(p), jacobi_metric_tensor(jacobi_action(g, p).image, s), Chart::jacobi(2, 1));
    CHECK(relative_defect(pulled.G, jacobi_metric_tensor(p, s).G) < 1e-8);
  }
}

TEST_CASE("volume density") {
  CHECK(volume_density(jpoint(kI, 0.3)) == doctest::Approx(1.0));
  CHECK(volume_density(jpoint(2.0 * kI, 0.0)) == doctest::Approx(0.125));
  Rng rng(26);
  for (int t = 0; t < 50; ++t) {
    const auto g = rng.jacobi_element(2, 2);
    const auto p = rng.jacobi_point(2, 2);
    const double jac = std::abs(determinant(jacobian(jacobi_action_map(g), coords(p))));
    const double lhs = volume_density(jacobi_action(g, p).image) * jac;
    CHECK(std::abs(lhs - volume_density(p)) / volume_density(p) < 1e-9);
  }
}

TEST_CASE("Laplace-Beltrami oracle basics") {
  const MetricField flat = [](std::span<const double> x) { return RMat::identity(x.size()); };
  const JetField f = [](std::span<const Jet> v) {
    Jet s;
    for (const auto& x : v) s += x * x;
    return s;
  };
  const double pt[] = {0.1, 0.2, 0.3};
  CHECK(std::abs(laplace_beltrami(flat, f, pt) - 6.0) < 1e-8);
  const double yp[] = {0.3, 1.7};
  const cplx s(1.4, 0.3);
  const auto ys = y_power(Chart::siegel(1), s);
  CHECK(relative_defect(laplace_beltrami(siegel_metric_field(1, 1.0), ys.eval, yp), s * (s - 1.0) * std::pow(1.7, s)) <
        1e-6);
}
