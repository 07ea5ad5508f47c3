#include "sj/maass.hpp"

#include "sj/linalg.hpp"
#include "sj/random.hpp"

#include <cmath>

namespace sj {

namespace {

JMat two_i_Y(const Chart& chart, std::span<const Jet> vars) {
  const JMat Y = imag(unpack_jets(chart, vars).first);
  return Y.map([](const Jet& y) { return (2.0 * kI) * y; });
}

JMat scalar_identity(const Jet& f, std::size_t n) {
  JMat out(n, n, Jet(0.0));
  for (std::size_t i = 0; i < n; ++i) out(i, i) = f;
  return out;
}

}  // namespace

OpMat maass_K(const Chart& chart, std::span<const Jet> vars) {
  return mul(two_i_Y(chart, vars), wirtinger_first(chart, false));
}

OpMat maass_Lambda(const Chart& chart, std::span<const Jet> vars) {
  return mul(two_i_Y(chart, vars), wirtinger_first(chart, true));
}

JMat apply(const OpMat& O, const JMat& G) {
  if (O.cols != G.rows()) fail(ErrorCode::DimensionMismatch, "operator matrix and function matrix shapes differ");
  JMat out(O.rows, G.cols(), Jet(0.0));
  for (std::size_t a = 0; a < O.rows; ++a)
    for (std::size_t b = 0; b < G.cols(); ++b)
      for (std::size_t c = 0; c < O.cols; ++c) out(a, b) += apply(G(c, b), O(a, c));
  return out;
}

MaassValues maass_operators(const ScalarField& f, const SiegelPoint& p) {
  const Chart chart = Chart::siegel(p.n());
  const auto point = coords(p);
  const auto vars = seed_variables(point, 1);
  const JMat F = scalar_identity(f.eval(vars), p.n());
  auto values = [](const JMat& M) { return M.map([](const Jet& j) { return j.value(); }); };
  return {values(apply(maass_K(chart, vars), F)), values(apply(maass_Lambda(chart, vars), F))};
}

Jet maass_sigma(const JMat& G) { return trace(G); }

JMat maass_A(const Jet& f, const Chart& chart, std::span<const Jet> vars, int j) {
  if (j < 1 || j > 2) fail(ErrorCode::UnsupportedOrder, "A^(j) is available for j = 1, 2 (jet order cap)");
  require_order(f, 2 * j, "A^(j)");
  const std::size_t n = chart.n;
  const double half_n1 = 0.5 * static_cast<double>(n + 1);
  const OpMat K = maass_K(chart, vars);
  const OpMat L = maass_Lambda(chart, vars);
  auto A1 = [&](const JMat& G) {
    const JMat KG = apply(K, G);
    return apply(L, KG) + half_n1 * KG;
  };
  const JMat G = A1(scalar_identity(f, n));
  if (j == 1) return G;

  const JMat S = two_i_Y(chart, vars);  // Ω − Ω̄
  const JMat R = inverse(S);
  const JMat M = transpose(apply(transpose(L), transpose(G)));
  const JMat last = S * transpose(R * M);
  return A1(G) - half_n1 * apply(L, G) + 0.5 * apply(L, scalar_identity(maass_sigma(G), n)) + 0.5 * last;
}

InvariantOperator maass_H(std::size_t n, int j) {
  if (j < 1 || j > 2) fail(ErrorCode::UnsupportedOrder, "H_j is available for j = 1, 2 (jet order cap)");
  const Chart chart = Chart::siegel(n);
  return InvariantOperator{"H" + std::to_string(j), chart, 2 * j, [chart, j](const Jet& f, std::span<const Jet> vars) {
                             JMat out(1, 1);
                             out(0, 0) = trace(maass_A(f, chart, vars, j));
                             return out;
                           }};
}

cplx maass_Hj(const ScalarField& f, const SiegelPoint& p, int j) {
  return maass_H(p.n(), j).evaluate(f, coords(p))(0, 0);
}

cplx exponential_casimir(const Jet& f_chart, const SiegelPoint& p) {
  require_order(f_chart, 2, "symmetrized operator");
  const std::size_t n = p.n();
  const Chart chart = Chart::siegel(n);
  const std::size_t pairs = chart.sym_count();
  const std::vector<double> zero(2 * pairs, 0.0);
  const auto t = seed_variables(zero, 2);

  JMat a(n, n, Jet(0.0)), b(n, n, Jet(0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const std::size_t k = static_cast<std::size_t>(chart.ix(i, j));
      const double w = i == j ? 1.0 : 1.0 / std::sqrt(2.0);
      a(i, j) = a(j, i) = w * t[k];
      b(i, j) = b(j, i) = w * t[k + pairs];
    }
  JMat X(2 * n, 2 * n, Jet(0.0));
  X.set_block(0, 0, a);
  X.set_block(0, n, b);
  X.set_block(n, 0, b);
  X.set_block(n, n, -a);
  // exp(X) to second order; higher powers vanish in order-2 jets in t.
  JMat E = JMat(RMat::identity(2 * n).map([](double v) { return Jet(v); })) + X + 0.5 * (X * X);
  const JMat A = E.block(0, 0, n, n), B = E.block(0, n, n, n);
  const JMat C = E.block(n, 0, n, n), D = E.block(n, n, n, n);
  const JMat W = (kI * A + B) * inverse(JMat(kI * C + D));

  const RMat Lc = cholesky_posdef(p.Y());
  const JMat omega = p.X() + Lc * W * transpose(Lc);
  const auto c = pack(chart, omega, JMat(0, n));
  std::vector<Jet> delta(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) delta[i] = c[i] - Jet(c[i].value());
  const Jet g = taylor_substitute(f_chart.truncate(2), delta);
  cplx s = 0.0;
  for (std::size_t k = 0; k < 2 * pairs; ++k) s += g.partial({static_cast<int>(k), static_cast<int>(k)});
  return s;
}

SymmetrizedOperator symmetrize_polynomial_to_operator(const std::vector<double>& coeffs, std::size_t n) {
  if (n < 1 || n > 2) fail(ErrorCode::UnsupportedDimension, "symmetrized operators are implemented for n <= 2");
  for (std::size_t i = 2; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0.0) fail(ErrorCode::UnsupportedDegree, "only c0 + c1·q1 is supported (q_i, i >= 2, needs higher jets)");
  }
  const double c0 = coeffs.empty() ? 0.0 : coeffs[0];
  const double c1 = coeffs.size() > 1 ? coeffs[1] : 0.0;
  const Chart chart = Chart::siegel(n);

  // One-point calibration against the Laplacian of ds²_{n;1}.
  Rng rng(derive_seed(0x5eed, "symmetrize-calibration", n));
  const SiegelPoint ref = rng.siegel_point(n);
  const ScalarField fref = random_test_field(chart, derive_seed(0x5eed, "symmetrize-field", n));
  const auto ref_point = coords(ref);
  const cplx target = laplacian_siegel(fref, ref, 1.0);
  const cplx raw = exponential_casimir(fref.jet(ref_point, 2), ref);
  const double kappa = (target / raw).real();

  InvariantOperator op{"S(q)", chart, 2, [chart, c0, c1, kappa](const Jet& f, std::span<const Jet> vars) {
                         std::vector<double> point(vars.size());
                         for (std::size_t i = 0; i < vars.size(); ++i) point[i] = vars[i].value().real();
                         const SiegelPoint p = siegel_point_at(chart, point);
                         JMat out(1, 1);
                         cplx v = c0 * f.value();
                         if (c1 != 0.0) v += c1 * kappa * exponential_casimir(f, p);
                         out(0, 0) = Jet(v);
                         return out;
                       }};
  return {std::move(op), kappa};
}

InvariantOperator operator_by_name(const std::string& name, Space space, std::size_t n, std::size_t m) {
  if (name == "laplacian") {
    switch (space) {
      case Space::Hn: return laplacian_siegel_op(n, 1.0);
      case Space::Hnm: return laplacian_jacobi_op(n, m, MetricScales{});
      case Space::Disk: return laplacian_disk_op(n, m, MetricScales{});
    }
  }
  if (name == "D" || name == "Psi" || name == "D1" || name == "D2") {
    if (space != Space::Hnm || n != 1 || m != 1) fail(ErrorCode::UnsupportedDimension, name + " is defined on H_1 × C");
    return generator_op(name);
  }
  if (name == "K") return op_K_det(n, m);
  if (name == "T") return op_T_matrix(n, m);
  if (name == "H1") return maass_H(n, 1);
  if (name == "H2") return maass_H(n, 2);
  fail(ErrorCode::InvalidArgument, "unknown operator " + name);
}

}  // namespace sj
