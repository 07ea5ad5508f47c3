#include "sj/metrics.hpp"

#include "sj/linalg.hpp"

#include <cmath>

namespace sj {

MetricScales MetricScales::make(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    fail(ErrorCode::InvalidArgument, "metric scales must be positive and finite");
  }
  return MetricScales{a, b};
}

cplx siegel_form(const CMat& omega, const CMat& dOmega, double a_scale) {
  const CMat Yi = complexify(inverse(imag(omega)));
  return a_scale * trace(Yi * dOmega * Yi * conj(dOmega));
}

cplx jacobi_form(const CMat& omega, const CMat& Z, const CMat& dO, const CMat& dZ, double a_scale, double b_scale) {
  const RMat Yr = imag(omega);
  const CMat Yi = complexify(inverse(Yr));
  const CMat V = complexify(imag(Z));
  const CMat dOb = conj(dO), dZb = conj(dZ);
  cplx q = a_scale * trace(Yi * dO * Yi * dOb);
  cplx s = trace(Yi * transpose(V) * V * Yi * dO * Yi * dOb);
  s += trace(Yi * transpose(dZ) * dZb);
  s -= trace(V * Yi * dO * Yi * transpose(dZb));
  s -= trace(V * Yi * dOb * Yi * transpose(dZ));
  return q + b_scale * s;
}

cplx disk_form(const CMat& W, const CMat& e, const CMat& dW, const CMat& de, double a_scale, double b_scale) {
  const std::size_t n = W.rows();
  const CMat I = CMat::identity(n);
  const CMat Wb = conj(W), eb = conj(e), dWb = conj(dW), deb = conj(de);
  const CMat P = inverse(CMat(I - W * Wb));   // (I − W W̄)⁻¹
  const CMat Q = inverse(CMat(I - Wb * W));   // (I − W̄ W)⁻¹
  const CMat IWinv = inverse(CMat(I - W));    // (I − W)⁻¹
  const CMat IWbinv = inverse(CMat(I - Wb));  // (I − W̄)⁻¹
  const CMat core = dW * Q * dWb;             // dW (I − W̄W)⁻¹ dW̄

  cplx q = a_scale * trace(P * core);
  cplx s = trace(P * transpose(de) * deb);
  s += trace((e * Wb - eb) * P * dW * Q * transpose(deb));
  s += trace((eb * W - e) * Q * dWb * P * transpose(de));
  s -= trace(P * transpose(e) * e * Q * Wb * core);
  s -= trace(W * Q * transpose(eb) * eb * P * core);
  s += trace(P * transpose(e) * eb * P * core);
  s += trace(IWbinv * transpose(eb) * e * Wb * P * core);
  s += trace(IWbinv * (I - W) * Q * transpose(eb) * e * Q * (I - Wb) * IWinv * core);
  s -= trace(P * (I - W) * IWbinv * transpose(eb) * e * IWinv * core);
  return 4.0 * (q + b_scale * s);
}

namespace {

using Form = std::function<cplx(const CMat&, const CMat&)>;

RMat polarize(const Chart& chart, const Form& form, const Tolerances& tol) {
  const std::size_t d = chart.dim();
  std::vector<double> t(d, 0.0);
  auto eval = [&](std::size_t i, std::size_t j, double sign) {
    std::fill(t.begin(), t.end(), 0.0);
    t[i] += 1.0;
    t[j] += sign;
    auto mats = unpack<double>(chart, t);
    const cplx q = form(mats.first, mats.second);
    if (std::abs(q.imag()) > tol.form_imag_tol * std::max(1.0, std::abs(q))) {
      fail(ErrorCode::FormNotReal, "metric form has a non-negligible imaginary part", std::abs(q.imag()));
    }
    return q.real();
  };
  RMat G(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    G(i, i) = 0.25 * eval(i, i, 1.0);  // Q(2e_i) / 4
    for (std::size_t j = 0; j < i; ++j) {
      G(i, j) = G(j, i) = 0.25 * (eval(i, j, 1.0) - eval(i, j, -1.0));
    }
  }
  return G;
}

MetricTensor certified(const Chart& chart, RMat G) {
  cholesky_posdef(G);
  return MetricTensor{chart, std::move(G)};
}

}  // namespace

MetricTensor siegel_metric_tensor(const SiegelPoint& p, double a_scale) {
  MetricScales::make(a_scale, 1.0);
  const Chart chart = Chart::siegel(p.n());
  const CMat omega = p.omega();
  return certified(chart, polarize(chart, [&](const CMat& dO, const CMat&) { return siegel_form(omega, dO, a_scale); },
                                   default_tolerances()));
}

RMat jacobi_metric_matrix(const JacobiPoint& p, double a_scale, double b_scale) {
  const Chart chart = Chart::jacobi(p.n(), p.m());
  const CMat omega = p.omega(), Z = p.Z();
  return polarize(
      chart, [&](const CMat& dO, const CMat& dZ) { return jacobi_form(omega, Z, dO, dZ, a_scale, b_scale); },
      default_tolerances());
}

RMat disk_metric_matrix(const DiskPoint& p, double a_scale, double b_scale) {
  const Chart chart = Chart::disk(p.n(), p.m());
  return polarize(
      chart, [&](const CMat& dW, const CMat& de) { return disk_form(p.W(), p.eta(), dW, de, a_scale, b_scale); },
      default_tolerances());
}

MetricTensor jacobi_metric_tensor(const JacobiPoint& p, const MetricScales& s) {
  MetricScales::make(s.a, s.b);
  return certified(Chart::jacobi(p.n(), p.m()), jacobi_metric_matrix(p, s.a, s.b));
}

MetricTensor disk_metric_tensor(const DiskPoint& p, const MetricScales& s) {
  MetricScales::make(s.a, s.b);
  return certified(Chart::disk(p.n(), p.m()), disk_metric_matrix(p, s.a, s.b));
}

double volume_density(const JacobiPoint& p) {
  return std::pow(determinant(p.base().Y()), -static_cast<double>(p.n() + p.m() + 1));
}

double volume_density(const SiegelPoint& p) {
  return std::pow(determinant(p.Y()), -static_cast<double>(p.n() + 1));
}

MetricTensor pullback_metric(const ChartMap& map, std::span<const double> point, const MetricTensor& image_metric,
                             const Chart& source_chart) {
  const RMat J = jacobian(map, point);
  if (J.rows() != image_metric.G.rows()) fail(ErrorCode::DimensionMismatch, "map image does not match metric chart");
  return MetricTensor{source_chart, symmetric_part(transpose(J) * image_metric.G * J)};
}

MetricField siegel_metric_field(std::size_t n, double a_scale) {
  const Chart chart = Chart::siegel(n);
  return [chart, a_scale](std::span<const double> c) { return siegel_metric_tensor(siegel_point_at(chart, c), a_scale).G; };
}

MetricField jacobi_metric_field(std::size_t n, std::size_t m, const MetricScales& s) {
  const Chart chart = Chart::jacobi(n, m);
  return [chart, s](std::span<const double> c) { return jacobi_metric_tensor(jacobi_point_at(chart, c), s).G; };
}

MetricField disk_metric_field(std::size_t n, std::size_t m, const MetricScales& s) {
  const Chart chart = Chart::disk(n, m);
  return [chart, s](std::span<const double> c) { return disk_metric_tensor(disk_point_at(chart, c), s).G; };
}

cplx laplace_beltrami(const MetricField& metric, const JetField& f, std::span<const double> point, double h_rel) {
  const std::size_t d = point.size();
  const RMat G = metric(point);
  const double cond = condition_number(G);
  if (cond > default_tolerances().cond_max) fail(ErrorCode::IllConditionedMetric, "metric condition number too large", cond);
  const RMat Gi = inverse(G);
  const double rootg = std::sqrt(determinant(G));

  // div_j = Σ_i ∂_i(√g g^{ij}) / √g, five-point central stencil.
  std::vector<double> div(d, 0.0);
  std::vector<double> shifted(point.begin(), point.end());
  auto flux_row = [&](std::size_t i, double offset) {
    shifted[i] = point[i] + offset;
    const RMat Gs = metric(shifted);
    shifted[i] = point[i];
    const RMat Gsi = inverse(Gs);
    const double s = std::sqrt(determinant(Gs));
    std::vector<double> row(d);
    for (std::size_t j = 0; j < d; ++j) row[j] = s * Gsi(i, j);
    return row;
  };
  for (std::size_t i = 0; i < d; ++i) {
    const double h = h_rel * std::max(1.0, std::abs(point[i]));
    const auto p1 = flux_row(i, h), m1 = flux_row(i, -h);
    const auto p2 = flux_row(i, 2 * h), m2 = flux_row(i, -2 * h);
    for (std::size_t j = 0; j < d; ++j) {
      div[j] += (8.0 * (p1[j] - m1[j]) - (p2[j] - m2[j])) / (12.0 * h * rootg);
    }
  }

  const auto vars = seed_variables(point, 2);
  const Jet fj = f(vars);
  cplx out = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    const int ii = static_cast<int>(i);
    out += div[i] * fj.partial({ii});
    for (std::size_t j = 0; j < d; ++j) out += Gi(i, j) * fj.partial({ii, static_cast<int>(j)});
  }
  return out;
}

}  // namespace sj
