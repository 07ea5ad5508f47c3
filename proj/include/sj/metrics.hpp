#pragma once

#include "sj/chart.hpp"
#include "sj/jet.hpp"
#include "sj/types.hpp"

#include <functional>

namespace sj {

struct MetricScales {
  double a = 1.0;
  double b = 1.0;
  static MetricScales make(double a, double b);
};

struct MetricTensor {
  Chart chart;
  RMat G;
};

// Quadratic forms at a point on a tangent vector (dΩ, dZ) resp. (dW, dη),
// returned as complex numbers so the caller can check the imaginary part.
cplx siegel_form(const CMat& omega, const CMat& dOmega, double a_scale);
cplx jacobi_form(const CMat& omega, const CMat& Z, const CMat& dOmega, const CMat& dZ, double a_scale,
                 double b_scale);
// The right-hand side of the displayed disk metric, times 4.
cplx disk_form(const CMat& W, const CMat& eta, const CMat& dW, const CMat& deta, double a_scale, double b_scale);

MetricTensor siegel_metric_tensor(const SiegelPoint& p, double a_scale);
MetricTensor jacobi_metric_tensor(const JacobiPoint& p, const MetricScales& scales);
MetricTensor disk_metric_tensor(const DiskPoint& p, const MetricScales& scales);

// Polarized tensors without the positivity check (used for the scale split,
// where one part alone is only semidefinite).
RMat jacobi_metric_matrix(const JacobiPoint& p, double a_scale, double b_scale);
RMat disk_metric_matrix(const DiskPoint& p, double a_scale, double b_scale);

// (det Y)^{-(n+m+1)}; the H_n version uses (det Y)^{-(n+1)}.
double volume_density(const JacobiPoint& p);
double volume_density(const SiegelPoint& p);

MetricTensor pullback_metric(const ChartMap& map, std::span<const double> point, const MetricTensor& image_metric,
                             const Chart& source_chart);

using MetricField = std::function<RMat(std::span<const double>)>;

MetricField siegel_metric_field(std::size_t n, double a_scale);
MetricField jacobi_metric_field(std::size_t n, std::size_t m, const MetricScales& scales);
MetricField disk_metric_field(std::size_t n, std::size_t m, const MetricScales& scales);

// (1/√g) Σ ∂_i(√g g^{ij} ∂_j f). Metric derivatives by central differences of
// step h_rel·max(1, |x_i|); f derivatives from order-2 jets.
cplx laplace_beltrami(const MetricField& metric, const JetField& f, std::span<const double> point,
                      double h_rel = 1e-5);

}  // namespace sj
