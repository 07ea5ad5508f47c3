#include "sj/bessel.hpp"

#include "sj/errors.hpp"

#include <cmath>

namespace sj {

namespace {

// Smallest W with −z cosh W + |Re s| W below tail_log (the integrand bound).
double cutoff(cplx s, double z, double tail_log) {
  const double a = std::abs(s.real());
  double W = 1.0;
  while (-z * std::cosh(W) + a * W + std::log(W) > tail_log) W *= 1.25;
  return W;
}

}  // namespace

std::vector<cplx> bessel_K_derivatives(cplx s, double z, int kmax, const BesselOptions& opt) {
  if (!(z > 0.0) || !std::isfinite(z)) fail(ErrorCode::InvalidArgument, "K_s(z) needs real z > 0");
  if (kmax < 0) fail(ErrorCode::InvalidArgument, "derivative order must be non-negative");
  const double W = cutoff(s, z, opt.tail_log);
  const auto K = static_cast<std::size_t>(kmax) + 1;

  // Trapezoid sums on [0, W]; each halving only adds the new midpoints.
  auto add_nodes = [&](double h, int start, int stride, std::vector<cplx>& acc) {
    const int count = static_cast<int>(std::ceil(W / h));
    for (int i = start; i <= count; i += stride) {
      const double w = i * h;
      const double c = std::cosh(w);
      const double weight = i == 0 ? 0.5 : 1.0;
      cplx term = weight * std::exp(-z * c) * std::cosh(s * w);
      for (std::size_t k = 0; k < K; ++k) {
        acc[k] += term;
        term *= -c;
      }
    }
  };

  double h = 0.5;
  std::vector<cplx> sum(K, 0.0);
  add_nodes(h, 0, 1, sum);
  std::vector<cplx> prev(K);
  for (std::size_t k = 0; k < K; ++k) prev[k] = h * sum[k];
  double change = 0.0;
  for (int it = 0; it < opt.max_halvings; ++it) {
    h *= 0.5;
    add_nodes(h, 1, 2, sum);
    std::vector<cplx> cur(K);
    change = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
      cur[k] = h * sum[k];
      change = std::max(change, std::abs(cur[k] - prev[k]) / std::max(1.0, std::abs(cur[k])));
    }
    if (change < opt.tol && it >= 1) return cur;
    prev = std::move(cur);
  }
  fail(ErrorCode::QuadratureNotConverged, "K-Bessel trapezoid sums did not settle", change);
}

cplx bessel_K(cplx s, double z, const BesselOptions& opt) { return bessel_K_derivatives(s, z, 0, opt)[0]; }

Jet bessel_K(cplx s, const Jet& z, const BesselOptions& opt) {
  if (std::abs(z.value().imag()) > 1e-14 * std::max(1.0, std::abs(z.value()))) {
    fail(ErrorCode::InvalidArgument, "K_s jet needs a real argument");
  }
  const auto d = bessel_K_derivatives(s, z.value().real(), z.order(), opt);
  return z.compose(d);
}

}  // namespace sj
