#pragma once

// K_s(z) = ½∫_0^∞ exp(−z(t + 1/t)/2) t^{s−1} dt for real z > 0, evaluated as
// ∫_0^∞ exp(−z cosh w) cosh(s w) dw by the trapezoid rule, which converges
// geometrically for this analytic, doubly-exponentially decaying integrand.

#include "sj/jet.hpp"

#include <vector>

namespace sj {

struct BesselOptions {
  double tol = 1e-13;       // relative change between successive halvings
  int max_halvings = 14;
  double tail_log = -45.0;  // log of the integrand bound at the cutoff
};

// d^k/dz^k K_s(z) for k = 0..kmax, all from the same nodes.
std::vector<cplx> bessel_K_derivatives(cplx s, double z, int kmax, const BesselOptions& opt = {});
cplx bessel_K(cplx s, double z, const BesselOptions& opt = {});
// K_s applied to a real-valued jet.
Jet bessel_K(cplx s, const Jet& z, const BesselOptions& opt = {});

}  // namespace sj
