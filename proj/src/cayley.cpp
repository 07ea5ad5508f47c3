#include "sj/cayley.hpp"

#include "sj/actions.hpp"
#include "sj/chart.hpp"

namespace sj {

JacobiPoint partial_cayley(const DiskPoint& p) {
  auto [omega, Z] = partial_cayley_t(p.W(), p.eta());
  return JacobiPoint::from_complex(omega, Z);
}

DiskPoint partial_cayley_inverse(const JacobiPoint& p) {
  auto [W, eta] = partial_cayley_inverse_t(p.omega(), p.Z());
  return DiskPoint::make(W, eta);
}

double compatibility_residual(const JacobiGroupElement& g, const DiskGroupElement& gstar, const DiskPoint& p) {
  auto [o0, z0] = partial_cayley_t(p.W(), p.eta());
  auto [o1, z1] = jacobi_action_t(g, o0, z0);
  auto [w2, e2] = disk_action_t(gstar, p.W(), p.eta());
  auto [o2, z2] = partial_cayley_t(w2, e2);
  return std::max(max_abs_diff(o1, o2), max_abs_diff(z1, z2));
}

double compatibility_residual(const JacobiGroupElement& g, const DiskPoint& p) {
  return compatibility_residual(g, star_conjugate(g), p);
}

ChartMap partial_cayley_map(std::size_t n, std::size_t m) {
  const Chart from = Chart::disk(n, m), to = Chart::jacobi(n, m);
  return [from, to](std::span<const Jet> c) {
    auto mats = unpack<Jet>(from, c);
    auto [o, z] = partial_cayley_t(mats.first, mats.second);
    return pack(to, o, z);
  };
}

ChartMap partial_cayley_inverse_map(std::size_t n, std::size_t m) {
  const Chart from = Chart::jacobi(n, m), to = Chart::disk(n, m);
  return [from, to](std::span<const Jet> c) {
    auto mats = unpack<Jet>(from, c);
    auto [w, e] = partial_cayley_inverse_t(mats.first, mats.second);
    return pack(to, w, e);
  };
}

}  // namespace sj
