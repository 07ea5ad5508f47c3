#include "sj/actions.hpp"

#include "sj/cayley.hpp"
#include "sj/chart.hpp"
#include "sj/random.hpp"

namespace sj {

ActionResult<SiegelPoint> siegel_action(const SymplecticMatrix& M, const SiegelPoint& p) {
  CMat F;
  CMat img = siegel_action_t(M, p.omega(), &F);
  return {SiegelPoint::from_omega(img), F};
}

ActionResult<JacobiPoint> jacobi_action(const JacobiGroupElement& g, const JacobiPoint& p) {
  if (p.n() != g.n() || p.m() != g.m()) fail(ErrorCode::DimensionMismatch, "point and group element dimensions differ");
  CMat F;
  auto [img, zimg] = jacobi_action_t(g, p.omega(), p.Z(), &F);
  return {JacobiPoint::from_complex(img, zimg), F};
}

ActionResult<DiskPoint> disk_action(const DiskGroupElement& g, const DiskPoint& p) {
  if (p.n() != g.n() || p.m() != g.m()) fail(ErrorCode::DimensionMismatch, "point and group element dimensions differ");
  CMat F;
  auto [wimg, eimg] = disk_action_t(g, p.W(), p.eta(), &F);
  return {DiskPoint::make(wimg, eimg), F};
}

JacobiGroupElement jacobi_multiply(const JacobiGroupElement& g0, const JacobiGroupElement& g1) {
  if (g0.n() != g1.n() || g0.m() != g1.m()) fail(ErrorCode::DimensionMismatch, "Jacobi elements of different shape");
  const auto& M = g1.M;
  const RMat lt = g0.h.lambda() * M.A() + g0.h.mu() * M.C();
  const RMat mt = g0.h.lambda() * M.B() + g0.h.mu() * M.D();
  const RMat kappa = g0.h.kappa() + g1.h.kappa() + lt * transpose(g1.h.mu()) - mt * transpose(g1.h.lambda());
  return JacobiGroupElement::make(g0.M * g1.M,
                                  HeisenbergElement::make(lt + g1.h.lambda(), mt + g1.h.mu(), kappa));
}

JacobiGroupElement jacobi_inverse(const JacobiGroupElement& g) {
  const auto& M = g.M;
  const RMat& l = g.h.lambda();
  const RMat& u = g.h.mu();
  const RMat lt = l * transpose(M.D()) - u * transpose(M.C());
  const RMat mt = u * transpose(M.A()) - l * transpose(M.B());
  const RMat kappa = -g.h.kappa() + l * transpose(u) - u * transpose(l);
  return JacobiGroupElement::make(M.inverse(), HeisenbergElement::make(-lt, -mt, kappa));
}

double jacobi_distance(const JacobiGroupElement& a, const JacobiGroupElement& b) {
  double d = max_abs(a.M.full() - b.M.full());
  d = std::max(d, max_abs(a.h.lambda() - b.h.lambda()));
  d = std::max(d, max_abs(a.h.mu() - b.h.mu()));
  d = std::max(d, max_abs(a.h.kappa() - b.h.kappa()));
  return d;
}

DiskGroupElement star_conjugate_unchecked(const JacobiGroupElement& g) {
  const auto& M = g.M;
  const CMat P = 0.5 * (complexify(M.A() + M.D()) + kI * complexify(M.B() - M.C()));
  const CMat Q = 0.5 * (complexify(M.A() - M.D()) - kI * complexify(M.B() + M.C()));
  const CMat l = complexify(g.h.lambda());
  const CMat u = complexify(g.h.mu());
  DiskHeisenberg h{0.5 * (l + kI * u), 0.5 * (l - kI * u), complexify(g.h.kappa())};
  return DiskGroupElement::make(P, Q, h);
}

DiskGroupElement star_conjugate(const JacobiGroupElement& g) {
  DiskGroupElement gs = star_conjugate_unchecked(g);
  Rng rng(derive_seed(0x5eed, "star_conjugate", g.n() * 16 + g.m()));
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const DiskPoint p = rng.disk_point(g.n(), g.m());
    const auto lhs = jacobi_action(g, partial_cayley(p)).image;
    const double scale = std::max({1.0, max_abs(lhs.omega()), max_abs(lhs.Z())});
    worst = std::max(worst, compatibility_residual(g, gs, p) / scale);
  }
  if (worst > 1e-9) fail(ErrorCode::ConjugationMismatch, "conjugated element fails the Cayley compatibility check", worst);
  return gs;
}

ChartMap siegel_action_map(const SymplecticMatrix& M) {
  const Chart chart = Chart::siegel(M.n());
  return [M, chart](std::span<const Jet> c) {
    auto mats = unpack<Jet>(chart, c);
    return pack(chart, siegel_action_t(M, mats.first), mats.second);
  };
}

ChartMap jacobi_action_map(const JacobiGroupElement& g) {
  const Chart chart = Chart::jacobi(g.n(), g.m());
  return [g, chart](std::span<const Jet> c) {
    auto mats = unpack<Jet>(chart, c);
    auto [o, z] = jacobi_action_t(g, mats.first, mats.second);
    return pack(chart, o, z);
  };
}

ChartMap disk_action_map(const DiskGroupElement& g) {
  const Chart chart = Chart::disk(g.n(), g.m());
  return [g, chart](std::span<const Jet> c) {
    auto mats = unpack<Jet>(chart, c);
    auto [w, e] = disk_action_t(g, mats.first, mats.second);
    return pack(chart, w, e);
  };
}

}  // namespace sj
