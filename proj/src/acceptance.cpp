#include "sj/acceptance.hpp"

#include "sj/actions.hpp"
#include "sj/cayley.hpp"
#include "sj/invariant_polys.hpp"
#include "sj/linalg.hpp"
#include "sj/maass.hpp"
#include "sj/metrics.hpp"
#include "sj/operators.hpp"
#include "sj/random.hpp"
#include "sj/reduction.hpp"
#include "sj/spectral.hpp"
#include "sj/volume.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <sstream>

namespace sj {

namespace {

using Shape = std::pair<std::size_t, std::size_t>;
const std::vector<Shape> kShapes{{1, 1}, {2, 1}, {1, 2}, {2, 2}};

// Tracks the worst value seen and whether anything threw.
struct Worst {
  double value = 0.0;
  int errors = 0;
  std::string first_error;

  void see(double v) {
    if (!std::isfinite(v)) {
      value = std::numeric_limits<double>::infinity();
      return;
    }
    value = std::max(value, v);
  }
  template <class F>
  void run(F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      if (errors++ == 0) first_error = e.what();
    }
  }
  bool ok(double threshold) const { return errors == 0 && value < threshold; }
  std::string error_note() const {
    return errors ? "; " + std::to_string(errors) + " errors, first: " + first_error : std::string();
  }
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

CriterionResult result(int id, std::string name, bool passed, double measured, double threshold) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  r.passed = passed;
  r.measured = measured;
  r.threshold = threshold;
  return r;
}

MetricScales random_scales(Rng& rng) { return MetricScales::make(rng.uniform(0.5, 2.0), rng.uniform(0.5, 2.0)); }

CriterionResult c1_volume(std::uint64_t seed, int workers) {
  const double pi = std::numbers::pi;
  const double exact[] = {pi / 3.0, std::pow(pi, 3) / 270.0, std::pow(pi, 6) / 127575.0, std::pow(pi, 10) / 200930625.0};
  Worst table;
  for (int n = 1; n <= 4; ++n) table.see(relative_defect(siegel_volume(n), exact[n - 1]));
  const double est = volume_estimate_F1(1000000, seed, workers);
  const double est_err = std::abs(est - pi / 3.0) / (pi / 3.0);
  auto r = result(1, "Siegel volumes n=1..4 and F_1 estimate", table.ok(1e-12) && est_err < 0.01, table.value, 1e-12);
  r.detail = "max rel. table error " + sci(table.value) + "; estimate " + std::to_string(est) + " (rel. error " +
             sci(est_err) + ", limit 1e-2)";
  return r;
}

CriterionResult c2_jacobi_metric(std::uint64_t seed) {
  Worst w;
  for (auto [n, m] : kShapes) {
    Rng rng(derive_seed(seed, "c2", n * 10 + m));
    const Chart chart = Chart::jacobi(n, m);
    for (int t = 0; t < 50; ++t) {
      w.run([&] {
        const auto g = rng.jacobi_element(n, m);
        const auto p = rng.jacobi_point(n, m);
        const auto s = random_scales(rng);
        const auto image = jacobi_metric_tensor(jacobi_action(g, p).image, s);
        const auto pulled = pullback_metric(jacobi_action_map(g), coords(p), image, chart);
        w.see(relative_defect(pulled.G, jacobi_metric_tensor(p, s).G));
      });
    }
  }
  auto r = result(2, "Jacobi metric invariance", w.ok(1e-8), w.value, 1e-8);
  r.detail = "200 (g, p) pairs over (n,m) in {(1,1),(2,1),(1,2),(2,2)}, worst rel. pullback defect " + sci(w.value) +
             w.error_note();
  return r;
}

CriterionResult c3_disk_metric(std::uint64_t seed) {
  Worst w;
  for (auto [n, m] : kShapes) {
    Rng rng(derive_seed(seed, "c3", n * 10 + m));
    const Chart chart = Chart::disk(n, m);
    for (int t = 0; t < 50; ++t) {
      w.run([&] {
        const auto gs = star_conjugate(rng.jacobi_element(n, m));
        const auto p = rng.disk_point(n, m);
        const auto s = random_scales(rng);
        const auto image = disk_metric_tensor(disk_action(gs, p).image, s);
        const auto pulled = pullback_metric(disk_action_map(gs), coords(p), image, chart);
        w.see(relative_defect(pulled.G, disk_metric_tensor(p, s).G));
      });
    }
  }
  auto r = result(3, "Disk metric invariance", w.ok(1e-8), w.value, 1e-8);
  r.detail = "200 (g*, p) pairs, worst rel. pullback defect " + sci(w.value) + w.error_note();
  return r;
}

CriterionResult c4_laplacians(std::uint64_t seed) {
  Worst wj, wd;
  for (auto [n, m] : kShapes) {
    Rng rng(derive_seed(seed, "c4", n * 10 + m));
    for (int t = 0; t < 30; ++t) {
      wj.run([&] {
        const auto p = rng.jacobi_point(n, m);
        const auto s = random_scales(rng);
        const auto f = random_test_field(Chart::jacobi(n, m), derive_seed(seed, "c4-field-j", n * 1000 + m * 100 + t));
        const cplx closed = laplacian_jacobi(f, p, s);
        const cplx lb = laplace_beltrami(jacobi_metric_field(n, m, s), f.eval, coords(p));
        wj.see(relative_defect(closed, lb));
      });
      wd.run([&] {
        const auto p = rng.disk_point(n, m);
        const auto s = random_scales(rng);
        const auto f = random_test_field(Chart::disk(n, m), derive_seed(seed, "c4-field-d", n * 1000 + m * 100 + t));
        const cplx closed = laplacian_disk(f, p, s);
        const cplx lb = laplace_beltrami(disk_metric_field(n, m, s), f.eval, coords(p));
        wd.see(relative_defect(closed, lb));
      });
    }
  }
  const double worst = std::max(wj.value, wd.value);
  auto r = result(4, "Closed-form Laplacians vs Laplace-Beltrami", wj.ok(1e-6) && wd.ok(1e-6), worst, 1e-6);
  r.detail = "30 fields per shape; Siegel-Jacobi " + sci(wj.value) + ", disk " + sci(wd.value) + wj.error_note() +
             wd.error_note();
  return r;
}

CriterionResult c5_eigen(std::uint64_t seed) {
  Worst closed, bessel;
  for (const auto& e : eigen_catalog()) {
    Rng rng(derive_seed(seed, "c5-" + e.id));
    Worst& w = e.item == 1 ? bessel : closed;
    for (int t = 0; t < 20; ++t) {
      w.run([&] {
        const auto p = rng.jacobi_point(1, 1);
        const cplx s(rng.uniform(-1.5, 2.5), rng.uniform(-1.0, 1.0));
        const double a = rng.uniform(0.3, 2.0) * (rng.integer(0, 1) ? 1.0 : -1.0);
        w.see(eigen_residual(e, s, p, a));
      });
    }
  }
  auto r = result(5, "Eigenfunction catalog", closed.ok(1e-7) && bessel.ok(1e-5), std::max(closed.value, bessel.value),
                    1e-7);
  r.detail = "20 points per entry; closed forms " + sci(closed.value) + " (limit 1e-7), Bessel entry " +
             sci(bessel.value) + " (limit 1e-5)" + closed.error_note() + bessel.error_note();
  return r;
}

CriterionResult c6_generators(std::uint64_t seed) {
  Worst comm, inv;
  Rng rng(derive_seed(seed, "c6"));
  const Chart chart = Chart::jacobi(1, 1);
  for (int t = 0; t < 50; ++t) {
    comm.run([&] {
      const auto f = random_test_field(chart, derive_seed(seed, "c6-comm", t));
      comm.see(commutator_residual(f, rng.jacobi_point(1, 1)));
    });
  }
  for (const char* name : {"D", "Psi", "D1", "D2"}) {
    const auto op = generator_op(name);
    for (int t = 0; t < 50; ++t) {
      inv.run([&] {
        const auto f = random_test_field(chart, derive_seed(seed, std::string("c6-inv-") + name, t));
        const auto g = rng.jacobi_element(1, 1);
        inv.see(invariance_residual(op, jacobi_action_map(g), f, coords(rng.jacobi_point(1, 1))));
      });
    }
  }
  auto r = result(6, "Generators D, Psi, D1, D2 on H_1 x C", comm.ok(1e-8) && inv.ok(1e-8),
                    std::max(comm.value, inv.value), 1e-8);
  r.detail = "commutator residual " + sci(comm.value) + " over 50 fields; invariance " + sci(inv.value) +
             " over 4x50 elements" + comm.error_note() + inv.error_note();
  return r;
}

CriterionResult c7_cayley(std::uint64_t seed) {
  Worst comp, trip;
  for (auto [n, m] : kShapes) {
    Rng rng(derive_seed(seed, "c7", n * 10 + m));
    for (int t = 0; t < 100; ++t) {
      comp.run([&] { comp.see(compatibility_residual(rng.jacobi_element(n, m), rng.disk_point(n, m))); });
      trip.run([&] {
        const auto d = rng.disk_point(n, m);
        const auto back = partial_cayley_inverse(partial_cayley(d));
        trip.see(std::max(max_abs_diff(back.W(), d.W()), max_abs_diff(back.eta(), d.eta())));
        const auto h = rng.jacobi_point(n, m);
        const auto fwd = partial_cayley(partial_cayley_inverse(h));
        trip.see(std::max(max_abs_diff(fwd.omega(), h.omega()), max_abs_diff(fwd.Z(), h.Z())));
      });
    }
  }
  auto r = result(7, "Partial Cayley transform compatibility", comp.ok(1e-9) && trip.ok(1e-12),
                    std::max(comp.value, trip.value), 1e-9);
  r.detail = "400 (g, disk point) pairs: compatibility " + sci(comp.value) + " (limit 1e-9); round trips " +
             sci(trip.value) + " (limit 1e-12)" + comp.error_note() + trip.error_note();
  return r;
}

CriterionResult c8_operators(std::uint64_t seed) {
  Worst wk, wt, wh;
  for (std::size_t n : {1u, 2u}) {
    Rng rng(derive_seed(seed, "c8-K", n));
    const auto op = op_K_det(n, 1);
    for (int t = 0; t < 20; ++t) {
      wk.run([&] {
        const auto f = random_test_field(Chart::jacobi(n, 1), derive_seed(seed, "c8-K-field", n * 100 + t));
        wk.see(invariance_residual(op, jacobi_action_map(rng.jacobi_element(n, 1)), f, coords(rng.jacobi_point(n, 1))));
      });
    }
  }
  for (auto [n, m] : kShapes) {
    Rng rng(derive_seed(seed, "c8-T", n * 10 + m));
    const auto op = op_T_matrix(n, m);
    for (int t = 0; t < 20; ++t) {
      wt.run([&] {
        const auto f = random_test_field(Chart::jacobi(n, m), derive_seed(seed, "c8-T-field", n * 1000 + m * 100 + t));
        wt.see(invariance_residual(op, jacobi_action_map(rng.jacobi_element(n, m)), f, coords(rng.jacobi_point(n, m))));
      });
    }
  }
  for (int j : {1, 2}) {
    Rng rng(derive_seed(seed, "c8-H", j));
    const auto op = maass_H(2, j);
    for (int t = 0; t < 20; ++t) {
      wh.run([&] {
        const auto f = random_test_field(Chart::siegel(2), derive_seed(seed, "c8-H-field", j * 100 + t));
        wh.see(invariance_residual(op, siegel_action_map(rng.symplectic(2)), f, coords(rng.siegel_point(2))));
      });
    }
  }
  const double worst = std::max({wk.value, wt.value, wh.value});
  auto r = result(8, "Invariance of K (det), T, H1, H2", wk.ok(1e-6) && wt.ok(1e-6) && wh.ok(1e-6), worst, 1e-6);
  r.detail = "K " + sci(wk.value) + ", T " + sci(wt.value) + ", H1/H2 (n=2) " + sci(wh.value) + wk.error_note() +
             wt.error_note() + wh.error_note();
  return r;
}

CriterionResult c9_symmetrization(std::uint64_t seed) {
  Worst w;
  std::string kappas;
  for (std::size_t n : {1u, 2u}) {
    w.run([&] {
      const auto S = symmetrize_polynomial_to_operator({0.0, 1.0}, n);
      kappas += (kappas.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + ": " + std::to_string(S.calibration);
      Rng rng(derive_seed(seed, "c9", n));
      for (int t = 0; t < 30; ++t) {
        const auto p = rng.siegel_point(n);
        const auto f = random_test_field(Chart::siegel(n), derive_seed(seed, "c9-field", n * 100 + t));
        w.see(relative_defect(S.op.evaluate(f, coords(p))(0, 0), laplacian_siegel(f, p, 1.0)));
      }
    });
  }
  auto r = result(9, "Symmetrized q1 equals the Siegel Laplacian", w.ok(1e-5), w.value, 1e-5);
  r.detail = "30 points each for n=1,2, worst rel. defect " + sci(w.value) + "; calibration " + kappas + w.error_note();
  return r;
}

CriterionResult c10_invariants(std::uint64_t seed) {
  Worst w;
  std::size_t count = 0;
  const std::vector<Shape> shapes{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 2}};
  for (auto [n, m] : shapes) {
    Rng rng(derive_seed(seed, "c10", n * 10 + m));
    w.run([&] {
      const auto t = random_tangent_pair(n, m, rng);
      CMat S = rng.complex_matrix(m, m, 1.0 / static_cast<double>(m));
      for (const auto& id : all_invariant_ids(n, m, S)) {
        w.see(invariance_defect(id, t, 100, rng));
        ++count;
      }
    });
  }
  std::string ranks;
  bool rank_ok = true;
  for (std::size_t n = 1; n <= 3; ++n) {
    const int r = independence_rank(n, seed);
    rank_ok = rank_ok && r == static_cast<int>(n);
    ranks += (n > 1 ? "," : "") + std::to_string(r);
  }
  auto r = result(10, "K-invariant polynomials", w.ok(1e-10) && rank_ok, w.value, 1e-10);
  r.detail = std::to_string(count) + " (family, index) instances x 100 unitaries, worst defect " + sci(w.value) +
             "; independence ranks n=1..3: " + ranks + w.error_note();
  return r;
}

// Breadth-first search over words of length <= 10 in T, T⁻¹, S from τ;
// true if some visited point equals `target`.
bool word_search_reaches(cplx tau, cplx target, int depth = 10) {
  std::vector<cplx> frontier{tau};
  std::set<std::pair<long long, long long>> seen;
  auto key = [](cplx z) { return std::pair{std::llround(z.real() * 1e9), std::llround(z.imag() * 1e9)}; };
  seen.insert(key(tau));
  for (int d = 0; d <= depth; ++d) {
    for (const cplx& z : frontier) {
      if (std::abs(z - target) < 1e-8 * std::max(1.0, std::abs(target))) return true;
    }
    if (d == depth) break;
    std::vector<cplx> next;
    for (const cplx& z : frontier) {
      for (const cplx w : {z + 1.0, z - 1.0, -1.0 / z}) {
        if (seen.insert(key(w)).second) next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  return false;
}

CriterionResult c11_reduction(std::uint64_t seed) {
  Rng rng(derive_seed(seed, "c11"));
  int n1_bad = 0, n1_oracle_miss = 0, n2_bad = 0, j_bad = 0;
  Worst w;
  for (int t = 0; t < 1000; ++t) {
    w.run([&] {
      const auto p = rng.siegel_point(1);
      const auto r1 = siegel_reduce(p);
      const auto r2 = siegel_reduce(r1.point);
      const cplx tau = p.omega()(0, 0), red = r1.point.omega()(0, 0);
      const auto& M = r1.transform;
      const double det = M.A()(0, 0) * M.D()(0, 0) - M.B()(0, 0) * M.C()(0, 0);
      bool integral = det == 1.0;
      for (const RMat* b : {&M.A(), &M.B(), &M.C(), &M.D()}) integral = integral && (*b)(0, 0) == std::round((*b)(0, 0));
      const double rep = std::abs(siegel_action(M, p).image.omega()(0, 0) - red);
      w.see(rep);
      const bool idem = r2.word.empty() && std::abs(r2.point.omega()(0, 0) - red) == 0.0;
      if (!r1.membership.member() || !idem || !integral || rep > 1e-10) ++n1_bad;
      if (!word_search_reaches(tau, red)) ++n1_oracle_miss;
    });
  }
  for (int t = 0; t < 100; ++t) {
    w.run([&] {
      const auto p = siegel_action(rng.symplectic(2), rng.siegel_point(2)).image;
      const auto r = siegel_reduce(p);
      const auto& m = r.membership;
      w.see(relative_defect(siegel_action(r.transform, p).image.omega(), r.point.omega()));
      if (!(m.S1.holds && m.S2.holds && m.S3.holds)) ++n2_bad;
    });
  }
  for (int t = 0; t < 500; ++t) {
    w.run([&] {
      const auto [n, m] = kShapes[static_cast<std::size_t>(t) % kShapes.size()];
      const auto p = rng.jacobi_point(n, m);
      const auto r = jacobi_reduce(p);
      if (!r.membership.member()) ++j_bad;
    });
  }
  const bool ok = w.errors == 0 && n1_bad == 0 && n1_oracle_miss == 0 && n2_bad == 0 && j_bad == 0 && w.value < 1e-10;
  auto r = result(11, "Siegel and Jacobi reduction", ok, static_cast<double>(n1_bad + n1_oracle_miss + n2_bad + j_bad), 1);
  r.detail = "n=1: " + std::to_string(n1_bad) + " failures, " + std::to_string(n1_oracle_miss) +
             " word-search misses of 1000; n=2: " + std::to_string(n2_bad) + " of 100 violate S1-S3; Jacobi: " +
             std::to_string(j_bad) + " of 500 outside the domain; transform reproduction " + sci(w.value) + w.error_note();
  return r;
}

CriterionResult c12_torus(std::uint64_t seed, int workers) {
  Worst gram, period;
  for (cplx om : {cplx(0.0, 1.0), cplx(0.3, 1.2)}) {
    gram.run([&] {
      const auto P = SiegelPoint::from_omega(CMat(1, 1, std::vector<cplx>{om}));
      gram.see(max_abs_diff(torus_gram(P, character_box(1), 64, workers), CMat::identity(9)));
    });
  }
  Rng rng(derive_seed(seed, "c12"));
  for (int t = 0; t < 40; ++t) {
    period.run([&] {
      const auto P = t % 2 ? SiegelPoint::from_omega(CMat(1, 1, std::vector<cplx>{cplx(0.3, 1.2)})) : rng.siegel_point(1);
      CharacterIndex idx{RMat(1, 1, static_cast<double>(rng.integer(-3, 3))),
                         RMat(1, 1, static_cast<double>(rng.integer(-3, 3)))};
      const CMat Z = rng.complex_matrix(1, 1);
      const CMat S(1, 1, cplx(static_cast<double>(rng.integer(-5, 5))));
      const cplx e0 = torus_character(P, idx, Z);
      period.see(std::abs(torus_character(P, idx, CMat(Z + S)) - e0));
      period.see(std::abs(torus_character(P, idx, CMat(Z + S * P.omega())) - e0));
    });
  }
  auto r = result(12, "Torus character basis", gram.ok(1e-6) && period.ok(1e-12), std::max(gram.value, period.value),
                    1e-6);
  r.detail = "Gram deviation " + sci(gram.value) + " (limit 1e-6, 9 characters, 64x64 grid); periodicity " +
             sci(period.value) + " (limit 1e-12)" + gram.error_note() + period.error_note();
  return r;
}

CriterionResult c13_fourier(std::uint64_t seed) {
  Worst w;
  Rng rng(derive_seed(seed, "c13"));
  for (int t = 0; t < 20; ++t) {
    w.run([&] {
      const cplx s(rng.uniform(0.5, 3.0), rng.uniform(-2.0, 2.0));
      const long n = rng.integer(1, 3) * (rng.integer(0, 1) ? 1 : -1);
      w.see(fourier_ode_residual(s, n, 0, rng.uniform(0.1, 2.0), rng.uniform(-1.0, 1.0)));
    });
  }
  auto r = result(13, "Fourier coefficient equation", w.ok(1e-5), w.value, 1e-5);
  r.detail = "20 (s, n, y, v) samples with r = 0, worst residual " + sci(w.value) + w.error_note();
  return r;
}

CriterionResult c14_eisenstein(std::uint64_t seed) {
  Worst w;
  Rng rng(derive_seed(seed, "c14"));
  const auto cosets = eisenstein_cosets(4);
  for (int t = 0; t < 50; ++t) {
    w.run([&] {
      const auto g = coset_element(cosets[static_cast<std::size_t>(rng.integer(0, static_cast<long>(cosets.size()) - 1))]);
      const auto g0 = random_gamma_11(rng);
      const auto p = rng.jacobi_point(1, 1);
      const cplx s(rng.uniform(-1.0, 3.0), rng.uniform(-1.0, 1.0));
      w.see(relative_defect(eisenstein_term(g, s, jacobi_action(g0, p).image), eisenstein_term(jacobi_multiply(g, g0), s, p)));
    });
  }
  auto r = result(14, "Eisenstein term cocycle", w.ok(1e-10), w.value, 1e-10);
  r.detail = "50 (gamma, gamma0, tau, z) samples, worst rel. defect " + sci(w.value) + w.error_note();
  return r;
}

}  // namespace

int acceptance_count() { return 14; }

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt, const CriterionCallback& on_result) {
  const std::uint64_t s = opt.seed;
  const std::vector<std::function<CriterionResult()>> all{
      [&] { return c1_volume(s, opt.workers); }, [&] { return c2_jacobi_metric(s); },
      [&] { return c3_disk_metric(s); },         [&] { return c4_laplacians(s); },
      [&] { return c5_eigen(s); },               [&] { return c6_generators(s); },
      [&] { return c7_cayley(s); },              [&] { return c8_operators(s); },
      [&] { return c9_symmetrization(s); },      [&] { return c10_invariants(s); },
      [&] { return c11_reduction(s); },          [&] { return c12_torus(s, opt.workers); },
      [&] { return c13_fourier(s); },            [&] { return c14_eisenstein(s); },
  };
  std::vector<CriterionResult> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), id) == opt.only.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = all[i]();
    } catch (const std::exception& e) {
      r = result(id, "criterion " + std::to_string(id), false, std::numeric_limits<double>::infinity(), 0.0);
      r.detail = std::string("aborted: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

const std::vector<std::string>& skipped_by_design() {
  static const std::vector<std::string> items{
      "spectral decomposition of the Laplacian on F_n and F_{n,m} beyond the torus step (open problem)",
      "decomposition of the Weil-type representation into irreducibles",
      "convergence of the Eisenstein series E_s (only a formal series; term-level identities are checked)",
      "the open problems on generators, Maass-Jacobi forms and Whittaker expansions",
  };
  return items;
}

std::string format_result_line(const CriterionResult& r) {
  std::ostringstream os;
  char head[96];
  std::snprintf(head, sizeof head, "[%s] %2d  ", r.passed ? "PASS" : "FAIL", r.id);
  os << head << r.name << ": " << r.detail;
  char tail[48];
  std::snprintf(tail, sizeof tail, " (%.1fs)", r.seconds);
  os << tail;
  return os.str();
}

}  // namespace sj
