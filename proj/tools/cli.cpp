#include "cli.hpp"

#include "sj/acceptance.hpp"
#include "sj/actions.hpp"
#include "sj/bessel.hpp"
#include "sj/cayley.hpp"
#include "sj/errors.hpp"
#include "sj/invariant_polys.hpp"
#include "sj/json_io.hpp"
#include "sj/linalg.hpp"
#include "sj/maass.hpp"
#include "sj/metrics.hpp"
#include "sj/operators.hpp"
#include "sj/random.hpp"
#include "sj/reduction.hpp"
#include "sj/spectral.hpp"
#include "sj/volume.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

namespace sj::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  std::string input = "-";
  bool input_given = false;
  std::uint64_t seed = 42;
  std::string tol_file;
  int workers = 0;
  int indent = 2;
  std::istream* in = nullptr;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;

  Json read_input() const {
    if (input == "-") return Json::parse(*in);
    std::ifstream f(input);
    if (!f) throw UsageError("cannot open input file " + input);
    return Json::parse(f);
  }
  // Input for commands where it is optional: read only when --input was passed.
  std::optional<Json> optional_input() const {
    if (!input_given) return std::nullopt;
    return read_input();
  }
  void emit(const Json& j) const { *out << j.dump(indent) << "\n"; }
};

Space parse_space(const std::string& s) {
  if (s == "hn") return Space::Hn;
  if (s == "hnm") return Space::Hnm;
  if (s == "disk") return Space::Disk;
  throw UsageError("unknown space " + s + " (expected hn, hnm or disk)");
}

// Accepts either the point itself or an object with the point under "p".
const Json& point_part(const Json& j) { return j.is_object() && j.contains("p") ? j.at("p") : j; }

std::vector<double> point_coords(Space space, const Json& j) {
  switch (space) {
    case Space::Hn: return coords(siegel_point_from_json(j));
    case Space::Hnm: return coords(jacobi_point_from_json(j));
    case Space::Disk: return coords(disk_point_from_json(j));
  }
  return {};
}

Chart point_chart(Space space, const Json& j) {
  switch (space) {
    case Space::Hn: return Chart::siegel(siegel_point_from_json(j).n());
    case Space::Hnm: {
      const auto p = jacobi_point_from_json(j);
      return Chart::jacobi(p.n(), p.m());
    }
    case Space::Disk: {
      const auto p = disk_point_from_json(j);
      return Chart::disk(p.n(), p.m());
    }
  }
  return Chart::siegel(1);
}

DiskGroupElement disk_element_any(const Json& j, std::size_t m_hint) {
  // A Jacobi-group element is accepted and conjugated into the disk group.
  if (j.is_object() && (j.contains("M") || j.contains("A"))) return star_conjugate(jacobi_element_from_json(j, m_hint));
  return disk_element_from_json(j);
}

Json membership_json(const DomainMembership& m) { return to_json(m); }

Json word_json(const std::vector<std::string>& w) {
  Json a = Json::array();
  for (const auto& s : w) a.push_back(s);
  return a;
}

// ---------------------------------------------------------------------------

struct Options {
  std::string space = "hnm";
  std::size_t n = 1, m = 1;
  double a = 1.0, b = 1.0;
  bool to_space = false, to_disk = false;
  std::string name;
  std::string what = "metric";
  int trials = 20;
  std::string family;
  std::vector<int> indices;
  int vn = 1;
  bool estimate = false;
  std::uint64_t samples = 1000000;
  double s_re = 0.5, s_im = 0.0;
  double z = 1.0;
  int derivatives = 0;
  int entry = 1;
  int points = 20;
  long bound = 10;
  int grid = 64;
  long radius = 1;
  std::vector<int> only;
  std::string format = "table";
};

int cmd_act(const Context& c, const Options& o) {
  const Json in = c.read_input();
  const Json& g = require(in, "g");
  const Json& p = require(in, "p");
  switch (parse_space(o.space)) {
    case Space::Hn: {
      const auto r = siegel_action(symplectic_from_json(g), siegel_point_from_json(p));
      c.emit(Json{{"point", to_json(r.image)}, {"factor", to_json(r.factor)}});
      break;
    }
    case Space::Hnm: {
      const auto pt = jacobi_point_from_json(p);
      const auto r = jacobi_action(jacobi_element_from_json(g, pt.m()), pt);
      c.emit(Json{{"point", to_json(r.image)}, {"factor", to_json(r.factor)}});
      break;
    }
    case Space::Disk: {
      const auto pt = disk_point_from_json(p);
      const auto r = disk_action(disk_element_any(g, pt.m()), pt);
      c.emit(Json{{"point", to_json(r.image)}, {"factor", to_json(r.factor)}});
      break;
    }
  }
  return kOk;
}

int cmd_multiply(const Context& c, const Options& o) {
  const Json in = c.read_input();
  const Space sp = parse_space(o.space);
  if (sp == Space::Hn) {
    const auto g = symplectic_from_json(require(in, "g0")) * symplectic_from_json(require(in, "g1"));
    c.emit(Json{{"product", to_json(g)}});
  } else if (sp == Space::Hnm) {
    const auto g = jacobi_multiply(jacobi_element_from_json(require(in, "g0"), o.m),
                                   jacobi_element_from_json(require(in, "g1"), o.m));
    c.emit(Json{{"product", to_json(g)}});
  } else {
    throw UsageError("multiply supports --space hn and hnm");
  }
  return kOk;
}

int cmd_cayley(const Context& c, const Options& o) {
  if (o.to_space == o.to_disk) throw UsageError("cayley needs exactly one of --to-space, --to-disk");
  const Json in = c.read_input();
  const Json& p = point_part(in);
  if (o.to_space) {
    const auto d = disk_point_from_json(p);
    const auto h = partial_cayley(d);
    const auto back = partial_cayley_inverse(h);
    const double rt = std::max(max_abs_diff(back.W(), d.W()), max_abs_diff(back.eta(), d.eta()));
    c.emit(Json{{"point", to_json(h)}, {"round_trip_residual", rt}});
  } else {
    const auto h = jacobi_point_from_json(p);
    const auto d = partial_cayley_inverse(h);
    const auto back = partial_cayley(d);
    const double rt = std::max(max_abs_diff(back.omega(), h.omega()), max_abs_diff(back.Z(), h.Z()));
    c.emit(Json{{"point", to_json(d)}, {"round_trip_residual", rt}});
  }
  return kOk;
}

int cmd_metric(const Context& c, const Options& o) {
  const Json in = c.read_input();
  const Json& p = point_part(in);
  const auto s = MetricScales::make(o.a, o.b);
  MetricTensor G;
  switch (parse_space(o.space)) {
    case Space::Hn: G = siegel_metric_tensor(siegel_point_from_json(p), o.a); break;
    case Space::Hnm: G = jacobi_metric_tensor(jacobi_point_from_json(p), s); break;
    case Space::Disk: G = disk_metric_tensor(disk_point_from_json(p), s); break;
  }
  c.emit(Json{{"dimension", G.G.rows()}, {"G", to_json(G.G)}});
  return kOk;
}

int cmd_volume_density(const Context& c, const Options& o) {
  const Json in = c.read_input();
  const Json& p = point_part(in);
  const Space sp = parse_space(o.space);
  if (sp == Space::Disk) throw UsageError("volume-density supports --space hn and hnm");
  const double v = sp == Space::Hn ? volume_density(siegel_point_from_json(p)) : volume_density(jacobi_point_from_json(p));
  c.emit(Json{{"value", v}});
  return kOk;
}

int cmd_laplacian(const Context& c, const Options& o) {
  const Json in = c.read_input();
  const Json& pj = point_part(in);
  const Space sp = parse_space(o.space);
  const auto s = MetricScales::make(o.a, o.b);
  const Chart chart = point_chart(sp, pj);
  const auto f = random_test_field(chart, derive_seed(c.seed, "cli-field"));
  const auto x = point_coords(sp, pj);
  cplx closed, lb;
  switch (sp) {
    case Space::Hn:
      closed = laplacian_siegel(f, siegel_point_from_json(pj), o.a);
      lb = laplace_beltrami(siegel_metric_field(chart.n, o.a), f.eval, x);
      break;
    case Space::Hnm:
      closed = laplacian_jacobi(f, jacobi_point_from_json(pj), s);
      lb = laplace_beltrami(jacobi_metric_field(chart.n, chart.m, s), f.eval, x);
      break;
    case Space::Disk:
      closed = laplacian_disk(f, disk_point_from_json(pj), s);
      lb = laplace_beltrami(disk_metric_field(chart.n, chart.m, s), f.eval, x);
      break;
  }
  c.emit(Json{{"field", f.name},
              {"value", to_json(closed)},
              {"laplace_beltrami", to_json(lb)},
              {"relative_defect", relative_defect(closed, lb)}});
  return kOk;
}

int cmd_operator(const Context& c, const Options& o) {
  if (o.name.empty()) throw UsageError("operator needs --name");
  const Json in = c.read_input();
  const Json& pj = point_part(in);
  const Space sp = parse_space(o.space);
  const Chart chart = point_chart(sp, pj);
  const auto op = operator_by_name(o.name, sp, chart.n, chart.m);
  const auto f = random_test_field(op.chart, derive_seed(c.seed, "cli-field"));
  c.emit(Json{{"name", op.name}, {"field", f.name}, {"value", to_json(op.evaluate(f, point_coords(sp, pj)))}});
  return kOk;
}

int cmd_invariance_test(const Context& c, const Options& o) {
  const Space sp = parse_space(o.space);
  if (o.what != "metric" && o.what != "volume" && o.what != "operator") {
    throw UsageError("--what must be metric, volume or operator");
  }
  if (o.what == "operator" && o.name.empty()) throw UsageError("--what operator needs --name");
  if (o.what == "volume" && sp == Space::Disk) throw UsageError("volume invariance supports --space hn and hnm");
  if (o.trials < 1) throw UsageError("--trials must be positive");
  const auto scales = MetricScales::make(o.a, o.b);
  const std::size_t n = o.n, m = sp == Space::Hn ? 0 : o.m;
  const Chart chart = sp == Space::Hn ? Chart::siegel(n) : sp == Space::Hnm ? Chart::jacobi(n, m) : Chart::disk(n, m);

  // One trial: the map of g, the point, and where the point goes.
  struct Trial {
    ChartMap map;
    std::vector<double> x;
    std::function<MetricTensor()> metric_at_p, metric_at_image;
    std::function<double()> density_p, density_image;
  };
  auto make_trial = [&](Rng& rng) {
    Trial t;
    if (sp == Space::Hn) {
      const auto g = rng.symplectic(n);
      const auto p = rng.siegel_point(n);
      const auto img = siegel_action(g, p).image;
      t.map = siegel_action_map(g);
      t.x = coords(p);
      t.metric_at_p = [=] { return siegel_metric_tensor(p, o.a); };
      t.metric_at_image = [=] { return siegel_metric_tensor(img, o.a); };
      t.density_p = [=] { return volume_density(p); };
      t.density_image = [=] { return volume_density(img); };
    } else if (sp == Space::Hnm) {
      const auto g = rng.jacobi_element(n, m);
      const auto p = rng.jacobi_point(n, m);
      const auto img = jacobi_action(g, p).image;
      t.map = jacobi_action_map(g);
      t.x = coords(p);
      t.metric_at_p = [=] { return jacobi_metric_tensor(p, scales); };
      t.metric_at_image = [=] { return jacobi_metric_tensor(img, scales); };
      t.density_p = [=] { return volume_density(p); };
      t.density_image = [=] { return volume_density(img); };
    } else {
      const auto g = star_conjugate(rng.jacobi_element(n, m));
      const auto p = rng.disk_point(n, m);
      const auto img = disk_action(g, p).image;
      t.map = disk_action_map(g);
      t.x = coords(p);
      t.metric_at_p = [=] { return disk_metric_tensor(p, scales); };
      t.metric_at_image = [=] { return disk_metric_tensor(img, scales); };
    }
    return t;
  };

  std::optional<InvariantOperator> op;
  if (o.what == "operator") op = operator_by_name(o.name, sp, n, m);
  Rng rng(derive_seed(c.seed, "cli-invariance"));
  Json defects = Json::array();
  double worst = 0.0;
  for (int i = 0; i < o.trials; ++i) {
    const Trial t = make_trial(rng);
    double d = 0.0;
    if (o.what == "metric") {
      const auto pulled = pullback_metric(t.map, t.x, t.metric_at_image(), chart);
      d = relative_defect(pulled.G, t.metric_at_p().G);
    } else if (o.what == "volume") {
      const double jac = std::abs(determinant(jacobian(t.map, t.x)));
      d = std::abs(t.density_image() * jac - t.density_p()) / t.density_p();
    } else {
      const auto f = random_test_field(op->chart, derive_seed(c.seed, "cli-invariance-field", static_cast<std::uint64_t>(i)));
      d = invariance_residual(*op, t.map, f, t.x);
    }
    worst = std::max(worst, d);
    defects.push_back(d);
  }
  c.emit(Json{{"what", o.what}, {"space", o.space}, {"n", n}, {"m", m}, {"trials", o.trials}, {"max_defect", worst},
              {"defects", defects}});
  return kOk;
}

int cmd_invariant_poly(const Context& c, const Options& o) {
  if (o.family.empty()) throw UsageError("invariant-poly needs --family");
  InvariantFamilyId id;
  try {
    id.family = family_from_name(o.family);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  id.idx = o.indices;
  const Json in = c.read_input();
  const auto t = TangentPair::make(cmat_from_json(require(in, "omega")), cmat_from_json(require(in, "z")));
  if (in.contains("S")) id.S = cmat_from_json(in.at("S"));
  validate_invariant_id(id, t.n(), t.m());
  Rng rng(derive_seed(c.seed, "cli-invariant-poly"));
  const double v = eval_invariant(id, t);
  const double d = invariance_defect(id, t, o.trials, rng);
  Json idx = Json::array();
  for (int k : id.idx) idx.push_back(k);
  c.emit(Json{{"family", family_name(id.family)}, {"indices", idx}, {"value", v}, {"invariance_defect", d}});
  return kOk;
}

int cmd_reduce(const Context& c, const Options& o) {
  const Json in = c.read_input();
  const Json& pj = point_part(in);
  const Space sp = parse_space(o.space);
  if (sp == Space::Hn) {
    const auto r = siegel_reduce(siegel_point_from_json(pj));
    c.emit(Json{{"point", to_json(r.point)},
                {"transform", to_json(r.transform)},
                {"word", word_json(r.word)},
                {"iterations", r.iterations},
                {"membership", membership_json(r.membership)}});
  } else if (sp == Space::Hnm) {
    const auto r = jacobi_reduce(jacobi_point_from_json(pj));
    c.emit(Json{{"point", to_json(r.point)},
                {"transform", to_json(r.transform)},
                {"word", word_json(r.word)},
                {"membership", membership_json(r.membership)}});
  } else {
    throw UsageError("reduce supports --space hn and hnm");
  }
  return kOk;
}

int cmd_membership(const Context& c, const Options& o) {
  const Json in = c.read_input();
  const Json& pj = point_part(in);
  if (o.space == "minkowski") {
    c.emit(Json{{"membership", membership_json(is_minkowski_reduced(rmat_from_json(require(pj, "Y"))))}});
    return kOk;
  }
  const Space sp = parse_space(o.space);
  if (sp == Space::Disk) throw UsageError("membership supports --space hn, hnm and minkowski");
  const auto m = sp == Space::Hn ? siegel_membership(siegel_point_from_json(pj))
                                 : jacobi_domain_membership(jacobi_point_from_json(pj));
  c.emit(Json{{"membership", membership_json(m)}});
  return kOk;
}

int cmd_volume(const Context& c, const Options& o) {
  Json j{{"value", siegel_volume(o.vn)}};
  if (o.estimate) {
    if (o.vn != 1) throw UsageError("--estimate is available for --n 1 only");
    j["estimate"] = volume_estimate_F1(o.samples, c.seed, c.workers);
    j["samples"] = o.samples;
    j["seed"] = c.seed;
  }
  c.emit(j);
  return kOk;
}

int cmd_bessel(const Context& c, const Options& o) {
  if (o.derivatives < 0) throw UsageError("--derivatives must be non-negative");
  const cplx s(o.s_re, o.s_im);
  const auto d = bessel_K_derivatives(s, o.z, o.derivatives);
  Json vals = Json::array();
  for (const cplx& v : d) vals.push_back(to_json(v));
  c.emit(Json{{"s", to_json(s)}, {"z", o.z}, {"values", vals}});
  return kOk;
}

int cmd_eigen_check(const Context& c, const Options& o) {
  if (o.entry < 1 || o.entry > 4) throw UsageError("--entry must be 1..4");
  if (o.points < 1) throw UsageError("--points must be positive");
  const cplx s(o.s_re, o.s_im);
  Json entries = Json::array();
  for (const auto* e : eigen_entries_for_item(o.entry)) {
    Rng rng(derive_seed(c.seed, "cli-eigen-" + e->id));
    double worst = 0.0;
    for (int i = 0; i < o.points; ++i) worst = std::max(worst, eigen_residual(*e, s, rng.jacobi_point(1, 1), o.a));
    const auto g = growth_check(*e, s, rng.jacobi_point(1, 1), 30, o.a);
    entries.push_back(Json{{"id", e->id},
                           {"eigenvalue", to_json(e->eigenvalue(s))},
                           {"points", o.points},
                           {"max_residual", worst},
                           {"growth", Json{{"N", g.N}, {"C", g.C}, {"worst_ratio", g.worst}, {"holds", g.holds}}}});
  }
  c.emit(Json{{"item", o.entry}, {"s", to_json(s)}, {"entries", entries}});
  return kOk;
}

int cmd_eisenstein(const Context& c, const Options& o) {
  if (o.bound < 1) throw UsageError("--bound must be positive");
  const auto in = c.optional_input();
  const JacobiPoint p = in ? jacobi_point_from_json(point_part(*in))
                           : JacobiPoint::from_complex(CMat(1, 1, cplx(0.1, 1.1)), CMat(1, 1, cplx(0.2, 0.3)));
  if (p.n() != 1 || p.m() != 1) fail(ErrorCode::UnsupportedDimension, "Eisenstein terms are implemented for n = m = 1");
  const cplx s(o.s_re, o.s_im);
  const auto cosets = eisenstein_cosets(o.bound);
  Rng rng(derive_seed(c.seed, "cli-eisenstein"));
  double worst = 0.0;
  for (int i = 0; i < o.trials; ++i) {
    const auto g = coset_element(cosets[static_cast<std::size_t>(rng.integer(0, static_cast<long>(cosets.size()) - 1))]);
    const auto g0 = random_gamma_11(rng);
    const auto q = rng.jacobi_point(1, 1);
    worst = std::max(worst, relative_defect(eisenstein_term(g, s, jacobi_action(g0, q).image),
                                            eisenstein_term(jacobi_multiply(g, g0), s, q)));
  }
  c.emit(Json{{"s", to_json(s)},
              {"bound", o.bound},
              {"terms", cosets.size()},
              {"partial_sum", to_json(eisenstein_truncated(s, p, o.bound))},
              {"cocycle_trials", o.trials},
              {"cocycle_max_defect", worst}});
  return kOk;
}

int cmd_torus_gram(const Context& c, const Options& o) {
  if (o.grid < 2) throw UsageError("--grid must be at least 2");
  if (o.radius < 0) throw UsageError("--radius must be non-negative");
  const auto in = c.optional_input();
  const CMat omega = in ? cmat_from_json(require(*in, "omega")) : CMat(1, 1, cplx(0.0, 1.0));
  const auto rc = riemann_conditions_check(omega);
  const Json riemann{{"rc1_defect", rc.rc1_defect}, {"rc2_min_eig", rc.rc2_min_eig}, {"rc1", rc.rc1}, {"rc2", rc.rc2}};
  if (!rc.rc1 || !rc.rc2) {
    fail(ErrorCode::NotPositiveDefinite, "period matrix violates the Riemann conditions", rc.rc1 ? -rc.rc2_min_eig : rc.rc1_defect);
  }
  const auto P = SiegelPoint::from_omega(omega);
  const auto idx = character_box(o.radius);
  const CMat G = torus_gram(P, idx, o.grid, c.workers);
  const double dev = max_abs_diff(G, CMat::identity(idx.size()));
  c.emit(Json{{"riemann", riemann}, {"characters", idx.size()}, {"grid", o.grid}, {"gram_max_deviation", dev}});
  return kOk;
}

int cmd_verify_all(const Context& c, const Options& o) {
  if (o.format != "table" && o.format != "json") throw UsageError("--format must be table or json");
  AcceptanceOptions opt;
  opt.seed = c.seed;
  opt.workers = c.workers;
  opt.only = o.only;
  const bool table = o.format == "table";
  const auto results = run_acceptance(opt, [&](const CriterionResult& r) {
    if (table) *c.out << format_result_line(r) << "\n" << std::flush;
  });
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  if (table) {
    for (const auto& s : skipped_by_design()) *c.out << "[SKIP]     by design: " << s << "\n";
    *c.out << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
  } else {
    Json arr = Json::array();
    for (const auto& r : results) {
      arr.push_back(Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"measured", r.measured},
                         {"threshold", r.threshold}, {"detail", r.detail}});
    }
    Json skipped = Json::array();
    for (const auto& s : skipped_by_design()) skipped.push_back(s);
    c.emit(Json{{"seed", c.seed}, {"criteria", arr}, {"skipped_by_design", skipped}, {"all_passed", all}});
  }
  return all ? kOk : kCriteriaFailed;
}

Json error_body(const std::string& code, const std::string& message, double defect = 0.0) {
  return Json{{"error", Json{{"code", code}, {"message", message}, {"defect", defect}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Context ctx;
  ctx.in = &in;
  ctx.out = &out;
  ctx.err = &err;
  Options o;

  CLI::App app{"Siegel-Jacobi space toolkit", args.empty() ? "sj" : args[0]};
  app.require_subcommand(1);
  app.fallthrough();
  auto* input_opt = app.add_option("--input", ctx.input, "JSON input file, - for stdin");
  app.add_option("--seed", ctx.seed, "root seed");
  app.add_option("--tol-file", ctx.tol_file, "JSON file overriding tolerances");
  app.add_option("--workers", ctx.workers, "OpenMP threads, 0 for the runtime default")->check(CLI::NonNegativeNumber);
  app.add_option("--json-indent", ctx.indent, "indentation, -1 for compact output");

  std::map<std::string, std::function<int()>> handlers;
  auto sub = [&](const std::string& name, const std::string& help, int (*fn)(const Context&, const Options&)) {
    handlers[name] = [&ctx, &o, fn] { return fn(ctx, o); };
    return app.add_subcommand(name, help);
  };
  auto scale_opts = [&](CLI::App* s) {
    s->add_option("--a", o.a, "metric scale A");
    s->add_option("--b", o.b, "metric scale B");
  };

  auto* act = sub("act", "apply a group element to a point", cmd_act);
  act->add_option("--space", o.space, "hn, hnm or disk");
  auto* mul = sub("multiply", "multiply two group elements", cmd_multiply);
  mul->add_option("--space", o.space, "hn or hnm");
  mul->add_option("--m", o.m, "m for elements without a Heisenberg part");
  auto* cay = sub("cayley", "partial Cayley transform", cmd_cayley);
  cay->add_flag("--to-space", o.to_space);
  cay->add_flag("--to-disk", o.to_disk);
  auto* met = sub("metric", "invariant metric tensor at a point", cmd_metric);
  met->add_option("--space", o.space, "hn, hnm or disk");
  scale_opts(met);
  auto* vd = sub("volume-density", "invariant volume density at a point", cmd_volume_density);
  vd->add_option("--space", o.space, "hn or hnm");
  auto* lap = sub("laplacian", "closed-form Laplacian of a seeded test field", cmd_laplacian);
  lap->add_option("--space", o.space, "hn, hnm or disk");
  scale_opts(lap);
  auto* opc = sub("operator", "apply a named invariant operator to a seeded test field", cmd_operator);
  opc->add_option("--name", o.name, "laplacian, D, Psi, D1, D2, K, T, H1, H2")->required();
  opc->add_option("--space", o.space, "hn, hnm or disk");
  auto* inv = sub("invariance-test", "seeded invariance test", cmd_invariance_test);
  inv->add_option("--what", o.what, "metric, volume or operator");
  inv->add_option("--name", o.name, "operator name");
  inv->add_option("--space", o.space, "hn, hnm or disk");
  inv->add_option("--n", o.n)->check(CLI::Range(1, 4));
  inv->add_option("--m", o.m)->check(CLI::Range(1, 4));
  inv->add_option("--trials", o.trials);
  scale_opts(inv);
  auto* ip = sub("invariant-poly", "evaluate a U(n)-invariant polynomial on a tangent pair", cmd_invariant_poly);
  ip->add_option("--family", o.family)->required();
  ip->add_option("--indices", o.indices)->delimiter(',');
  ip->add_option("--trials", o.trials, "random unitaries for the invariance defect");
  auto* red = sub("reduce", "reduce a point into the fundamental domain", cmd_reduce);
  red->add_option("--space", o.space, "hn or hnm");
  auto* mem = sub("membership", "fundamental-domain membership report", cmd_membership);
  mem->add_option("--space", o.space, "hn, hnm or minkowski");
  auto* vol = sub("volume", "volume of the Siegel modular domain", cmd_volume);
  vol->add_option("--n", o.vn)->required()->check(CLI::Range(1, 4));
  vol->add_flag("--estimate", o.estimate, "Monte Carlo estimate (n = 1)");
  vol->add_option("--samples", o.samples);
  auto* bes = sub("bessel", "K_s(z) and its z-derivatives", cmd_bessel);
  bes->add_option("--s-re", o.s_re);
  bes->add_option("--s-im", o.s_im);
  bes->add_option("--z", o.z)->required();
  bes->add_option("--derivatives", o.derivatives);
  auto* eig = sub("eigen-check", "residuals of the eigenfunction catalog", cmd_eigen_check);
  eig->add_option("--entry", o.entry)->required();
  eig->add_option("--s-re", o.s_re);
  eig->add_option("--s-im", o.s_im);
  eig->add_option("--a", o.a, "frequency of the Bessel entry");
  eig->add_option("--points", o.points);
  auto* eis = sub("eisenstein", "truncated Eisenstein sum and cocycle check", cmd_eisenstein);
  eis->add_option("--bound", o.bound);
  eis->add_option("--s-re", o.s_re);
  eis->add_option("--s-im", o.s_im);
  eis->add_option("--trials", o.trials);
  auto* tg = sub("torus-gram", "Gram matrix of torus characters", cmd_torus_gram);
  tg->add_option("--grid", o.grid);
  tg->add_option("--radius", o.radius, "character indices in [-r, r]^2");
  auto* va = sub("verify-all", "run the acceptance suite", cmd_verify_all);
  va->add_option("--only", o.only, "criterion ids")->delimiter(',');
  va->add_option("--format", o.format, "table or json");

  std::vector<std::string> rev(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rev.begin(), rev.end());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    const bool unknown = app.get_subcommands().empty();
    out << error_body(unknown ? "UnknownSubcommand" : "UsageError", e.what()).dump(ctx.indent) << "\n";
    return kUsage;
  }
  ctx.input_given = input_opt->count() > 0;

  const Tolerances saved = default_tolerances();
  struct Restore {
    Tolerances t;
    ~Restore() { set_default_tolerances(t); }
  } restore{saved};

  try {
    if (!ctx.tol_file.empty()) {
      std::ifstream f(ctx.tol_file);
      if (!f) throw UsageError("cannot open tolerance file " + ctx.tol_file);
      set_default_tolerances(tolerances_from_json(Json::parse(f)));
    }
    std::ostringstream buffered;
    const std::string name = app.get_subcommands().front()->get_name();
    // Buffer so that a failure never leaves half a JSON document on stdout.
    std::ostream* real_out = ctx.out;
    if (name != "verify-all") ctx.out = &buffered;
    const int code = handlers.at(name)();
    if (name != "verify-all") *real_out << buffered.str();
    return code;
  } catch (const Error& e) {
    out << error_body(to_string(e.code()), e.what(), e.defect()).dump(ctx.indent) << "\n";
    return kValidationError;
  } catch (const UsageError& e) {
    out << error_body("UsageError", e.what()).dump(ctx.indent) << "\n";
    return kUsage;
  } catch (const Json::exception& e) {
    out << error_body("MalformedJson", e.what()).dump(ctx.indent) << "\n";
    return kMalformedJson;
  } catch (const MalformedInput& e) {
    out << error_body("MalformedJson", e.what()).dump(ctx.indent) << "\n";
    return kMalformedJson;
  } catch (const std::exception& e) {
    out << error_body("Internal", e.what()).dump(ctx.indent) << "\n";
    return kInternal;
  }
}

}  // namespace sj::cli
