#include "sj/fields.hpp"

#include "sj/random.hpp"

namespace sj {

Jet ScalarField::jet(std::span<const double> point, int order) const {
  if (point.size() != chart.dim()) fail(ErrorCode::DimensionMismatch, "point does not match the field's chart");
  const auto vars = seed_variables(point, order);
  Jet f = eval(vars);
  // A field that ignores its arguments yields a layout-free constant; give it the chart's layout.
  if (f.is_constant() && !vars.empty()) return Jet::constant(vars[0].layout(), f.value());
  return f;
}

cplx ScalarField::value(std::span<const double> point) const { return jet(point, 0).value(); }

ScalarField compose(const ScalarField& f, const ChartMap& map, const Chart& source) {
  JetField inner = f.eval;
  return ScalarField{source, f.name + "∘g", [inner, map](std::span<const Jet> c) {
                       const auto img = map(c);
                       return inner(img);
                     }};
}

std::vector<double> map_point(const ChartMap& map, std::span<const double> point) {
  const auto img = map(seed_variables(point, 0));
  std::vector<double> out(img.size());
  for (std::size_t i = 0; i < img.size(); ++i) out[i] = img[i].value().real();
  return out;
}

ScalarField random_test_field(const Chart& chart, std::uint64_t seed, bool complex_valued) {
  Rng rng(seed);
  const std::size_t d = chart.dim();
  std::vector<double> a(d);
  for (auto& x : a) x = 0.3 * rng.normal();
  struct Term {
    cplx coef;
    std::vector<int> vars;
  };
  std::vector<Term> terms(3);
  for (auto& t : terms) {
    t.coef = cplx(0.5 * rng.normal(), complex_valued ? 0.5 * rng.normal() : 0.0);
    const long deg = rng.integer(1, 3);
    for (long k = 0; k < deg; ++k) t.vars.push_back(static_cast<int>(rng.integer(0, static_cast<long>(d) - 1)));
  }
  return ScalarField{chart, "test-" + std::to_string(seed), [a, terms](std::span<const Jet> c) {
                       Jet lin(0.0);
                       for (std::size_t i = 0; i < a.size(); ++i) lin += a[i] * c[i];
                       Jet poly(1.0);
                       for (const auto& t : terms) {
                         Jet mono(t.coef);
                         for (int v : t.vars) mono *= c[static_cast<std::size_t>(v)];
                         poly += mono;
                       }
                       return exp(lin) * poly;
                     }};
}

ScalarField constant_field(const Chart& chart, double c) {
  return ScalarField{chart, "constant", [c](std::span<const Jet>) { return Jet(c); }};
}

}  // namespace sj
