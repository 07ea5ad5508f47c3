#pragma once

#include "sj/chart.hpp"
#include "sj/jet.hpp"

#include <cstdint>
#include <string>

namespace sj {

struct ScalarField {
  Chart chart;
  std::string name;
  JetField eval;

  // Jet of the requested order at the point.
  Jet jet(std::span<const double> point, int order) const;
  cplx value(std::span<const double> point) const;
};

// f∘map, where map goes from `source` into f's chart.
ScalarField compose(const ScalarField& f, const ChartMap& map, const Chart& source);

// Image of a point under a chart map (values of the order-0 part).
std::vector<double> map_point(const ChartMap& map, std::span<const double> point);

// exp(a·x) · (1 + Σ_k b_k x^{α_k}) with a few random monomials of degree <= 3.
// a, b are drawn from the seed; complex_valued gives complex b.
ScalarField random_test_field(const Chart& chart, std::uint64_t seed, bool complex_valued = false);

ScalarField constant_field(const Chart& chart, double c);

}  // namespace sj
