#pragma once

// Truncated multivariate Taylor series ("jets") with complex coefficients.
//
// A jet of order r in d real variables stores the Taylor coefficients
// c_alpha = (1/alpha!) d^alpha f for all multi-indices |alpha| <= r. The
// variables are real chart coordinates, so conjugation and Re/Im act on the
// coefficients directly.
//
// A jet without a layout is a plain constant and combines with any other jet.

#include "sj/matrix.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace sj {

inline constexpr int kMaxJetOrder = 4;

class JetLayout {
 public:
  JetLayout(int dim, int order);

  int dim() const noexcept { return dim_; }
  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  // Number of monomials of total degree <= o. Monomials are sorted by degree,
  // so a truncation to order o is a prefix of this length.
  std::size_t prefix(int o) const { return prefix_[static_cast<std::size_t>(o)]; }

  const std::vector<std::uint8_t>& exponents(std::size_t k) const { return monomials_[k]; }
  int degree(std::size_t k) const { return degree_[k]; }
  // Index of the monomial alpha + e_var, or -1 if it exceeds the order.
  int raise(std::size_t k, int var) const { return raise_[k * static_cast<std::size_t>(dim_) + var]; }
  long index_of(std::span<const int> alpha) const;

  struct Triple {
    std::uint32_t a, b, out;
  };
  // All (a, b, out) with monomial(a) + monomial(b) = monomial(out).
  const std::vector<Triple>& triples() const noexcept { return triples_; }

  static std::shared_ptr<const JetLayout> get(int dim, int order);

 private:
  int dim_;
  int order_;
  std::vector<std::vector<std::uint8_t>> monomials_;
  std::vector<int> degree_;
  std::vector<std::size_t> prefix_;
  std::vector<int> raise_;
  std::vector<Triple> triples_;
};

class Jet {
 public:
  Jet() : coeffs_(1, cplx(0.0)) {}
  Jet(double v) : coeffs_(1, cplx(v)) {}  // NOLINT(google-explicit-constructor)
  Jet(cplx v) : coeffs_(1, v) {}          // NOLINT(google-explicit-constructor)

  static Jet constant(std::shared_ptr<const JetLayout> layout, cplx value);
  static Jet variable(std::shared_ptr<const JetLayout> layout, int var, double value);

  bool is_constant() const noexcept { return layout_ == nullptr; }
  int order() const noexcept { return layout_ ? layout_->order() : kMaxJetOrder; }
  int dim() const noexcept { return layout_ ? layout_->dim() : 0; }
  const std::shared_ptr<const JetLayout>& layout() const noexcept { return layout_; }

  cplx value() const noexcept { return coeffs_[0]; }
  std::span<const cplx> coeffs() const noexcept { return coeffs_; }

  // d f / d x_var as a jet of order r-1.
  Jet derivative(int var) const;
  // Mixed partial derivative value at the expansion point.
  cplx partial(std::span<const int> alpha) const;
  cplx partial(std::initializer_list<int> vars) const;
  Jet truncate(int order) const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Jet& o);
  Jet& operator/=(const Jet& o);

  friend Jet operator-(const Jet& a);
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);

  // f(h) for a univariate f given by its derivatives f^(k)(h0), k = 0..r.
  Jet compose(std::span<const cplx> derivs) const;

  Jet map_coeffs(const std::function<cplx(cplx)>& f) const;

 private:
  Jet(std::shared_ptr<const JetLayout> layout, std::vector<cplx> coeffs)
      : layout_(std::move(layout)), coeffs_(std::move(coeffs)) {}

  std::shared_ptr<const JetLayout> layout_;
  std::vector<cplx> coeffs_;
};

// Scalar hooks used by the matrix templates.
Jet conjugate(const Jet& x);
Jet real_part(const Jet& x);
Jet imag_part(const Jet& x);
inline double pivot_magnitude(const Jet& x) { return std::abs(x.value()); }
bool finite_scalar(const Jet& x);

Jet exp(const Jet& x);
Jet log(const Jet& x);
Jet sqrt(const Jet& x);
Jet pow(const Jet& x, cplx p);
Jet sin(const Jet& x);
Jet cos(const Jet& x);

using JMat = Mat<Jet>;

// Smooth maps between real charts, evaluated on jets.
using ChartMap = std::function<std::vector<Jet>(std::span<const Jet>)>;
using JetField = std::function<Jet(std::span<const Jet>)>;

// Σ_α c_α δ^α: the Taylor polynomial of f evaluated at increments δ_i, which
// must have zero constant term for the result to be exact to f's order.
Jet taylor_substitute(const Jet& f, std::span<const Jet> delta);

// Coordinate jets x_i(p) + dx_i at the point p.
std::vector<Jet> seed_variables(std::span<const double> point, int order);

// Real Jacobian d(map)_i / dx_j at p (first-order jets); the imaginary parts
// of the outputs must vanish.
RMat jacobian(const ChartMap& map, std::span<const double> point);

}  // namespace sj
