#pragma once

// Real coordinate charts. Ordering: x_{μν} (μ<=ν, row-major over the upper
// triangle), y_{μν} likewise, then u_{kl}, v_{kl} row-major. The disk chart
// uses Re w, Im w, Re η, Im η in the same pattern.

#include "sj/jet.hpp"
#include "sj/types.hpp"

#include <vector>

namespace sj {

enum class Space { Hn, Hnm, Disk };

const char* to_string(Space s);

struct Chart {
  Space space = Space::Hnm;
  std::size_t n = 1;
  std::size_t m = 0;

  static Chart siegel(std::size_t n) { return Chart{Space::Hn, n, 0}; }
  static Chart jacobi(std::size_t n, std::size_t m) { return Chart{Space::Hnm, n, m}; }
  static Chart disk(std::size_t n, std::size_t m) { return Chart{Space::Disk, n, m}; }

  std::size_t sym_count() const noexcept { return n * (n + 1) / 2; }
  std::size_t dim() const noexcept { return 2 * sym_count() + 2 * m * n; }

  int ix(std::size_t a, std::size_t b) const;
  int iy(std::size_t a, std::size_t b) const { return ix(a, b) + static_cast<int>(sym_count()); }
  int iu(std::size_t k, std::size_t l) const { return static_cast<int>(2 * sym_count() + k * n + l); }
  int iv(std::size_t k, std::size_t l) const { return iu(k, l) + static_cast<int>(m * n); }

  std::vector<std::string> coordinate_names() const;
};

inline cplx make_complex(double re, double im) { return {re, im}; }
inline Jet make_complex(const Jet& re, const Jet& im) { return re + im * kI; }

template <class R>
using ComplexOf = decltype(make_complex(std::declval<R>(), std::declval<R>()));

// The complex matrices (Ω, Z) or (W, η) encoded by a coordinate vector.
template <class R>
struct ChartMats {
  Mat<ComplexOf<R>> first;
  Mat<ComplexOf<R>> second;
};

template <class R>
ChartMats<R> unpack(const Chart& chart, std::span<const R> c) {
  if (c.size() != chart.dim()) fail(ErrorCode::DimensionMismatch, "coordinate vector length does not match chart");
  using C = ComplexOf<R>;
  ChartMats<R> out{Mat<C>(chart.n, chart.n), Mat<C>(chart.m, chart.n)};
  for (std::size_t a = 0; a < chart.n; ++a)
    for (std::size_t b = 0; b < chart.n; ++b)
      out.first(a, b) = make_complex(c[static_cast<std::size_t>(chart.ix(a, b))], c[static_cast<std::size_t>(chart.iy(a, b))]);
  for (std::size_t k = 0; k < chart.m; ++k)
    for (std::size_t l = 0; l < chart.n; ++l)
      out.second(k, l) = make_complex(c[static_cast<std::size_t>(chart.iu(k, l))], c[static_cast<std::size_t>(chart.iv(k, l))]);
  return out;
}

// Inverse of unpack: reads the upper triangle of `first` (assumed symmetric).
template <class C>
auto pack(const Chart& chart, const Mat<C>& first, const Mat<C>& second) {
  using R = std::decay_t<decltype(real_part(std::declval<C>()))>;
  std::vector<R> c(chart.dim());
  for (std::size_t a = 0; a < chart.n; ++a)
    for (std::size_t b = a; b < chart.n; ++b) {
      c[static_cast<std::size_t>(chart.ix(a, b))] = real_part(first(a, b));
      c[static_cast<std::size_t>(chart.iy(a, b))] = imag_part(first(a, b));
    }
  for (std::size_t k = 0; k < chart.m; ++k)
    for (std::size_t l = 0; l < chart.n; ++l) {
      c[static_cast<std::size_t>(chart.iu(k, l))] = real_part(second(k, l));
      c[static_cast<std::size_t>(chart.iv(k, l))] = imag_part(second(k, l));
    }
  return c;
}

std::vector<double> coords(const SiegelPoint& p);
std::vector<double> coords(const JacobiPoint& p);
std::vector<double> coords(const DiskPoint& p);

SiegelPoint siegel_point_at(const Chart& chart, std::span<const double> c);
JacobiPoint jacobi_point_at(const Chart& chart, std::span<const double> c);
DiskPoint disk_point_at(const Chart& chart, std::span<const double> c);

// Coordinate jets at p as complex matrices, e.g. (Ω, Z) with Ω_{ab} = x_{ab} + i y_{ab}.
ChartMats<Jet> unpack_jets(const Chart& chart, std::span<const Jet> vars);

}  // namespace sj
