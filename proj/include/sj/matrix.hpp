#pragma once

// Small dense matrices over a generic scalar. The same templates run over
// double, std::complex<double> and Jet, which is how every formula in the
// library gets exact derivatives for free: build the inputs as jets and the
// outputs come back as jets.

#include "sj/config.hpp"
#include "sj/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace sj {

using cplx = std::complex<double>;
inline constexpr cplx kI{0.0, 1.0};

// Scalar hooks. Jet provides its own overloads in jet.hpp.
inline double conjugate(double x) { return x; }
inline cplx conjugate(const cplx& x) { return std::conj(x); }
inline double real_part(double x) { return x; }
inline double real_part(const cplx& x) { return x.real(); }
inline double imag_part(double) { return 0.0; }
inline double imag_part(const cplx& x) { return x.imag(); }
inline double pivot_magnitude(double x) { return std::abs(x); }
inline double pivot_magnitude(const cplx& x) { return std::abs(x); }
inline bool finite_scalar(double x) { return std::isfinite(x); }
inline bool finite_scalar(const cplx& x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); }

template <class A, class B>
using ProductT = decltype(std::declval<A>() * std::declval<B>());
template <class A, class B>
using SumT = decltype(std::declval<A>() + std::declval<B>());

template <class T>
class Mat {
 public:
  using value_type = T;

  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Mat(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
      fail(ErrorCode::DimensionMismatch, "matrix entry count does not match shape");
    }
  }

  static Mat identity(std::size_t n) {
    Mat out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = T(1.0);
    return out;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> data() noexcept { return data_; }
  std::span<const T> data() const noexcept { return data_; }

  template <class F>
  auto map(F&& f) const -> Mat<std::decay_t<decltype(f(std::declval<const T&>()))>> {
    using R = std::decay_t<decltype(f(std::declval<const T&>()))>;
    std::vector<R> out;
    out.reserve(data_.size());
    for (const auto& x : data_) out.push_back(f(x));
    return Mat<R>(rows_, cols_, std::move(out));
  }

  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Mat out(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
  }

  void set_block(std::size_t r0, std::size_t c0, const Mat& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
struct is_mat : std::false_type {};
template <class T>
struct is_mat<Mat<T>> : std::true_type {};

using RMat = Mat<double>;
using CMat = Mat<cplx>;

namespace detail {
template <class A, class B>
void require_same_shape(const Mat<A>& a, const Mat<B>& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    fail(ErrorCode::DimensionMismatch, std::string(what) + ": shape mismatch " +
                                           std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                           " vs " + std::to_string(b.rows()) + "x" +
                                           std::to_string(b.cols()));
  }
}
}  // namespace detail

template <class A, class B>
Mat<SumT<A, B>> operator+(const Mat<A>& a, const Mat<B>& b) {
  detail::require_same_shape(a, b, "matrix +");
  Mat<SumT<A, B>> out(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.size(); ++k) out.data()[k] = a.data()[k] + b.data()[k];
  return out;
}

template <class A, class B>
Mat<SumT<A, B>> operator-(const Mat<A>& a, const Mat<B>& b) {
  detail::require_same_shape(a, b, "matrix -");
  Mat<SumT<A, B>> out(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.size(); ++k) out.data()[k] = a.data()[k] - b.data()[k];
  return out;
}

template <class T>
Mat<T> operator-(const Mat<T>& a) {
  return a.map([](const T& x) { return T(-x); });
}

template <class A, class B>
Mat<ProductT<A, B>> operator*(const Mat<A>& a, const Mat<B>& b) {
  if (a.cols() != b.rows()) {
    fail(ErrorCode::DimensionMismatch, "matrix *: inner dimensions " + std::to_string(a.cols()) +
                                           " and " + std::to_string(b.rows()));
  }
  using R = ProductT<A, B>;
  Mat<R> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      R acc{};
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

// Scalar multiplication (scalar on either side). Restricted to non-matrix scalars.
template <class S, class T>
  requires(!is_mat<S>::value)
Mat<ProductT<S, T>> operator*(const S& s, const Mat<T>& a) {
  return a.map([&](const T& x) { return s * x; });
}

template <class T, class S>
  requires(!is_mat<S>::value)
Mat<ProductT<T, S>> operator*(const Mat<T>& a, const S& s) {
  return a.map([&](const T& x) { return x * s; });
}

template <class T>
Mat<T> transpose(const Mat<T>& a) {
  Mat<T> out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

template <class T>
auto conj(const Mat<T>& a) {
  return a.map([](const T& x) { return conjugate(x); });
}

template <class T>
auto adjoint(const Mat<T>& a) {
  return transpose(conj(a));
}

template <class T>
auto real(const Mat<T>& a) {
  return a.map([](const T& x) { return real_part(x); });
}

template <class T>
auto imag(const Mat<T>& a) {
  return a.map([](const T& x) { return imag_part(x); });
}

template <class T>
T trace(const Mat<T>& a) {
  T acc{};
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) acc += a(i, i);
  return acc;
}

template <class T>
Mat<T> symmetric_part(const Mat<T>& a) {
  Mat<T> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = 0.5 * (a(i, j) + a(j, i));
  return out;
}

inline CMat complexify(const RMat& re, const RMat& im) {
  detail::require_same_shape(re, im, "complexify");
  CMat out(re.rows(), re.cols());
  for (std::size_t k = 0; k < re.size(); ++k) out.data()[k] = cplx(re.data()[k], im.data()[k]);
  return out;
}

inline CMat complexify(const RMat& re) {
  return re.map([](double x) { return cplx(x, 0.0); });
}

template <class T>
double max_abs(const Mat<T>& a) {
  double m = 0.0;
  for (const auto& x : a.data()) m = std::max(m, pivot_magnitude(x));
  return m;
}

template <class A, class B>
double max_abs_diff(const Mat<A>& a, const Mat<B>& b) {
  detail::require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k)
    m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
  return m;
}

template <class T>
double max_asymmetry(const Mat<T>& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      m = std::max(m, pivot_magnitude(a(i, j) - a(j, i)));
  return m;
}

template <class T>
bool all_finite(const Mat<T>& a) {
  for (const auto& x : a.data()) {
    if (!finite_scalar(x)) return false;
  }
  return true;
}

// Gauss–Jordan inverse with partial pivoting on |entry| (for jets: on the
// constant term). Throws SingularMatrix when the best pivot falls below
// pivot_tol relative to the matrix scale.
template <class T>
Mat<T> inverse(const Mat<T>& m, const Tolerances& tol = default_tolerances()) {
  if (!m.square()) fail(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  const double scale = std::max(1.0, max_abs(m));
  Mat<T> a = m;
  Mat<T> inv = Mat<T>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    double best = pivot_magnitude(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double v = pivot_magnitude(a(r, col));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (!(best >= tol.pivot_tol * scale)) {
      fail(ErrorCode::SingularMatrix, "pivot magnitude below tolerance at column " + std::to_string(col),
           best);
    }
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(col, j), a(piv, j));
        std::swap(inv(col, j), inv(piv, j));
      }
    }
    const T p = a(col, col);
    const T pinv = T(1.0) / p;
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) = a(col, j) * pinv;
      inv(col, j) = inv(col, j) * pinv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const T f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) = a(r, j) - f * a(col, j);
        inv(r, j) = inv(r, j) - f * inv(col, j);
      }
    }
  }
  return inv;
}

// Determinant by partial-pivot elimination. Returns exactly zero for a
// structurally singular column instead of throwing.
template <class T>
T determinant(const Mat<T>& m) {
  if (!m.square()) fail(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  Mat<T> a = m;
  T det = T(1.0);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    double best = pivot_magnitude(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double v = pivot_magnitude(a(r, col));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best == 0.0) return T(0.0);
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(piv, j));
      det = -det;
    }
    const T p = a(col, col);
    det = det * p;
    const T pinv = T(1.0) / p;
    for (std::size_t r = col + 1; r < n; ++r) {
      const T f = a(r, col) * pinv;
      for (std::size_t j = col; j < n; ++j) a(r, j) = a(r, j) - f * a(col, j);
    }
  }
  return det;
}

// Real symmetric 2n x 2n assembly helpers used by the symplectic group.
inline RMat assemble_blocks(const RMat& a, const RMat& b, const RMat& c, const RMat& d) {
  const std::size_t n = a.rows();
  RMat out(2 * n, 2 * n);
  out.set_block(0, 0, a);
  out.set_block(0, n, b);
  out.set_block(n, 0, c);
  out.set_block(n, n, d);
  return out;
}

inline RMat standard_symplectic_form(std::size_t n) {
  RMat j(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, n + i) = 1.0;
    j(n + i, i) = -1.0;
  }
  return j;
}

}  // namespace sj
