#include "sj/spectral.hpp"

#include "sj/actions.hpp"
#include "sj/bessel.hpp"
#include "sj/linalg.hpp"
#include "sj/operators.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include <omp.h>

namespace sj {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const cplx kTwoPiI(0.0, kTwoPi);

using Body = std::function<Jet(cplx s, double a, const Jet& x, const Jet& y, const Jet& u, const Jet& v)>;

EigenCatalogEntry make_entry(std::string id, int item, Body body) {
  EigenCatalogEntry e;
  e.id = id;
  e.item = item;
  e.field = [id, body](cplx s, double a) {
    return ScalarField{Chart::jacobi(1, 1), id, [s, a, body](std::span<const Jet> c) {
                         return body(s, a, c[0], c[1], c[2], c[3]);
                       }};
  };
  switch (item) {
    case 1:
    case 2: e.eigenvalue = [](cplx s) { return s * (s - 1.0); }; break;
    case 3: e.eigenvalue = [](cplx s) { return s * (s + 1.0); }; break;
    default: e.eigenvalue = [](cplx) { return cplx(0.0); }; break;
  }
  // Polynomial degree in y: y^s terms grow like y^{Re s}; the Bessel entry decays.
  if (item == 1) {
    e.growth_exponent = [](cplx) { return 0; };
  } else if (item == 4) {
    const int deg = id == "y" ? 1 : 0;
    e.growth_exponent = [deg](cplx) { return deg; };
  } else {
    e.growth_exponent = [](cplx s) { return std::max(0, static_cast<int>(std::ceil(s.real()))); };
  }
  return e;
}

}  // namespace

const std::vector<EigenCatalogEntry>& eigen_catalog() {
  static const std::vector<EigenCatalogEntry> catalog = [] {
    std::vector<EigenCatalogEntry> c;
    c.push_back(make_entry("bessel", 1, [](cplx s, double a, const Jet& x, const Jet& y, const Jet&, const Jet&) {
      if (a == 0.0) fail(ErrorCode::InvalidArgument, "the Bessel entry needs a != 0");
      return pow(y, 0.5) * bessel_K(s - 0.5, kTwoPi * std::abs(a) * y) * exp(kTwoPiI * a * x);
    }));
    auto ys = [](cplx s, const Jet& y) { return pow(y, s); };
    c.push_back(make_entry("y^s", 2, [ys](cplx s, double, const Jet&, const Jet& y, const Jet&, const Jet&) { return ys(s, y); }));
    c.push_back(make_entry("y^s x", 2, [ys](cplx s, double, const Jet& x, const Jet& y, const Jet&, const Jet&) { return ys(s, y) * x; }));
    c.push_back(make_entry("y^s u", 2, [ys](cplx s, double, const Jet&, const Jet& y, const Jet& u, const Jet&) { return ys(s, y) * u; }));
    c.push_back(make_entry("y^s v", 3, [ys](cplx s, double, const Jet&, const Jet& y, const Jet&, const Jet& v) { return ys(s, y) * v; }));
    c.push_back(make_entry("y^s uv", 3, [ys](cplx s, double, const Jet&, const Jet& y, const Jet& u, const Jet& v) { return ys(s, y) * u * v; }));
    c.push_back(make_entry("y^s xv", 3, [ys](cplx s, double, const Jet& x, const Jet& y, const Jet&, const Jet& v) { return ys(s, y) * x * v; }));
    c.push_back(make_entry("x", 4, [](cplx, double, const Jet& x, const Jet&, const Jet&, const Jet&) { return x; }));
    c.push_back(make_entry("y", 4, [](cplx, double, const Jet&, const Jet& y, const Jet&, const Jet&) { return y; }));
    c.push_back(make_entry("u", 4, [](cplx, double, const Jet&, const Jet&, const Jet& u, const Jet&) { return u; }));
    c.push_back(make_entry("v", 4, [](cplx, double, const Jet&, const Jet&, const Jet&, const Jet& v) { return v; }));
    c.push_back(make_entry("xv", 4, [](cplx, double, const Jet& x, const Jet&, const Jet&, const Jet& v) { return x * v; }));
    c.push_back(make_entry("uv", 4, [](cplx, double, const Jet&, const Jet&, const Jet& u, const Jet& v) { return u * v; }));
    return c;
  }();
  return catalog;
}

const EigenCatalogEntry& eigen_entry(const std::string& id) {
  for (const auto& e : eigen_catalog()) {
    if (e.id == id) return e;
  }
  fail(ErrorCode::InvalidArgument, "unknown catalog entry " + id);
}

std::vector<const EigenCatalogEntry*> eigen_entries_for_item(int item) {
  if (item < 1 || item > 4) fail(ErrorCode::IndexOutOfRange, "catalog items are 1..4");
  std::vector<const EigenCatalogEntry*> out;
  for (const auto& e : eigen_catalog()) {
    if (e.item == item) out.push_back(&e);
  }
  return out;
}

namespace {

void require_h11(const JacobiPoint& p) {
  if (p.n() != 1 || p.m() != 1) fail(ErrorCode::UnsupportedDimension, "the catalog lives on H_1 × C");
}

}  // namespace

double eigen_residual(const EigenCatalogEntry& entry, cplx s, const JacobiPoint& p, double a) {
  require_h11(p);
  const ScalarField f = entry.field(s, a);
  const cplx lap = laplacian_jacobi(f, p, MetricScales{1.0, 1.0});
  return std::abs(lap - entry.eigenvalue(s) * f.value(coords(p)));
}

GrowthReport growth_check(const EigenCatalogEntry& entry, cplx s, const JacobiPoint& p, int kmax, double a) {
  require_h11(p);
  const ScalarField f = entry.field(s, a);
  auto c = coords(p);
  const double y0 = c[1];
  GrowthReport r;
  r.N = entry.growth_exponent(s);
  // C covers the ray start with the factor max(1, y0^{-N}) absorbing y0 < 1.
  r.C = std::max(1e-300, std::abs(f.value(c))) / std::pow(y0, r.N);
  for (int k = 0; k <= kmax; ++k) {
    c[1] = y0 * std::ldexp(1.0, k);
    const double bound = r.C * std::pow(c[1], r.N);
    r.worst = std::max(r.worst, std::abs(f.value(c)) / bound);
  }
  r.holds = r.worst <= 1.0 + 1e-9;
  return r;
}

// ---------------------------------------------------------------------------

double fourier_ode_residual(const PlaneField& F, cplx s, long n_idx, long r_idx, double y, double v) {
  if (!(y > 0.0)) fail(ErrorCode::InvalidArgument, "y must be positive");
  const std::vector<double> pt{y, v};
  const auto vars = seed_variables(pt, 2);
  const Jet f = F(vars[0], vars[1]);
  const double a = kTwoPi * static_cast<double>(n_idx), b = kTwoPi * static_cast<double>(r_idx);
  const cplx lambda = s * (s - 1.0);
  const cplx lhs = y * y * f.partial({0, 0}) + (y + v * v) * f.partial({1, 1}) + 2.0 * y * v * f.partial({0, 1});
  const double ab = a * y + b * v;
  const cplx rhs = (ab * ab + b * b * y + lambda) * f.value();
  return std::abs(lhs - rhs);
}

double fourier_ode_residual(cplx s, long n_idx, long r_idx, double y, double v) {
  if (n_idx == 0) return fourier_ode_residual([s](const Jet& yy, const Jet&) { return pow(yy, s); }, s, n_idx, r_idx, y, v);
  const double k = kTwoPi * std::abs(static_cast<double>(n_idx));
  return fourier_ode_residual(
      [s, k](const Jet& yy, const Jet&) { return pow(yy, 0.5) * bessel_K(s - 0.5, k * yy); }, s, n_idx, r_idx, y, v);
}

// ---------------------------------------------------------------------------

JacobiGroupElement coset_element(const EisensteinCoset& k) {
  if (std::gcd(k.c, k.d) != 1) fail(ErrorCode::NotCoprime, "(c, d) must be coprime");
  if (k.c < 0 || (k.c == 0 && k.d != 1)) fail(ErrorCode::InvalidArgument, "coset datum must have c > 0 or (c, d) = (0, 1)");
  long a = 1, b = 0;
  if (k.c > 0) {
    // Extended gcd: a d − b c = 1.
    long r0 = k.d, r1 = k.c, s0 = 1, s1 = 0;
    while (r1 != 0) {
      const long q = r0 / r1;
      std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
      std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
    }
    // s0·d ≡ r0 = ±1 (mod c).
    a = s0 * r0;
    a = ((a % k.c) + k.c) % k.c;
    b = (a * k.d - 1) / k.c;
  }
  RMat A(1, 1), B(1, 1), C(1, 1), D(1, 1);
  A(0, 0) = static_cast<double>(a);
  B(0, 0) = static_cast<double>(b);
  C(0, 0) = static_cast<double>(k.c);
  D(0, 0) = static_cast<double>(k.d);
  RMat lam(1, 1);
  lam(0, 0) = static_cast<double>(k.lambda);
  return JacobiGroupElement::make(SymplecticMatrix::make(A, B, C, D), HeisenbergElement::make(lam, RMat(1, 1), RMat(1, 1)));
}

cplx eisenstein_term(const JacobiGroupElement& g, cplx s, const JacobiPoint& p) {
  require_h11(p);
  const JacobiPoint q = jacobi_action(g, p).image;
  return std::pow(cplx(q.base().Y()(0, 0)), s) * q.V()(0, 0);
}

cplx eisenstein_term(const EisensteinCoset& k, cplx s, const JacobiPoint& p) {
  return eisenstein_term(coset_element(k), s, p);
}

std::vector<EisensteinCoset> eisenstein_cosets(long bound) {
  if (bound < 0) fail(ErrorCode::InvalidArgument, "bound must be non-negative");
  std::vector<EisensteinCoset> out;
  for (long c = 0; c <= bound; ++c)
    for (long d = -bound; d <= bound; ++d) {
      if (std::gcd(c, d) != 1 || (c == 0 && d != 1)) continue;
      for (long l = -bound; l <= bound; ++l) out.push_back({c, d, l});
    }
  return out;
}

cplx eisenstein_truncated(cplx s, const JacobiPoint& p, long bound) {
  cplx sum = 0.0;
  for (const auto& k : eisenstein_cosets(bound)) sum += eisenstein_term(k, s, p);
  return sum;
}

JacobiGroupElement random_gamma_11(Rng& rng, int word_length, long heis_range) {
  SymplecticMatrix M = SymplecticMatrix::identity(1);
  RMat one(1, 1);
  one(0, 0) = 1.0;
  for (int i = 0; i < word_length; ++i) {
    switch (rng.integer(0, 2)) {
      case 0: M = SymplecticMatrix::translation(one) * M; break;
      case 1: M = SymplecticMatrix::translation(-1.0 * one) * M; break;
      default: M = SymplecticMatrix::inversion(1) * M; break;
    }
  }
  auto draw = [&] {
    RMat r(1, 1);
    r(0, 0) = static_cast<double>(rng.integer(-heis_range, heis_range));
    return r;
  };
  const RMat l = draw(), u = draw(), k = draw();
  return JacobiGroupElement::make(M, HeisenbergElement::make(l, u, k));
}

// ---------------------------------------------------------------------------

RiemannReport riemann_conditions_check(const CMat& omega, const Tolerances& tol) {
  const std::size_t n = omega.rows();
  if (!omega.square()) fail(ErrorCode::DimensionMismatch, "Ω must be square");
  CMat star(n, 2 * n);
  star.set_block(0, 0, CMat::identity(n));
  star.set_block(0, n, omega);
  CMat J(2 * n, 2 * n);
  J.set_block(0, n, CMat::identity(n));
  J.set_block(n, 0, CMat(-1.0 * CMat::identity(n)));
  RiemannReport r;
  r.rc1_defect = max_abs(CMat(star * J * transpose(star)));
  const CMat H = cplx(0.0, 1.0) * (star * J * adjoint(star));  // −(1/i) = i
  // Hermitian H = P + iQ has the spectrum of [[P, −Q], [Q, P]] (each eigenvalue twice).
  const RMat P = real(H), Q = imag(H);
  RMat big(2 * n, 2 * n);
  big.set_block(0, 0, P);
  big.set_block(0, n, RMat(-1.0 * Q));
  big.set_block(n, 0, Q);
  big.set_block(n, n, P);
  const auto eig = symmetric_eigenvalues(symmetric_part(big));
  r.rc2_min_eig = *std::min_element(eig.begin(), eig.end());
  r.rc1 = r.rc1_defect <= 1e-12 * std::max(1.0, max_abs(omega));
  r.rc2 = r.rc2_min_eig > tol.posdef_tol;
  return r;
}

namespace {

void check_integer(const RMat& M, const char* what) {
  for (double x : M.data()) {
    if (x != std::round(x)) fail(ErrorCode::InvalidArgument, std::string(what) + " must have integer entries");
  }
}

}  // namespace

cplx torus_character(const SiegelPoint& omega, const CharacterIndex& idx, const CMat& Z) {
  const std::size_t n = omega.n();
  if (Z.cols() != n || idx.A_idx.rows() != Z.rows() || idx.A_idx.cols() != n || idx.B_idx.rows() != Z.rows() ||
      idx.B_idx.cols() != n) {
    fail(ErrorCode::DimensionMismatch, "character index and Z must be m×n");
  }
  check_integer(idx.A_idx, "A");
  check_integer(idx.B_idx, "B");
  const RMat U = real(Z), V = imag(Z);
  const RMat Yi = inverse(omega.Y());
  const double phase = trace(RMat(transpose(idx.A_idx) * U)) +
                       trace(RMat((idx.B_idx - idx.A_idx * omega.X()) * Yi * transpose(V)));
  // Reduce the phase mod 1 first so large indices keep full precision.
  const double frac = phase - std::floor(phase);
  return std::exp(kTwoPiI * frac);
}

CMat torus_gram(const SiegelPoint& omega, const std::vector<CharacterIndex>& indices, int grid, int workers) {
  if (omega.n() != 1) fail(ErrorCode::UnsupportedDimension, "torus_gram is implemented for n = m = 1");
  if (grid < 1) fail(ErrorCode::InvalidArgument, "grid must be positive");
  for (const auto& idx : indices) {
    if (idx.A_idx.rows() != 1 || idx.A_idx.cols() != 1) fail(ErrorCode::UnsupportedDimension, "torus_gram needs m = 1");
  }
  const std::size_t K = indices.size();
  const cplx w = omega.omega()(0, 0);
  const std::size_t G = static_cast<std::size_t>(grid);
  // Character values on the grid, then Gram entries; both loops write disjoint slots.
  std::vector<cplx> vals(K * G * G);
  const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(threads)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(G * G); ++t) {
    const auto ut = static_cast<std::size_t>(t);
    const double al = (static_cast<double>(ut / G) + 0.5) / static_cast<double>(G);
    const double be = (static_cast<double>(ut % G) + 0.5) / static_cast<double>(G);
    CMat Z(1, 1);
    Z(0, 0) = al + be * w;
    for (std::size_t k = 0; k < K; ++k) vals[k * G * G + ut] = torus_character(omega, indices[k], Z);
  }
  CMat gram(K, K);
#pragma omp parallel for schedule(static) num_threads(threads)
  for (std::int64_t jk = 0; jk < static_cast<std::int64_t>(K * K); ++jk) {
    const std::size_t j = static_cast<std::size_t>(jk) / K, k = static_cast<std::size_t>(jk) % K;
    cplx acc = 0.0;
    for (std::size_t t = 0; t < G * G; ++t) acc += vals[j * G * G + t] * std::conj(vals[k * G * G + t]);
    gram(j, k) = acc / static_cast<double>(G * G);
  }
  double off = 0.0;
  for (std::size_t j = 0; j < K; ++j)
    for (std::size_t k = 0; k < K; ++k) {
      if (j != k) off = std::max(off, std::abs(gram(j, k)));
    }
  if (off > 1e-4) fail(ErrorCode::GridTooCoarse, "grid aliases distinct characters", off);
  return gram;
}

std::vector<CharacterIndex> character_box(long r) {
  std::vector<CharacterIndex> out;
  for (long a = -r; a <= r; ++a)
    for (long b = -r; b <= r; ++b) {
      RMat A(1, 1), B(1, 1);
      A(0, 0) = static_cast<double>(a);
      B(0, 0) = static_cast<double>(b);
      out.push_back({A, B});
    }
  return out;
}

}  // namespace sj
