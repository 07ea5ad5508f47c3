#include "sj/reduction.hpp"

#include "sj/actions.hpp"
#include "sj/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

namespace sj {

bool DomainMembership::member() const {
  for (const Condition* c : {&M1, &M2, &S1, &S2, &S3, &PZ}) {
    if (c->checked && !c->holds) return false;
  }
  return true;
}

int mink_bound(std::size_t n) {
  switch (n) {
    case 1: return 1;
    case 2: return 2;
    case 3: return 3;
    default: fail(ErrorCode::UnsupportedDimension, "Minkowski reduction is implemented for n <= 3");
  }
}

namespace {

void set_condition(Condition& c, double margin, double tol) {
  c.checked = true;
  c.margin = margin;
  c.holds = margin >= -tol;
}

// Integer vectors a with ‖a‖∞ <= b, a != 0.
std::vector<std::vector<long>> box_vectors(std::size_t n, int b) {
  std::vector<std::vector<long>> out;
  std::vector<long> a(n, -b);
  while (true) {
    if (std::any_of(a.begin(), a.end(), [](long x) { return x != 0; })) out.push_back(a);
    std::size_t i = 0;
    while (i < n && a[i] == b) a[i++] = -b;
    if (i == n) break;
    ++a[i];
  }
  return out;
}

long tail_gcd(const std::vector<long>& a, std::size_t k) {
  long g = 0;
  for (std::size_t i = k; i < a.size(); ++i) g = std::gcd(g, a[i]);
  return g;
}

double quad(const RMat& Y, const std::vector<long>& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) s += static_cast<double>(a[i] * a[j]) * Y(i, j);
  return s;
}

bool is_unit_at(const std::vector<long>& a, std::size_t k) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == k ? std::abs(a[i]) != 1 : a[i] != 0) return false;
  }
  return true;
}

// Unimodular R whose first row is the primitive vector v.
RMat complete_primitive(std::vector<long> v) {
  const std::size_t n = v.size();
  RMat R = RMat::identity(n);
  // Column ops on v (v ← vE) are mirrored as row ops on R (R ← E⁻¹R) so that v·R stays fixed.
  while (true) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] != 0 && (piv == n || std::abs(v[i]) < std::abs(v[piv]))) piv = i;
    }
    bool done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == piv || v[i] == 0) continue;
      done = false;
      const long q = v[i] / v[piv];
      v[i] -= q * v[piv];  // column i -= q·column piv
      for (std::size_t c = 0; c < n; ++c) R(piv, c) += static_cast<double>(q) * R(i, c);
    }
    if (done) {
      if (piv != 0) {
        std::swap(v[0], v[piv]);
        for (std::size_t c = 0; c < n; ++c) std::swap(R(0, c), R(piv, c));
      }
      if (v[0] < 0) {
        v[0] = -v[0];
        for (std::size_t c = 0; c < n; ++c) R(0, c) = -R(0, c);
      }
      return R;
    }
  }
}

RMat rounded(const RMat& M) {
  return M.map([](double x) { return std::round(x); });
}

// [[U, 0], [0, ᵗU⁻¹]] with the inverse rounded to exact integers.
SymplecticMatrix unimodular_embedding(const RMat& U) {
  const std::size_t n = U.rows();
  return SymplecticMatrix::make(U, RMat(n, n), RMat(n, n), transpose(rounded(inverse(U))));
}

std::string int_matrix_token(const char* tag, const RMat& M) {
  std::ostringstream os;
  os << tag << '[';
  for (std::size_t i = 0; i < M.rows(); ++i) {
    if (i) os << ';';
    for (std::size_t j = 0; j < M.cols(); ++j) os << (j ? "," : "") << static_cast<long>(std::lround(M(i, j)));
  }
  os << ']';
  return os.str();
}

double floor_half_open(double x) { return std::floor(x + 0.5); }

}  // namespace

DomainMembership is_minkowski_reduced(const RMat& Y, const Tolerances& tol) {
  const std::size_t n = Y.rows();
  cholesky_posdef(Y, tol);
  DomainMembership out;
  double m1 = std::numeric_limits<double>::infinity();
  for (const auto& a : box_vectors(n, mink_bound(n))) {
    for (std::size_t k = 0; k < n; ++k) {
      if (tail_gcd(a, k) != 1 || is_unit_at(a, k)) continue;
      m1 = std::min(m1, quad(Y, a) - Y(k, k));
    }
  }
  set_condition(out.M1, n == 1 ? 0.0 : m1, tol.memb_tol);
  double m2 = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k + 1 < n; ++k) m2 = std::min(m2, Y(k, k + 1));
  set_condition(out.M2, n == 1 ? 0.0 : m2, tol.memb_tol);
  return out;
}

MinkowskiReduction minkowski_reduce(const RMat& Y0, const Tolerances& tol) {
  const std::size_t n = Y0.rows();
  cholesky_posdef(Y0, tol);
  const auto box = box_vectors(n, mink_bound(n));
  RMat U = RMat::identity(n);
  RMat Y = Y0;
  int steps = 0;
  for (;; ++steps) {
    if (steps > 100) fail(ErrorCode::IterationLimit, "Minkowski reduction did not settle (mink_bound too small?)");
    // First k with a violation, and the most violating a for it.
    std::size_t bad_k = n;
    const std::vector<long>* best = nullptr;
    double best_val = 0.0;
    for (std::size_t k = 0; k < n && bad_k == n; ++k) {
      for (const auto& a : box) {
        if (tail_gcd(a, k) != 1 || is_unit_at(a, k)) continue;
        const double d = quad(Y, a) - Y(k, k);
        if (d < -1e-13 * Y(k, k) && (!best || d < best_val)) {
          best = &a;
          best_val = d;
          bad_k = k;
        }
      }
    }
    if (bad_k == n) break;
    const std::vector<long>& a = *best;
    RMat step = RMat::identity(n);
    const RMat R = complete_primitive(std::vector<long>(a.begin() + static_cast<long>(bad_k), a.end()));
    for (std::size_t c = 0; c < n; ++c) step(bad_k, c) = static_cast<double>(a[c]);
    for (std::size_t r = 1; r < R.rows(); ++r)
      for (std::size_t c = 0; c < R.cols(); ++c) step(bad_k + r, bad_k + c) = R(r, c);
    U = step * U;
    Y = symmetric_part(U * Y0 * transpose(U));
  }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (Y(k, k + 1) < 0.0) {
      for (std::size_t c = 0; c < n; ++c) U(k + 1, c) = -U(k + 1, c);
      Y = symmetric_part(U * Y0 * transpose(U));
    }
  }
  MinkowskiReduction out{Y, U, steps, is_minkowski_reduced(Y, tol)};
  return out;
}

// ---------------------------------------------------------------------------
// Siegel reduction

const std::vector<BallElement>& generator_ball_2() {
  static const std::vector<BallElement> ball = [] {
    std::vector<BallElement> gens;
    auto E = [](std::size_t i, std::size_t j) {
      RMat S(2, 2);
      S(i, j) = S(j, i) = 1.0;
      return S;
    };
    for (auto [i, j, name] : {std::tuple{0, 0, "11"}, std::tuple{1, 1, "22"}, std::tuple{0, 1, "12"}}) {
      gens.push_back({SymplecticMatrix::translation(E(i, j)), std::string("T+") + name});
      gens.push_back({SymplecticMatrix::translation(-1.0 * E(i, j)), std::string("T-") + name});
    }
    gens.push_back({SymplecticMatrix::inversion(2), "J"});
    for (std::size_t k = 0; k < 2; ++k) {
      RMat A = RMat::identity(2), B(2, 2), C(2, 2);
      A(k, k) = 0.0;
      B(k, k) = 1.0;
      C(k, k) = -1.0;
      gens.push_back({SymplecticMatrix::make(A, B, C, A), k == 0 ? "J1" : "J2"});
    }
    for (RMat U : {RMat(2, 2, {1, 1, 0, 1}), RMat(2, 2, {1, -1, 0, 1}), RMat(2, 2, {1, 0, 1, 1}),
                   RMat(2, 2, {1, 0, -1, 1}), RMat(2, 2, {0, 1, 1, 0}), RMat(2, 2, {-1, 0, 0, 1})}) {
      gens.push_back({unimodular_embedding(U), int_matrix_token("U", U)});
    }

    std::map<std::vector<long>, BallElement> seen;
    std::vector<BallElement> frontier{{SymplecticMatrix::identity(2), ""}};
    std::map<std::vector<long>, bool> visited;
    auto key = [](const SymplecticMatrix& M) {
      std::vector<long> k;
      for (double x : M.full().data()) k.push_back(std::lround(x));
      return k;
    };
    visited[key(frontier[0].M)] = true;
    for (int len = 1; len <= 4; ++len) {
      std::vector<BallElement> next;
      for (const auto& w : frontier) {
        for (const auto& g : gens) {
          // Word applied left to right: first w, then g.
          BallElement e{g.M * w.M, w.word.empty() ? g.word : w.word + " " + g.word};
          auto k = key(e.M);
          if (visited.count(k)) continue;
          visited[k] = true;
          next.push_back(e);
          bool has_c = false;
          for (double x : e.M.C().data()) has_c = has_c || x != 0.0;
          if (!has_c) continue;
          // |det(CΩ+D)| depends on (C, D) up to a common sign only.
          std::vector<long> cd;
          for (double x : e.M.C().data()) cd.push_back(std::lround(x));
          for (double x : e.M.D().data()) cd.push_back(std::lround(x));
          auto first = std::find_if(cd.begin(), cd.end(), [](long x) { return x != 0; });
          if (*first < 0) {
            for (auto& x : cd) x = -x;
          }
          seen.emplace(std::move(cd), e);
        }
      }
      frontier = std::move(next);
    }
    std::vector<BallElement> out;
    out.reserve(seen.size());
    for (auto& [k, e] : seen) out.push_back(e);
    return out;
  }();
  return ball;
}

namespace {

// min |cτ + d| over coprime (c, d) with c >= 1, found exactly by bounding c <= 1/y.
double s1_margin_n1(const CMat& omega) {
  const cplx tau = omega(0, 0);
  const double y = tau.imag(), x = tau.real();
  double best = std::numeric_limits<double>::infinity();
  const long cmax = static_cast<long>(std::floor(1.0 / y)) + 1;
  for (long c = 1; c <= cmax; ++c) {
    const long d0 = static_cast<long>(std::floor(-c * x));
    for (long d = d0 - 1; d <= d0 + 2; ++d) {
      if (std::gcd(c, d) != 1) continue;
      best = std::min(best, std::abs(static_cast<double>(c) * tau + static_cast<double>(d)));
    }
  }
  return best - 1.0;
}

double s1_margin_ball(const CMat& omega, const BallElement** arg) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& e : generator_ball_2()) {
    const double v = std::abs(determinant(CMat(e.M.C() * omega + e.M.D())));
    if (v < best) {
      best = v;
      if (arg) *arg = &e;
    }
  }
  return best - 1.0;
}

void require_siegel_degree(std::size_t n) {
  if (n < 1 || n > 2) fail(ErrorCode::UnsupportedDimension, "Siegel reduction is implemented for n = 1, 2");
}

}  // namespace

DomainMembership siegel_membership(const SiegelPoint& p, const Tolerances& tol) {
  const std::size_t n = p.n();
  require_siegel_degree(n);
  DomainMembership out = is_minkowski_reduced(p.Y(), tol);
  set_condition(out.S2, std::min(out.M1.margin, out.M2.margin), tol.memb_tol);
  double xmax = 0.0;
  for (double x : p.X().data()) xmax = std::max(xmax, std::abs(x));
  set_condition(out.S3, 0.5 - xmax, tol.memb_tol);
  const CMat omega = p.omega();
  set_condition(out.S1, n == 1 ? s1_margin_n1(omega) : s1_margin_ball(omega, nullptr), tol.memb_tol);
  return out;
}

SiegelReduction siegel_reduce(const SiegelPoint& p0, const Tolerances& tol) {
  const std::size_t n = p0.n();
  require_siegel_degree(n);
  SymplecticMatrix g = SymplecticMatrix::identity(n);
  std::vector<std::string> word;
  CMat omega = p0.omega();
  auto apply = [&](const SymplecticMatrix& M, std::string token) {
    g = M * g;
    omega = siegel_action_t(M, omega);
    word.push_back(std::move(token));
  };
  constexpr int kReduceIters = 200;
  int it = 0;
  for (;; ++it) {
    if (it >= kReduceIters) fail(ErrorCode::IterationLimit, "Siegel reduction did not settle within 200 rounds");
    if (n == 1) {
      const double k = floor_half_open(omega(0, 0).real());
      if (k != 0.0) {
        RMat S(1, 1);
        S(0, 0) = -k;
        apply(SymplecticMatrix::translation(S), "T^" + std::to_string(static_cast<long>(-k)));
      }
      if (std::norm(omega(0, 0)) < 1.0 - 1e-15) {
        apply(SymplecticMatrix::inversion(1), "S");
        continue;
      }
      break;
    }
    const auto mr = minkowski_reduce(imag(omega), tol);
    if (max_abs_diff(mr.U, RMat::identity(n)) > 0.0) apply(unimodular_embedding(mr.U), int_matrix_token("U", mr.U));
    const RMat S = real(omega).map([](double x) { return -floor_half_open(x); });
    if (max_abs(S) > 0.0) apply(SymplecticMatrix::translation(S), int_matrix_token("T", S));
    const BallElement* e = nullptr;
    const double margin = s1_margin_ball(omega, &e);
    if (margin < -1e-12) {
      apply(e->M, "(" + e->word + ")");
      continue;
    }
    break;
  }
  const SiegelPoint out = siegel_action(g, p0).image;
  return SiegelReduction{out, g, std::move(word), it, siegel_membership(out, tol)};
}

// ---------------------------------------------------------------------------
// Jacobi domain

std::pair<RMat, RMat> parallelotope_coordinates(const JacobiPoint& p) {
  const RMat Yi = inverse(p.base().Y());
  const RMat mu = p.V() * Yi;
  const RMat lambda = p.U() - mu * p.base().X();
  return {lambda, mu};
}

DomainMembership jacobi_domain_membership(const JacobiPoint& p, const Tolerances& tol) {
  DomainMembership out = siegel_membership(p.base(), tol);
  const auto [lambda, mu] = parallelotope_coordinates(p);
  double margin = std::numeric_limits<double>::infinity();
  for (const RMat* M : {&lambda, &mu}) {
    for (double x : M->data()) margin = std::min({margin, x, 1.0 - x});
  }
  set_condition(out.PZ, p.m() == 0 ? 0.0 : margin, tol.memb_tol);
  return out;
}

JacobiReduction jacobi_reduce(const JacobiPoint& p, const Tolerances& tol) {
  const std::size_t n = p.n(), m = p.m();
  const SiegelReduction sr = siegel_reduce(p.base(), tol);
  const JacobiGroupElement g1 = JacobiGroupElement::make(sr.transform, HeisenbergElement::zero(n, m));
  const JacobiPoint q = jacobi_action(g1, p).image;
  const auto [lambda, mu] = parallelotope_coordinates(q);
  // Z + aΩ + b shifts (λ, μ) by (b, a).
  const RMat a = mu.map([](double x) { return -std::floor(x); });
  const RMat b = lambda.map([](double x) { return -std::floor(x); });
  const JacobiGroupElement g2 = JacobiGroupElement::make(SymplecticMatrix::identity(n), HeisenbergElement::make(a, b, RMat(m, m)));
  const JacobiGroupElement g = jacobi_multiply(g2, g1);
  std::vector<std::string> word = sr.word;
  if (max_abs(a) > 0.0 || max_abs(b) > 0.0) word.push_back(int_matrix_token("H", a) + int_matrix_token("", b));
  const JacobiPoint out = jacobi_action(g, p).image;
  return JacobiReduction{out, g, std::move(word), jacobi_domain_membership(out, tol)};
}

}  // namespace sj
