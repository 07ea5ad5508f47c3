#include "sj/operators.hpp"

#include <algorithm>
#include <numeric>

namespace sj {

void LinOp::add(int i, const Jet& c) {
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] == i) {
      coef[k] += c;
      return;
    }
  }
  idx.push_back(i);
  coef.push_back(c);
}

LinOp& LinOp::operator+=(const LinOp& o) {
  for (std::size_t k = 0; k < o.idx.size(); ++k) add(o.idx[k], o.coef[k]);
  return *this;
}

LinOp operator*(const Jet& c, const LinOp& op) {
  LinOp out = op;
  for (auto& x : out.coef) x = c * x;
  return out;
}

OpMat transpose(const OpMat& o) {
  OpMat t(o.cols, o.rows);
  for (std::size_t i = 0; i < o.rows; ++i)
    for (std::size_t j = 0; j < o.cols; ++j) t(j, i) = o(i, j);
  return t;
}

OpMat mul(const JMat& C, const OpMat& O) {
  if (C.cols() != O.rows) fail(ErrorCode::DimensionMismatch, "coefficient/operator shapes differ");
  OpMat out(C.rows(), O.cols);
  for (std::size_t i = 0; i < C.rows(); ++i)
    for (std::size_t j = 0; j < O.cols; ++j)
      for (std::size_t t = 0; t < C.cols(); ++t) out(i, j) += C(i, t) * O(t, j);
  return out;
}

OpMat mul(const OpMat& O, const JMat& C) {
  if (O.cols != C.rows()) fail(ErrorCode::DimensionMismatch, "operator/coefficient shapes differ");
  OpMat out(O.rows, C.cols());
  for (std::size_t i = 0; i < O.rows; ++i)
    for (std::size_t j = 0; j < C.cols(); ++j)
      for (std::size_t t = 0; t < O.cols; ++t) out(i, j) += C(t, j) * O(i, t);
  return out;
}

OpMat operator+(const OpMat& a, const OpMat& b) {
  if (a.rows != b.rows || a.cols != b.cols) fail(ErrorCode::DimensionMismatch, "operator shapes differ");
  OpMat out = a;
  for (std::size_t k = 0; k < out.e.size(); ++k) out.e[k] += b.e[k];
  return out;
}

OpMat sym(const OpMat& o) {
  OpMat out = o + transpose(o);
  for (auto& e : out.e)
    for (auto& c : e.coef) c = 0.5 * c;
  return out;
}

OpMat wirtinger_first(const Chart& chart, bool bar) {
  const cplx s = bar ? kI : -kI;
  OpMat o(chart.n, chart.n);
  for (std::size_t a = 0; a < chart.n; ++a)
    for (std::size_t b = 0; b < chart.n; ++b) {
      const double w = a == b ? 0.5 : 0.25;
      o(a, b).add(chart.ix(a, b), Jet(w));
      o(a, b).add(chart.iy(a, b), Jet(w * s));
    }
  return o;
}

OpMat wirtinger_second(const Chart& chart, bool bar) {
  const cplx s = bar ? kI : -kI;
  OpMat o(chart.n, chart.m);
  for (std::size_t i = 0; i < chart.n; ++i)
    for (std::size_t k = 0; k < chart.m; ++k) {
      o(i, k).add(chart.iu(k, i), Jet(0.5));
      o(i, k).add(chart.iv(k, i), Jet(0.5 * s));
    }
  return o;
}

Partials::Partials(Jet f) : f_(std::move(f)), dim_(0) {}

const Jet& Partials::d(int i) {
  static const Jet zero(0.0);
  if (f_.is_constant()) return zero;
  if (d1_.empty()) {
    dim_ = std::max(f_.dim(), i + 1);
    d1_.resize(static_cast<std::size_t>(dim_));
  }
  if (i >= dim_) fail(ErrorCode::IndexOutOfRange, "partial index out of range");
  auto& slot = d1_[static_cast<std::size_t>(i)];
  if (!slot) slot = f_.derivative(i);
  return *slot;
}

const Jet& Partials::dd(int i, int j) {
  if (i > j) std::swap(i, j);
  if (f_.is_constant()) return d(i);
  d(j);
  if (d2_.empty()) d2_.resize(static_cast<std::size_t>(dim_ * dim_));
  auto& slot = d2_[static_cast<std::size_t>(i * dim_ + j)];
  if (!slot) slot = d(i).derivative(j);
  return *slot;
}

Jet apply(const Jet& h, const LinOp& L) {
  Jet out(0.0);
  for (std::size_t k = 0; k < L.idx.size(); ++k) out += L.coef[k] * h.derivative(L.idx[k]);
  return out;
}

Jet second(Partials& p, const LinOp& L, const LinOp& R) {
  Jet out(0.0);
  for (std::size_t a = 0; a < L.idx.size(); ++a)
    for (std::size_t b = 0; b < R.idx.size(); ++b) out += (L.coef[a] * R.coef[b]) * p.dd(L.idx[a], R.idx[b]);
  return out;
}

Jet trace2(Partials& p, const JMat& C, const OpMat& L, const OpMat& R) {
  if (C.cols() != L.rows || L.cols != R.rows || R.cols != C.rows()) {
    fail(ErrorCode::DimensionMismatch, "trace2 shapes differ");
  }
  Jet out(0.0);
  for (std::size_t a = 0; a < C.rows(); ++a)
    for (std::size_t b = 0; b < C.cols(); ++b)
      for (std::size_t c = 0; c < L.cols; ++c) out += C(a, b) * second(p, L(b, c), R(c, a));
  return out;
}

void require_order(const Jet& f, int needed, const char* what) {
  if (f.order() < needed) {
    fail(ErrorCode::JetOrderTooLow, std::string(what) + " needs jets of order " + std::to_string(needed));
  }
}

CMat InvariantOperator::evaluate(const ScalarField& f, std::span<const double> point) const {
  if (f.chart.dim() != chart.dim() || f.chart.space != chart.space) {
    fail(ErrorCode::DimensionMismatch, "field and operator live on different charts");
  }
  const auto vars = seed_variables(point, order);
  const JMat out = apply(f.eval(vars), vars);
  return out.map([](const Jet& j) { return j.value(); });
}

double invariance_residual(const InvariantOperator& L, const ChartMap& map, const ScalarField& f,
                           std::span<const double> point) {
  const CMat lhs = L.evaluate(compose(f, map, L.chart), point);
  const CMat rhs = L.evaluate(f, map_point(map, point));
  return max_abs_diff(lhs, rhs);
}

namespace {

JMat truncated(const JMat& M, int order) {
  return M.map([order](const Jet& j) { return j.truncate(order); });
}

JMat scalar_matrix(const Jet& x) {
  JMat out(1, 1);
  out(0, 0) = x;
  return out;
}

struct Coeffs {
  JMat first;   // Ω or W
  JMat second;  // Z or η
};

Coeffs coefficient_mats(const Chart& chart, std::span<const Jet> vars, int order) {
  auto mats = unpack_jets(chart, vars);
  return {truncated(mats.first, order), truncated(mats.second, order)};
}

int out_order(const Jet& f, int k) { return std::max(0, f.order() - k); }

}  // namespace

Jet laplacian_siegel_jet(const Jet& f, const Chart& chart, std::span<const Jet> vars, double a_scale) {
  require_order(f, 2, "laplacian");
  const auto c = coefficient_mats(chart, vars, out_order(f, 2));
  const JMat Y = imag(c.first);
  Partials p(f);
  return (4.0 / a_scale) * trace2(p, Y, transpose(mul(Y, wirtinger_first(chart, true))), wirtinger_first(chart, false));
}

Jet laplacian_jacobi_jet(const Jet& f, const Chart& chart, std::span<const Jet> vars, const MetricScales& s) {
  require_order(f, 2, "laplacian");
  const auto c = coefficient_mats(chart, vars, out_order(f, 2));
  const JMat Y = imag(c.first);
  const JMat V = imag(c.second);
  const JMat xi = V * inverse(Y);
  const OpMat dZ = wirtinger_second(chart, false), dZb = wirtinger_second(chart, true);
  const OpMat D = wirtinger_first(chart, false) + sym(mul(dZ, xi));
  const OpMat Db = wirtinger_first(chart, true) + sym(mul(dZb, xi));
  Partials p(f);
  return (4.0 / s.a) * trace2(p, Y, transpose(mul(Y, Db)), D) + (4.0 / s.b) * trace2(p, Y, dZ, transpose(dZb));
}

Jet laplacian_jacobi_displayed_jet(const Jet& f, const Chart& chart, std::span<const Jet> vars, const MetricScales& s) {
  require_order(f, 2, "laplacian");
  const auto c = coefficient_mats(chart, vars, out_order(f, 2));
  const JMat Y = imag(c.first);
  const JMat V = imag(c.second);
  const OpMat dO = wirtinger_first(chart, false), dOb = wirtinger_first(chart, true);
  const OpMat dZ = wirtinger_second(chart, false), dZb = wirtinger_second(chart, true);
  const OpMat tYdOb = transpose(mul(Y, dOb));
  const OpMat tYdZb = transpose(mul(Y, dZb));
  Partials p(f);
  Jet a = trace2(p, Y, tYdOb, dO);
  a += trace2(p, V * inverse(Y) * transpose(V), tYdZb, dZ);
  a += trace2(p, V, tYdOb, dZ);
  a += trace2(p, transpose(V), tYdZb, dO);
  return (4.0 / s.a) * a + (4.0 / s.b) * trace2(p, Y, dZ, transpose(dZb));
}

Jet laplacian_disk_jet(const Jet& f, const Chart& chart, std::span<const Jet> vars, const MetricScales& s) {
  require_order(f, 2, "laplacian");
  const auto c = coefficient_mats(chart, vars, out_order(f, 2));
  const JMat& W = c.first;
  const JMat& eta = c.second;
  const JMat Wb = conj(W), etab = conj(eta);
  const RMat I = RMat::identity(chart.n);
  const JMat P = I - W * Wb;
  const JMat Q = I - Wb * W;
  const JMat xi = (etab - eta * Wb) * inverse(P);
  const OpMat de = wirtinger_second(chart, false), deb = wirtinger_second(chart, true);
  const OpMat D = wirtinger_first(chart, false) + sym(mul(de, xi));
  const OpMat Db = wirtinger_first(chart, true) + sym(mul(deb, conj(xi)));
  Partials p(f);
  return (1.0 / s.a) * trace2(p, P, transpose(mul(P, Db)), D) + (1.0 / s.b) * trace2(p, Q, de, transpose(deb));
}

Jet laplacian_disk_displayed_jet(const Jet& f, const Chart& chart, std::span<const Jet> vars, const MetricScales& s) {
  require_order(f, 2, "laplacian");
  const auto c = coefficient_mats(chart, vars, out_order(f, 2));
  const JMat& W = c.first;
  const JMat& eta = c.second;
  const JMat Wb = conj(W), etab = conj(eta);
  const RMat I = RMat::identity(chart.n);
  const JMat P = I - W * Wb;
  const JMat Q = I - Wb * W;
  const JMat Pi = inverse(P), Qi = inverse(Q);
  const OpMat dW = wirtinger_first(chart, false), dWb = wirtinger_first(chart, true);
  const OpMat de = wirtinger_second(chart, false), deb = wirtinger_second(chart, true);
  const OpMat tdeb = transpose(deb);
  const OpMat Qde = mul(Q, de);
  const OpMat tPdWb = transpose(mul(P, dWb));
  Partials p(f);
  Jet a = trace2(p, P, tPdWb, dW);
  a += trace2(p, transpose(eta - etab * W), tdeb, mul(Q, dW));
  a += trace2(p, etab - eta * Wb, tPdWb, de);
  a -= trace2(p, eta * Wb * Pi * transpose(eta), tdeb, Qde);
  a -= trace2(p, etab * W * Qi * transpose(etab), tdeb, Qde);
  a += trace2(p, etab * Pi * transpose(eta), tdeb, Qde);
  a += trace2(p, eta * Wb * W * Qi * transpose(etab), tdeb, Qde);
  return (1.0 / s.a) * a + (1.0 / s.b) * trace2(p, Q, de, tdeb);
}

namespace {

using JetOp = Jet (*)(const Jet&, const Chart&, std::span<const Jet>, const MetricScales&);

InvariantOperator scaled_laplacian(const char* name, Chart chart, const MetricScales& s, JetOp op) {
  MetricScales::make(s.a, s.b);
  return InvariantOperator{name, chart, 2, [chart, s, op](const Jet& f, std::span<const Jet> vars) {
                             return scalar_matrix(op(f, chart, vars, s));
                           }};
}

}  // namespace

InvariantOperator laplacian_siegel_op(std::size_t n, double a_scale) {
  MetricScales::make(a_scale, 1.0);
  const Chart chart = Chart::siegel(n);
  return InvariantOperator{"laplacian", chart, 2, [chart, a_scale](const Jet& f, std::span<const Jet> vars) {
                             return scalar_matrix(laplacian_siegel_jet(f, chart, vars, a_scale));
                           }};
}

InvariantOperator laplacian_jacobi_op(std::size_t n, std::size_t m, const MetricScales& s) {
  return scaled_laplacian("laplacian", Chart::jacobi(n, m), s, laplacian_jacobi_jet);
}

InvariantOperator laplacian_jacobi_displayed_op(std::size_t n, std::size_t m, const MetricScales& s) {
  return scaled_laplacian("laplacian-displayed", Chart::jacobi(n, m), s, laplacian_jacobi_displayed_jet);
}

InvariantOperator laplacian_disk_op(std::size_t n, std::size_t m, const MetricScales& s) {
  return scaled_laplacian("laplacian", Chart::disk(n, m), s, laplacian_disk_jet);
}

InvariantOperator laplacian_disk_displayed_op(std::size_t n, std::size_t m, const MetricScales& s) {
  return scaled_laplacian("laplacian-displayed", Chart::disk(n, m), s, laplacian_disk_displayed_jet);
}

cplx laplacian_siegel(const ScalarField& f, const SiegelPoint& p, double a_scale) {
  return laplacian_siegel_op(p.n(), a_scale).evaluate(f, coords(p))(0, 0);
}

cplx laplacian_jacobi(const ScalarField& f, const JacobiPoint& p, const MetricScales& s) {
  return laplacian_jacobi_op(p.n(), p.m(), s).evaluate(f, coords(p))(0, 0);
}

cplx laplacian_disk(const ScalarField& f, const DiskPoint& p, const MetricScales& s) {
  return laplacian_disk_op(p.n(), p.m(), s).evaluate(f, coords(p))(0, 0);
}

// ---- H_1 × C generators; coordinates (x, y, u, v) = (0, 1, 2, 3).

namespace {

constexpr int kx = 0, ky = 1, ku = 2, kv = 3;

Jet dv(const Jet& f, std::initializer_list<int> vars) {
  Jet out = f;
  for (int v : vars) out = out.derivative(v);
  return out;
}

void require_h1c(std::span<const Jet> vars) {
  if (vars.size() != 4) fail(ErrorCode::UnsupportedDimension, "operator defined for n = m = 1 only");
}

}  // namespace

Jet op_D_jet(const Jet& f, std::span<const Jet> vars) {
  require_h1c(vars);
  require_order(f, 2, "D");
  const Jet& y = vars[ky];
  const Jet& v = vars[kv];
  return y * y * (dv(f, {kx, kx}) + dv(f, {ky, ky})) + v * v * (dv(f, {ku, ku}) + dv(f, {kv, kv})) +
         2.0 * y * v * (dv(f, {kx, ku}) + dv(f, {ky, kv}));
}

Jet op_Psi_jet(const Jet& f, std::span<const Jet> vars) {
  require_h1c(vars);
  require_order(f, 2, "Psi");
  return vars[ky] * (dv(f, {ku, ku}) + dv(f, {kv, kv}));
}

Jet op_D1_jet(const Jet& f, std::span<const Jet> vars) {
  require_order(f, 3, "D1");
  const Jet& y = vars[ky];
  const Jet psi = op_Psi_jet(f, vars);
  return 2.0 * y * y * dv(f, {kx, ku, kv}) - y * y * (dv(f, {ky, ku, ku}) - dv(f, {ky, kv, kv})) +
         vars[kv] * psi.derivative(kv) + psi;
}

Jet op_D2_jet(const Jet& f, std::span<const Jet> vars) {
  require_order(f, 3, "D2");
  const Jet& y = vars[ky];
  const Jet psi = op_Psi_jet(f, vars);
  return y * y * (dv(f, {kx, kv, kv}) - dv(f, {kx, ku, ku})) - 2.0 * y * y * dv(f, {ky, ku, kv}) -
         vars[kv] * psi.derivative(ku);
}

Jet commutator_rhs_jet(const Jet& f, std::span<const Jet> vars) {
  require_order(f, 3, "commutator");
  const Jet& y = vars[ky];
  const Jet psi = op_Psi_jet(f, vars);
  return 2.0 * y * y * (dv(f, {ky, ku, ku}) - dv(f, {ky, kv, kv})) - 4.0 * y * y * dv(f, {kx, ku, kv}) -
         2.0 * (vars[kv] * psi.derivative(kv) + psi);
}

InvariantOperator generator_op(const std::string& name) {
  using Fn = Jet (*)(const Jet&, std::span<const Jet>);
  Fn fn = nullptr;
  int order = 2;
  if (name == "D") {
    fn = op_D_jet;
  } else if (name == "Psi") {
    fn = op_Psi_jet;
  } else if (name == "D1") {
    fn = op_D1_jet;
    order = 3;
  } else if (name == "D2") {
    fn = op_D2_jet;
    order = 3;
  } else {
    fail(ErrorCode::InvalidArgument, "unknown operator " + name);
  }
  return InvariantOperator{name, Chart::jacobi(1, 1), order,
                           [fn](const Jet& f, std::span<const Jet> vars) { return scalar_matrix(fn(f, vars)); }};
}

double commutator_residual(const ScalarField& f, const JacobiPoint& p) {
  if (p.n() != 1 || p.m() != 1) fail(ErrorCode::UnsupportedDimension, "commutator identity is stated for n = m = 1");
  const auto point = coords(p);
  const auto vars = seed_variables(point, 4);
  const Jet fj = f.eval(vars);
  const Jet lhs = op_D_jet(op_Psi_jet(fj, vars), vars) - op_Psi_jet(op_D_jet(fj, vars), vars);
  return std::abs(lhs.value() - commutator_rhs_jet(fj, vars).value());
}

InvariantOperator op_K_det(std::size_t n, std::size_t m) {
  if (2 * n > static_cast<std::size_t>(kMaxJetOrder)) {
    fail(ErrorCode::UnsupportedDimension, "det operator needs jets of order 2n <= 4");
  }
  const Chart chart = Chart::jacobi(n, m);
  return InvariantOperator{"K", chart, static_cast<int>(2 * n), [chart](const Jet& f, std::span<const Jet> vars) {
                             require_order(f, static_cast<int>(2 * chart.n), "K");
                             const OpMat dZ = wirtinger_second(chart, false), dZb = wirtinger_second(chart, true);
                             // E_ab = Σ_k ∂Z_ak ∂Z̄_bk; constant coefficients, so the entries commute.
                             auto apply_E = [&](const Jet& h, std::size_t a, std::size_t b) {
                               Jet out(0.0);
                               for (std::size_t k = 0; k < chart.m; ++k) out += apply(apply(h, dZb(b, k)), dZ(a, k));
                               return out;
                             };
                             std::vector<std::size_t> perm(chart.n);
                             std::iota(perm.begin(), perm.end(), 0);
                             Jet total(0.0);
                             do {
                               int inversions = 0;
                               for (std::size_t i = 0; i < perm.size(); ++i)
                                 for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
                               Jet h = f;
                               for (std::size_t a = 0; a < chart.n; ++a) h = apply_E(h, a, perm[a]);
                               total += (inversions % 2 ? -1.0 : 1.0) * h;
                             } while (std::next_permutation(perm.begin(), perm.end()));
                             const JMat Y = imag(unpack_jets(chart, vars).first);
                             return scalar_matrix(determinant(Y) * total);
                           }};
}

InvariantOperator op_T_matrix(std::size_t n, std::size_t m) {
  const Chart chart = Chart::jacobi(n, m);
  return InvariantOperator{"T", chart, 2, [chart](const Jet& f, std::span<const Jet> vars) {
                             require_order(f, 2, "T");
                             const JMat Y = truncated(imag(unpack_jets(chart, vars).first), out_order(f, 2));
                             const OpMat dZ = wirtinger_second(chart, false), dZb = wirtinger_second(chart, true);
                             Partials p(f);
                             JMat out(chart.m, chart.m);
                             for (std::size_t k = 0; k < chart.m; ++k)
                               for (std::size_t l = 0; l < chart.m; ++l) {
                                 Jet acc(0.0);
                                 for (std::size_t i = 0; i < chart.n; ++i)
                                   for (std::size_t j = 0; j < chart.n; ++j) acc += Y(i, j) * second(p, dZb(i, k), dZ(j, l));
                                 out(k, l) = acc;
                               }
                             return out;
                           }};
}

}  // namespace sj
