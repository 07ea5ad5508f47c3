#include "sj/jet.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace sj {

namespace {

void enumerate_degree(int dim, int remaining, int var, std::vector<std::uint8_t>& cur,
                      std::vector<std::vector<std::uint8_t>>& out) {
  if (var == dim - 1) {
    cur[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(remaining);
    out.push_back(cur);
    cur[static_cast<std::size_t>(var)] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(e);
    enumerate_degree(dim, remaining - e, var + 1, cur, out);
  }
  cur[static_cast<std::size_t>(var)] = 0;
}

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

JetLayout::JetLayout(int dim, int order) : dim_(dim), order_(order) {
  if (dim < 1) fail(ErrorCode::InvalidArgument, "jet dimension must be positive");
  if (order < 0 || order > kMaxJetOrder) {
    fail(ErrorCode::UnsupportedOrder, "jet order must lie in [0, " + std::to_string(kMaxJetOrder) + "]");
  }
  std::vector<std::uint8_t> cur(static_cast<std::size_t>(dim), 0);
  for (int deg = 0; deg <= order; ++deg) {
    enumerate_degree(dim, deg, 0, cur, monomials_);
    prefix_.push_back(monomials_.size());
  }
  std::map<std::vector<std::uint8_t>, int> index;
  for (std::size_t k = 0; k < monomials_.size(); ++k) {
    index.emplace(monomials_[k], static_cast<int>(k));
    int deg = 0;
    for (auto e : monomials_[k]) deg += e;
    degree_.push_back(deg);
  }
  raise_.assign(monomials_.size() * static_cast<std::size_t>(dim), -1);
  for (std::size_t k = 0; k < monomials_.size(); ++k) {
    if (degree_[k] == order) continue;
    for (int v = 0; v < dim; ++v) {
      auto up = monomials_[k];
      ++up[static_cast<std::size_t>(v)];
      raise_[k * static_cast<std::size_t>(dim) + v] = index.at(up);
    }
  }
  std::vector<std::uint8_t> sum(static_cast<std::size_t>(dim));
  for (std::size_t a = 0; a < monomials_.size(); ++a) {
    for (std::size_t b = 0; b < prefix(order - degree_[a]); ++b) {
      for (std::size_t v = 0; v < sum.size(); ++v) sum[v] = monomials_[a][v] + monomials_[b][v];
      triples_.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                          static_cast<std::uint32_t>(index.at(sum))});
    }
  }
}

long JetLayout::index_of(std::span<const int> alpha) const {
  if (static_cast<int>(alpha.size()) != dim_) return -1;
  int deg = 0;
  for (int e : alpha) {
    if (e < 0) return -1;
    deg += e;
  }
  if (deg > order_) return -1;
  const std::size_t lo = deg == 0 ? 0 : prefix(deg - 1);
  for (std::size_t k = lo; k < prefix(deg); ++k) {
    bool same = true;
    for (int v = 0; v < dim_ && same; ++v) same = monomials_[k][static_cast<std::size_t>(v)] == alpha[static_cast<std::size_t>(v)];
    if (same) return static_cast<long>(k);
  }
  return -1;
}

std::shared_ptr<const JetLayout> JetLayout::get(int dim, int order) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const JetLayout>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{dim, order}];
  if (!slot) slot = std::make_shared<const JetLayout>(dim, order);
  return slot;
}

Jet Jet::constant(std::shared_ptr<const JetLayout> layout, cplx value) {
  std::vector<cplx> c(layout->size(), cplx(0.0));
  c[0] = value;
  return Jet(std::move(layout), std::move(c));
}

Jet Jet::variable(std::shared_ptr<const JetLayout> layout, int var, double value) {
  if (var < 0 || var >= layout->dim()) fail(ErrorCode::IndexOutOfRange, "jet variable index out of range");
  std::vector<cplx> c(layout->size(), cplx(0.0));
  c[0] = value;
  if (layout->order() >= 1) c[static_cast<std::size_t>(1 + var)] = 1.0;
  return Jet(std::move(layout), std::move(c));
}

Jet Jet::derivative(int var) const {
  if (!layout_) return Jet(0.0);
  if (var < 0 || var >= layout_->dim()) fail(ErrorCode::IndexOutOfRange, "derivative variable out of range");
  if (layout_->order() == 0) fail(ErrorCode::JetOrderTooLow, "cannot differentiate an order-0 jet");
  auto lower = JetLayout::get(layout_->dim(), layout_->order() - 1);
  std::vector<cplx> c(lower->size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    const int up = layout_->raise(k, var);
    c[k] = static_cast<double>(layout_->exponents(k)[static_cast<std::size_t>(var)] + 1) *
           coeffs_[static_cast<std::size_t>(up)];
  }
  return Jet(std::move(lower), std::move(c));
}

cplx Jet::partial(std::span<const int> vars) const {
  if (!layout_) return vars.empty() ? coeffs_[0] : cplx(0.0);
  if (static_cast<int>(vars.size()) > layout_->order()) {
    fail(ErrorCode::JetOrderTooLow, "partial of degree " + std::to_string(vars.size()) +
                                        " requested from an order-" + std::to_string(layout_->order()) +
                                        " jet");
  }
  std::vector<int> alpha(static_cast<std::size_t>(layout_->dim()), 0);
  for (int v : vars) {
    if (v < 0 || v >= layout_->dim()) fail(ErrorCode::IndexOutOfRange, "partial variable out of range");
    ++alpha[static_cast<std::size_t>(v)];
  }
  double weight = 1.0;
  for (int e : alpha) weight *= factorial(e);
  return weight * coeffs_[static_cast<std::size_t>(layout_->index_of(alpha))];
}

cplx Jet::partial(std::initializer_list<int> vars) const {
  return partial(std::span<const int>(vars.begin(), vars.size()));
}

Jet Jet::truncate(int order) const {
  if (!layout_ || order >= layout_->order()) return *this;
  if (order < 0) fail(ErrorCode::JetOrderTooLow, "negative truncation order");
  auto lower = JetLayout::get(layout_->dim(), order);
  return Jet(lower, std::vector<cplx>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lower->size())));
}

namespace {

// Brings two jets to a common layout (the lower order). Constants stay constants.
const std::shared_ptr<const JetLayout>* common_layout(const Jet& a, const Jet& b) {
  if (a.is_constant()) return b.is_constant() ? nullptr : &b.layout();
  if (b.is_constant()) return &a.layout();
  if (a.dim() != b.dim()) fail(ErrorCode::DimensionMismatch, "jets over different charts");
  return a.order() <= b.order() ? &a.layout() : &b.layout();
}

}  // namespace

Jet& Jet::operator+=(const Jet& o) {
  if (o.is_constant()) {
    coeffs_[0] += o.coeffs_[0];
    return *this;
  }
  if (is_constant()) {
    const cplx c = coeffs_[0];
    *this = o;
    coeffs_[0] += c;
    return *this;
  }
  const auto* lay = common_layout(*this, o);
  if (layout_ != *lay) *this = truncate((*lay)->order());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) { return *this += -o; }

Jet operator-(const Jet& a) {
  Jet out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Jet operator*(const Jet& a, const Jet& b) {
  if (a.is_constant() || b.is_constant()) {
    const Jet& s = a.is_constant() ? a : b;
    Jet out = a.is_constant() ? b : a;
    const cplx f = s.coeffs_[0];
    for (auto& c : out.coeffs_) c *= f;
    return out;
  }
  const auto& lay = *common_layout(a, b);
  std::vector<cplx> c(lay->size(), cplx(0.0));
  for (const auto& t : lay->triples()) c[t.out] += a.coeffs_[t.a] * b.coeffs_[t.b];
  return Jet(lay, std::move(c));
}

Jet& Jet::operator*=(const Jet& o) { return *this = *this * o; }

Jet Jet::compose(std::span<const cplx> derivs) const {
  const int r = order();
  if (static_cast<int>(derivs.size()) < (layout_ ? r + 1 : 1)) {
    fail(ErrorCode::JetOrderTooLow, "univariate composition needs derivatives up to the jet order");
  }
  if (!layout_) return Jet(derivs[0]);
  Jet delta = *this;
  delta.coeffs_[0] = 0.0;
  Jet acc = Jet::constant(layout_, derivs[static_cast<std::size_t>(r)] / factorial(r));
  for (int k = r - 1; k >= 0; --k) {
    acc = acc * delta;
    acc.coeffs_[0] += derivs[static_cast<std::size_t>(k)] / factorial(k);
  }
  return acc;
}

Jet operator/(const Jet& a, const Jet& b) {
  if (b.is_constant()) return a * Jet(1.0 / b.value());
  const cplx v = b.value();
  if (v == cplx(0.0)) fail(ErrorCode::SingularMatrix, "jet division by a value of zero");
  std::vector<cplx> d(static_cast<std::size_t>(b.order() + 1));
  cplx p = 1.0 / v;
  for (std::size_t k = 0; k < d.size(); ++k) {
    d[k] = p * (k % 2 == 0 ? 1.0 : -1.0) * factorial(static_cast<int>(k));
    p /= v;
  }
  return a * b.compose(d);
}

Jet& Jet::operator/=(const Jet& o) { return *this = *this / o; }

Jet Jet::map_coeffs(const std::function<cplx(cplx)>& f) const {
  Jet out = *this;
  for (auto& c : out.coeffs_) c = f(c);
  return out;
}

Jet conjugate(const Jet& x) { return x.map_coeffs([](cplx c) { return std::conj(c); }); }
Jet real_part(const Jet& x) { return x.map_coeffs([](cplx c) { return cplx(c.real()); }); }
Jet imag_part(const Jet& x) { return x.map_coeffs([](cplx c) { return cplx(c.imag()); }); }

bool finite_scalar(const Jet& x) {
  for (const auto& c : x.coeffs()) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  }
  return true;
}

namespace {
std::vector<cplx> repeat(cplx v, int n) { return std::vector<cplx>(static_cast<std::size_t>(n + 1), v); }
}  // namespace

Jet exp(const Jet& x) { return x.compose(repeat(std::exp(x.value()), x.order())); }

Jet log(const Jet& x) {
  const cplx v = x.value();
  std::vector<cplx> d{std::log(v)};
  cplx p = 1.0 / v;
  for (int k = 1; k <= x.order(); ++k) {
    d.push_back((k % 2 == 1 ? 1.0 : -1.0) * factorial(k - 1) * p);
    p /= v;
  }
  return x.compose(d);
}

Jet pow(const Jet& x, cplx e) {
  const cplx v = x.value();
  std::vector<cplx> d;
  cplx falling = 1.0;
  for (int k = 0; k <= x.order(); ++k) {
    d.push_back(falling * std::pow(v, e - static_cast<double>(k)));
    falling *= e - static_cast<double>(k);
  }
  return x.compose(d);
}

Jet sqrt(const Jet& x) { return pow(x, 0.5); }

Jet sin(const Jet& x) {
  const cplx s = std::sin(x.value()), c = std::cos(x.value());
  const cplx cyc[4] = {s, c, -s, -c};
  std::vector<cplx> d;
  for (int k = 0; k <= x.order(); ++k) d.push_back(cyc[k % 4]);
  return x.compose(d);
}

Jet cos(const Jet& x) {
  const cplx s = std::sin(x.value()), c = std::cos(x.value());
  const cplx cyc[4] = {c, -s, -c, s};
  std::vector<cplx> d;
  for (int k = 0; k <= x.order(); ++k) d.push_back(cyc[k % 4]);
  return x.compose(d);
}

Jet taylor_substitute(const Jet& f, std::span<const Jet> delta) {
  if (f.is_constant()) return f;
  const auto& lay = *f.layout();
  if (static_cast<int>(delta.size()) != lay.dim()) fail(ErrorCode::DimensionMismatch, "substitution arity differs");
  Jet out(0.0);
  for (std::size_t k = 0; k < lay.size(); ++k) {
    if (f.coeffs()[k] == cplx(0.0)) continue;
    Jet term(f.coeffs()[k]);
    const auto& e = lay.exponents(k);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int p = 0; p < e[i]; ++p) term *= delta[i];
    out += term;
  }
  return out;
}

std::vector<Jet> seed_variables(std::span<const double> point, int order) {
  auto layout = JetLayout::get(static_cast<int>(point.size()), order);
  std::vector<Jet> vars;
  vars.reserve(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) vars.push_back(Jet::variable(layout, static_cast<int>(i), point[i]));
  return vars;
}

RMat jacobian(const ChartMap& map, std::span<const double> point) {
  const auto vars = seed_variables(point, 1);
  const auto out = map(vars);
  RMat J(out.size(), point.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < point.size(); ++j) J(i, j) = out[i].partial({static_cast<int>(j)}).real();
  }
  return J;
}

}  // namespace sj
