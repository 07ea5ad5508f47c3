#include "sj/invariant_polys.hpp"

#include "sj/chart.hpp"
#include "sj/jet.hpp"
#include "sj/linalg.hpp"
#include "sj/random.hpp"

#include <array>
#include <cmath>

namespace sj {

namespace {

struct FamilyInfo {
  InvariantFamily family;
  const char* name;
  std::size_t arity;
  bool uses_S;
};

constexpr std::array<FamilyInfo, 14> kFamilies{{
    {InvariantFamily::p, "p", 1, false},
    {InvariantFamily::psi1, "psi1", 1, false},
    {InvariantFamily::psi2, "psi2", 2, false},
    {InvariantFamily::psi3, "psi3", 2, false},
    {InvariantFamily::f1, "f1", 2, false},
    {InvariantFamily::f2, "f2", 2, false},
    {InvariantFamily::m1, "m1", 1, true},
    {InvariantFamily::m2, "m2", 1, true},
    {InvariantFamily::q1, "q1", 1, true},
    {InvariantFamily::q2, "q2", 1, true},
    {InvariantFamily::theta1, "theta1", 3, true},
    {InvariantFamily::theta2, "theta2", 3, true},
    {InvariantFamily::r1, "r1", 2, false},
    {InvariantFamily::r2, "r2", 2, false},
}};

const FamilyInfo& info(InvariantFamily f) {
  for (const auto& i : kFamilies) {
    if (i.family == f) return i;
  }
  fail(ErrorCode::InvalidArgument, "unknown invariant family");
}

template <class T>
Mat<T> mat_pow(const Mat<T>& a, int k) {
  Mat<T> out = Mat<T>::identity(a.rows());
  for (int i = 0; i < k; ++i) out = out * a;
  return out;
}

bool in(int v, int lo, int hi) { return v >= lo && v <= hi; }

}  // namespace

TangentPair TangentPair::make(const CMat& omega, const CMat& z, const Tolerances& tol) {
  if (!omega.square()) fail(ErrorCode::DimensionMismatch, "omega must be square");
  if (z.cols() != omega.rows()) fail(ErrorCode::DimensionMismatch, "z must be m×n");
  if (!all_finite(omega) || !all_finite(z)) fail(ErrorCode::NonFinite, "tangent pair has non-finite entries");
  return TangentPair{symmetrize_checked(omega, "omega", tol), z};
}

InvariantFamily family_from_name(const std::string& name) {
  for (const auto& i : kFamilies) {
    if (name == i.name) return i.family;
  }
  fail(ErrorCode::InvalidArgument, "unknown invariant family " + name);
}

std::string family_name(InvariantFamily f) { return info(f).name; }
bool family_uses_S(InvariantFamily f) { return info(f).uses_S; }
std::size_t family_arity(InvariantFamily f) { return info(f).arity; }

TangentPair k_action(const CMat& h, const TangentPair& t, const Tolerances& tol) {
  const std::size_t n = t.n();
  if (h.rows() != n || h.cols() != n) fail(ErrorCode::DimensionMismatch, "h must be n×n");
  const double defect = max_abs_diff(h * adjoint(h), CMat::identity(n));
  if (defect > tol.unitary_tol * std::max(1.0, max_abs(h))) fail(ErrorCode::NotUnitary, "h is not unitary", defect);
  const CMat w = h * t.omega * transpose(h);
  return TangentPair{symmetric_part(w), t.z * transpose(h)};
}

void validate_invariant_id(const InvariantFamilyId& id, std::size_t n, std::size_t m) {
  const auto& fi = info(id.family);
  if (id.idx.size() != fi.arity) {
    fail(ErrorCode::IndexOutOfRange, std::string(fi.name) + " takes " + std::to_string(fi.arity) + " indices");
  }
  if (fi.uses_S) {
    if (!id.S) fail(ErrorCode::InvalidArgument, std::string(fi.name) + " needs an m×m matrix S");
    if (id.S->rows() != m || id.S->cols() != m) fail(ErrorCode::DimensionMismatch, "S must be m×m");
  }
  const int N = static_cast<int>(n), M = static_cast<int>(m);
  const auto& i = id.idx;
  bool ok = true;
  switch (id.family) {
    case InvariantFamily::p: ok = in(i[0], 1, N); break;
    case InvariantFamily::psi1: ok = in(i[0], 1, M); break;
    case InvariantFamily::psi2:
    case InvariantFamily::psi3: ok = in(i[0], 1, M) && in(i[1], i[0] + 1, M); break;
    case InvariantFamily::f1:
    case InvariantFamily::f2: ok = in(i[0], 1, M) && in(i[1], i[0], M); break;
    case InvariantFamily::m1:
    case InvariantFamily::m2: ok = in(i[0], 1, N); break;
    case InvariantFamily::q1:
    case InvariantFamily::q2: ok = in(i[0], 1, M); break;
    case InvariantFamily::theta1:
    case InvariantFamily::theta2: ok = in(i[0], 1, N) && in(i[1], 1, M) && in(i[2], 1, N); break;
    case InvariantFamily::r1:
    case InvariantFamily::r2: ok = in(i[0], 1, N) && in(i[1], 1, M); break;
  }
  if (!ok) fail(ErrorCode::IndexOutOfRange, std::string(fi.name) + ": index out of range for (n, m)");
}

double eval_invariant(const InvariantFamilyId& id, const TangentPair& t) {
  validate_invariant_id(id, t.n(), t.m());
  const auto& i = id.idx;
  const CMat& w = t.omega;
  const CMat& z = t.z;
  const CMat ww = w * conj(w);
  auto zSz = [&] { return transpose(z) * *id.S * conj(z); };
  auto k0 = [&](int k) { return static_cast<std::size_t>(k - 1); };

  switch (id.family) {
    case InvariantFamily::p: return trace(mat_pow(ww, i[0])).real();
    case InvariantFamily::psi1: return (z * adjoint(z))(k0(i[0]), k0(i[0])).real();
    case InvariantFamily::psi2: return (z * adjoint(z))(k0(i[0]), k0(i[1])).real();
    case InvariantFamily::psi3: return (z * adjoint(z))(k0(i[0]), k0(i[1])).imag();
    case InvariantFamily::f1: return (z * conj(w) * transpose(z))(k0(i[0]), k0(i[1])).real();
    case InvariantFamily::f2: return (z * conj(w) * transpose(z))(k0(i[0]), k0(i[1])).imag();
    case InvariantFamily::m1:
    case InvariantFamily::m2: {
      const cplx v = trace(mat_pow(CMat(ww + zSz()), i[0]));
      return id.family == InvariantFamily::m1 ? v.real() : v.imag();
    }
    case InvariantFamily::q1:
    case InvariantFamily::q2: {
      const cplx v = trace(mat_pow(zSz(), i[0]));
      return id.family == InvariantFamily::q1 ? v.real() : v.imag();
    }
    case InvariantFamily::theta1:
    case InvariantFamily::theta2: {
      const CMat a = zSz();
      const cplx v = trace(mat_pow(ww, i[0]) * mat_pow(a, i[1]) * mat_pow(CMat(ww + a), i[2]));
      return id.family == InvariantFamily::theta1 ? v.real() : v.imag();
    }
    case InvariantFamily::r1:
    case InvariantFamily::r2: {
      const cplx v = trace(mat_pow(ww, i[0]) * mat_pow(CMat(transpose(z) * conj(z)), i[1]));
      return id.family == InvariantFamily::r1 ? v.real() : v.imag();
    }
  }
  fail(ErrorCode::InvalidArgument, "unknown invariant family");
}

double invariance_defect(const InvariantFamilyId& id, const TangentPair& t, int trials, Rng& rng) {
  const double base = eval_invariant(id, t);
  double worst = 0.0;
  for (int k = 0; k < trials; ++k) {
    const CMat h = rng.unitary(t.n());
    worst = std::max(worst, std::abs(eval_invariant(id, k_action(h, t)) - base));
  }
  return worst;
}

std::vector<InvariantFamilyId> all_invariant_ids(std::size_t n, std::size_t m, const CMat& S) {
  std::vector<InvariantFamilyId> out;
  const int N = static_cast<int>(n), M = static_cast<int>(m);
  for (const auto& fi : kFamilies) {
    std::vector<std::vector<int>> tuples;
    switch (fi.arity) {
      case 1:
        for (int a = 1; a <= std::max(N, M); ++a) tuples.push_back({a});
        break;
      case 2:
        for (int a = 1; a <= std::max(N, M); ++a)
          for (int b = 1; b <= std::max(N, M); ++b) tuples.push_back({a, b});
        break;
      case 3:
        for (int a = 1; a <= N; ++a)
          for (int b = 1; b <= M; ++b)
            for (int c = 1; c <= N; ++c) tuples.push_back({a, b, c});
        break;
    }
    for (auto& tup : tuples) {
      InvariantFamilyId id{fi.family, tup, fi.uses_S ? std::optional<CMat>(S) : std::nullopt};
      try {
        validate_invariant_id(id, n, m);
      } catch (const Error&) {
        continue;
      }
      out.push_back(std::move(id));
    }
  }
  return out;
}

int independence_rank(std::size_t n, std::uint64_t seed) {
  if (n < 1 || n > 3) fail(ErrorCode::UnsupportedDimension, "independence_rank is implemented for n <= 3");
  const Chart chart = Chart::siegel(n);
  Rng rng(derive_seed(seed, "independence-rank", n));
  std::vector<double> point(chart.dim());
  for (auto& x : point) x = rng.normal();
  const auto vars = seed_variables(point, 1);
  const JMat w = unpack_jets(chart, vars).first;
  const JMat ww = w * conj(w);
  RMat J(n, chart.dim());
  JMat power = JMat::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    power = power * ww;
    const Jet q = trace(power);
    for (std::size_t c = 0; c < chart.dim(); ++c) J(i, c) = q.partial({static_cast<int>(c)}).real();
  }
  return numerical_rank(J);
}

TangentPair random_tangent_pair(std::size_t n, std::size_t m, Rng& rng) {
  auto unit = [](CMat a) {
    double s = 0.0;
    for (const auto& x : a.data()) s += std::norm(x);
    const double r = std::sqrt(s);
    return r > 0.0 ? a.map([r](const cplx& x) { return x / r; }) : a;
  };
  return TangentPair{unit(symmetric_part(rng.complex_matrix(n, n))), unit(rng.complex_matrix(m, n))};
}

}  // namespace sj
