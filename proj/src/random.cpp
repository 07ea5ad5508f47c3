#include "sj/random.hpp"

#include "sj/linalg.hpp"

namespace sj {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t root, std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char ch : label) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return splitmix64(splitmix64(root) ^ h);
}

std::uint64_t derive_seed(std::uint64_t root, std::string_view label, std::uint64_t index) {
  return splitmix64(derive_seed(root, label) + index);
}

RMat Rng::normal_matrix(std::size_t r, std::size_t c, double scale) {
  RMat M(r, c);
  for (auto& x : M.data()) x = scale * normal();
  return M;
}

RMat Rng::symmetric(std::size_t n, double scale) {
  return symmetric_part(normal_matrix(n, n, scale));
}

RMat Rng::posdef(std::size_t n, double spread) {
  RMat L = RMat::identity(n) + normal_matrix(n, n, spread);
  RMat Y = L * transpose(L);
  const double s = uniform(0.5, 2.0);
  for (std::size_t i = 0; i < n; ++i) Y(i, i) += 0.2;
  return symmetric_part(s * Y);
}

SiegelPoint Rng::siegel_point(std::size_t n) {
  return SiegelPoint::make(symmetric(n), posdef(n));
}

JacobiPoint Rng::jacobi_point(std::size_t n, std::size_t m) {
  return JacobiPoint::make(siegel_point(n), normal_matrix(m, n), normal_matrix(m, n));
}

CMat Rng::complex_matrix(std::size_t r, std::size_t c, double scale) {
  CMat M(r, c);
  for (auto& x : M.data()) x = cplx(scale * normal(), scale * normal());
  return M;
}

DiskPoint Rng::disk_point(std::size_t n, std::size_t m, double radius) {
  CMat W = complex_matrix(n, n);
  W = symmetric_part(W);
  // Rescale so the operator norm is below `radius` (Frobenius bounds it).
  double fro = 0.0;
  for (const auto& x : W.data()) fro += std::norm(x);
  fro = std::sqrt(fro);
  W = (radius * uniform(0.2, 1.0) / std::max(fro, 1e-12)) * W;
  return DiskPoint::make(W, complex_matrix(m, n));
}

SymplecticMatrix Rng::symplectic(std::size_t n, double scale) {
  RMat U = RMat::identity(n) + normal_matrix(n, n, 0.5 * scale);
  while (std::abs(determinant(U)) < 0.3) U = RMat::identity(n) + normal_matrix(n, n, 0.5 * scale);
  const SymplecticMatrix g = SymplecticMatrix::gl_embedding(U);
  const SymplecticMatrix t = SymplecticMatrix::translation(symmetric(n, scale));
  const SymplecticMatrix low =
      SymplecticMatrix::inversion(n) * SymplecticMatrix::translation(symmetric(n, scale)) *
      SymplecticMatrix::inversion(n).inverse();
  return SymplecticMatrix::from_full((g * t * low).full());
}

HeisenbergElement Rng::heisenberg(std::size_t n, std::size_t m, double scale) {
  return HeisenbergElement::make(normal_matrix(m, n, scale), normal_matrix(m, n, scale), normal_matrix(m, m, scale));
}

JacobiGroupElement Rng::jacobi_element(std::size_t n, std::size_t m, double scale) {
  return JacobiGroupElement::make(symplectic(n, scale), heisenberg(n, m, scale));
}

CMat Rng::unitary(std::size_t n) {
  return unitary_from_qr(complex_matrix(n, n));
}

}  // namespace sj
