#pragma once

#include "sj/types.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace sj {

std::uint64_t splitmix64(std::uint64_t x);
// Stable per-task seed from a root seed and a label.
std::uint64_t derive_seed(std::uint64_t root, std::string_view label);
std::uint64_t derive_seed(std::uint64_t root, std::string_view label, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
  std::mt19937_64& engine() { return engine_; }

  RMat normal_matrix(std::size_t r, std::size_t c, double scale = 1.0);
  RMat symmetric(std::size_t n, double scale = 1.0);
  // Y = L ᵗL + floor·I with a moderately conditioned random L.
  RMat posdef(std::size_t n, double spread = 0.4);

  SiegelPoint siegel_point(std::size_t n);
  JacobiPoint jacobi_point(std::size_t n, std::size_t m);
  DiskPoint disk_point(std::size_t n, std::size_t m, double radius = 0.7);

  // Product of a GL-embedding, a translation and a lower-triangular generator,
  // kept close enough to the identity that products stay well conditioned.
  SymplecticMatrix symplectic(std::size_t n, double scale = 0.5);
  HeisenbergElement heisenberg(std::size_t n, std::size_t m, double scale = 1.0);
  JacobiGroupElement jacobi_element(std::size_t n, std::size_t m, double scale = 0.5);

  CMat unitary(std::size_t n);
  CMat complex_matrix(std::size_t r, std::size_t c, double scale = 1.0);

 private:
  std::mt19937_64 engine_;
};

}  // namespace sj
