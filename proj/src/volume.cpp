#include "sj/volume.hpp"

#include "sj/errors.hpp"
#include "sj/random.hpp"

#include <cmath>
#include <numeric>
#include <numbers>
#include <vector>

#include <omp.h>

namespace sj {

double siegel_volume(int n) {
  if (n < 1 || n > 4) fail(ErrorCode::UnsupportedDimension, "closed volume formula is tabulated for 1 <= n <= 4");
  // ζ(2k) = |B_2k| 2^{2k-1} π^{2k} / (2k)!, so each factor π^{-k} Γ(k) ζ(2k) is a
  // rational times π^k. Keeping the rational exact leaves one rounding in π^N.
  constexpr std::uint64_t bern_den[] = {6, 30, 42, 30};  // |B_2k| = 1 / bern_den
  std::uint64_t num = 2, den = 1;
  for (int k = 1; k <= n; ++k) {
    std::uint64_t fact_k1 = 1, fact_2k = 1;
    for (int i = 2; i < k; ++i) fact_k1 *= static_cast<std::uint64_t>(i);
    for (int i = 2; i <= 2 * k; ++i) fact_2k *= static_cast<std::uint64_t>(i);
    num *= fact_k1 << (2 * k - 1);
    den *= bern_den[k - 1] * fact_2k;
    const std::uint64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  const double pi_pow = std::pow(std::numbers::pi, n * (n + 1) / 2);
  return static_cast<double>(num) * pi_pow / static_cast<double>(den);
}

namespace {

constexpr std::uint64_t kStrata = 4096;

// Stratum s covers x ∈ [-1/2 + s/S, -1/2 + (s+1)/S); integrand (1 - x²)^{-1/2}.
double stratum_sum(std::uint64_t s, std::uint64_t count, std::uint64_t seed) {
  if (count == 0) return 0.0;
  Rng rng(derive_seed(seed, "volume-F1", s));
  const double w = 1.0 / static_cast<double>(kStrata);
  const double lo = -0.5 + static_cast<double>(s) * w;
  double acc = 0.0;
  for (std::uint64_t i = 0; i < count; ++i) {
    const double x = lo + w * rng.uniform(0.0, 1.0);
    acc += 1.0 / std::sqrt(1.0 - x * x);
  }
  return acc * w / static_cast<double>(count);
}

std::uint64_t stratum_count(std::uint64_t samples, std::uint64_t s) {
  return samples / kStrata + (s < samples % kStrata ? 1 : 0);
}

void check_samples(std::uint64_t samples) {
  if (samples == 0) fail(ErrorCode::InvalidArgument, "sample count must be positive");
}

}  // namespace

double volume_estimate_F1_serial(std::uint64_t samples, std::uint64_t seed) {
  check_samples(samples);
  double total = 0.0;
  for (std::uint64_t s = 0; s < kStrata; ++s) total += stratum_sum(s, stratum_count(samples, s), seed);
  return total;
}

double volume_estimate_F1(std::uint64_t samples, std::uint64_t seed, int workers) {
  check_samples(samples);
  std::vector<double> part(kStrata);
  const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(threads)
  for (std::int64_t s = 0; s < static_cast<std::int64_t>(kStrata); ++s) {
    const auto u = static_cast<std::uint64_t>(s);
    part[u] = stratum_sum(u, stratum_count(samples, u), seed);
  }
  double total = 0.0;
  for (double p : part) total += p;  // fixed order: identical to the serial sum
  return total;
}

}  // namespace sj
