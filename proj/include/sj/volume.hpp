#pragma once

#include <cstdint>

namespace sj {

// vol(F_n) = 2 ∏_{k=1}^n π^{-k} Γ(k) ζ(2k), n <= 4, evaluated as (rational)·π^{n(n+1)/2}.
double siegel_volume(int n);

// ∫_{F_1} y^{-2} dx dy by stratified sampling in x with the inner y-integral done
// exactly. Strata get seeds derived from (seed, stratum), so the result does not
// depend on the worker count.
double volume_estimate_F1(std::uint64_t samples, std::uint64_t seed, int workers = 0);
double volume_estimate_F1_serial(std::uint64_t samples, std::uint64_t seed);

}  // namespace sj
