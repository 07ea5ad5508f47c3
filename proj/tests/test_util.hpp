#pragma once

#include "sj/fields.hpp"
#include "sj/linalg.hpp"
#include "sj/random.hpp"

#include <doctest.h>

#include <cmath>

namespace sjt {

using namespace sj;

inline ScalarField field(const Chart& chart, std::string name, JetField f) {
  return ScalarField{chart, std::move(name), std::move(f)};
}

// y^s on H_1 (coordinate 1) or H_1 × C.
inline ScalarField y_power(const Chart& chart, cplx s) {
  return field(chart, "y^s", [s](std::span<const Jet> v) { return pow(v[1], s); });
}

inline JacobiPoint jpoint(cplx tau, cplx z) {
  return JacobiPoint::from_complex(CMat(1, 1, tau), CMat(1, 1, z));
}

inline SiegelPoint spoint(cplx tau) { return SiegelPoint::from_omega(CMat(1, 1, tau)); }

inline RMat rmat(std::size_t r, std::size_t c, std::vector<double> v) { return RMat(r, c, std::move(v)); }
inline CMat cmat(std::size_t r, std::size_t c, std::vector<cplx> v) { return CMat(r, c, std::move(v)); }

}  // namespace sjt
