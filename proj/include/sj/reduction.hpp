#pragma once

// Minkowski reduction of positive forms, Siegel reduction on H_n (n <= 2) and
// the fundamental domain of the Jacobi modular group on H_{n,m}.

#include "sj/config.hpp"
#include "sj/types.hpp"

#include <limits>
#include <string>
#include <vector>

namespace sj {

struct Condition {
  bool checked = false;
  bool holds = true;
  double margin = std::numeric_limits<double>::infinity();
};

// M1, M2: Minkowski minimality and sign conditions on Y.
// S1: det Im is maximal on the orbit (exact for n = 1, over the generator ball for n = 2).
// S2: Im Ω Minkowski reduced. S3: |Re ω_ij| <= 1/2. PZ: Z in the parallelotope P_Ω.
struct DomainMembership {
  Condition M1, M2, S1, S2, S3, PZ;
  bool member() const;
};

int mink_bound(std::size_t n);

DomainMembership is_minkowski_reduced(const RMat& Y, const Tolerances& tol = default_tolerances());

struct MinkowskiReduction {
  RMat Y;  // U Y ᵗU
  RMat U;  // integer entries, det ±1
  int steps = 0;
  DomainMembership membership;
};
MinkowskiReduction minkowski_reduce(const RMat& Y, const Tolerances& tol = default_tolerances());

struct SiegelReduction {
  SiegelPoint point;
  SymplecticMatrix transform;     // transform · input = point
  std::vector<std::string> word;  // generators in the order applied
  int iterations = 0;
  DomainMembership membership;
};

DomainMembership siegel_membership(const SiegelPoint& p, const Tolerances& tol = default_tolerances());
SiegelReduction siegel_reduce(const SiegelPoint& p, const Tolerances& tol = default_tolerances());

// One ball element: a symplectic integer matrix and the word producing it.
struct BallElement {
  SymplecticMatrix M;
  std::string word;
};
// Words of length <= 4 in unit translations, J_2, the partial inversions and
// elementary GL(2,Z) conjugations, restricted to C != 0 and deduplicated on (C, D).
const std::vector<BallElement>& generator_ball_2();

struct JacobiReduction {
  JacobiPoint point;
  JacobiGroupElement transform;
  std::vector<std::string> word;
  DomainMembership membership;
};

// Solves Z = λ + μΩ with real λ, μ: μ = V Y⁻¹, λ = U − μX.
std::pair<RMat, RMat> parallelotope_coordinates(const JacobiPoint& p);
DomainMembership jacobi_domain_membership(const JacobiPoint& p, const Tolerances& tol = default_tolerances());
JacobiReduction jacobi_reduce(const JacobiPoint& p, const Tolerances& tol = default_tolerances());

}  // namespace sj
