#pragma once

// U(n)-invariant polynomials on T_n × C^(m,n), with U(n) acting by
// h·(ω, z) = (h ω ᵗh, z ᵗh).

#include "sj/config.hpp"
#include "sj/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sj {

class Rng;

struct TangentPair {
  CMat omega;  // n×n complex symmetric
  CMat z;      // m×n

  // Symmetrizes omega within sym_tol, otherwise NotSymmetric.
  static TangentPair make(const CMat& omega, const CMat& z, const Tolerances& tol = default_tolerances());
  std::size_t n() const noexcept { return omega.rows(); }
  std::size_t m() const noexcept { return z.rows(); }
};

enum class InvariantFamily {
  p, psi1, psi2, psi3, f1, f2, m1, m2, q1, q2, theta1, theta2, r1, r2,
};

// Indices are 1-based as in the usual notation. S is required by the m, q and theta families.
struct InvariantFamilyId {
  InvariantFamily family;
  std::vector<int> idx;
  std::optional<CMat> S;
};

InvariantFamily family_from_name(const std::string& name);
std::string family_name(InvariantFamily f);
bool family_uses_S(InvariantFamily f);
std::size_t family_arity(InvariantFamily f);

TangentPair k_action(const CMat& h, const TangentPair& t, const Tolerances& tol = default_tolerances());

// IndexOutOfRange when the indices fall outside the family's range for (n, m).
void validate_invariant_id(const InvariantFamilyId& id, std::size_t n, std::size_t m);
double eval_invariant(const InvariantFamilyId& id, const TangentPair& t);

double invariance_defect(const InvariantFamilyId& id, const TangentPair& t, int trials, Rng& rng);

// Every valid id for (n, m) with the given S (used by the sweep tests).
std::vector<InvariantFamilyId> all_invariant_ids(std::size_t n, std::size_t m, const CMat& S);

// Rank of d(q_1, ..., q_n) in the real coordinates of ω at a seeded random point, q_i = tr((ωω̄)^i).
int independence_rank(std::size_t n, std::uint64_t seed = 42);

// ω and z each scaled to unit Frobenius norm, so defects of the high-degree
// families stay comparable with round-off at O(1) values.
TangentPair random_tangent_pair(std::size_t n, std::size_t m, Rng& rng);

}  // namespace sj
