#pragma once

// Eigenfunctions of Δ on H_1 × C, the Fourier-coefficient equation, Eisenstein
// terms, and the character basis on the torus C^(m,n)/L_Ω.

#include "sj/fields.hpp"
#include "sj/random.hpp"
#include "sj/types.hpp"

#include <functional>
#include <string>
#include <vector>

namespace sj {

// ---------------------------------------------------------------------------
// Eigenfunction catalog on H_1 × C (coordinates x, y, u, v), Δ with A = B = 1.

struct EigenCatalogEntry {
  std::string id;  // "bessel", "y^s", "y^s x", ..., "uv"
  int item;        // 1: Bessel, 2: eigenvalue s(s-1), 3: s(s+1), 4: harmonic
  // Field for parameter s; `a` is the frequency of the Bessel entry (a != 0).
  std::function<ScalarField(cplx s, double a)> field;
  std::function<cplx(cplx s)> eigenvalue;
  // Growth along y → ∞ with x, u, v fixed: |f| <= C y^N, N from this rule.
  std::function<int(cplx s)> growth_exponent;
};

const std::vector<EigenCatalogEntry>& eigen_catalog();
const EigenCatalogEntry& eigen_entry(const std::string& id);
std::vector<const EigenCatalogEntry*> eigen_entries_for_item(int item);

// |Δf − λ(s) f| at the point.
double eigen_residual(const EigenCatalogEntry& entry, cplx s, const JacobiPoint& p, double a = 1.0);

struct GrowthReport {
  int N = 0;
  double C = 0.0;         // fixed at the ray start
  double worst = 0.0;     // max over the ray of |f| / (C y^N); <= 1 passes
  bool holds = false;
};
// Ray (x, t·y, u, v), t = 2^k, k = 0..kmax; p(Y) = det Y = y.
GrowthReport growth_check(const EigenCatalogEntry& entry, cplx s, const JacobiPoint& p, int kmax = 30,
                          double a = 1.0);

// ---------------------------------------------------------------------------
// Fourier coefficient equation
//   [y²∂_y² + (y+v²)∂_v² + 2yv∂_y∂_v] F = ((ay + bv)² + b²y + λ) F,
// a = 2πn, b = 2πr, λ = s(s−1).

using PlaneField = std::function<Jet(const Jet& y, const Jet& v)>;

double fourier_ode_residual(const PlaneField& F, cplx s, long n_idx, long r_idx, double y, double v);
// Candidate F = y^{1/2} K_{s−1/2}(2π|n|y); for n = 0 the Euler solution y^s.
double fourier_ode_residual(cplx s, long n_idx, long r_idx, double y, double v);

// ---------------------------------------------------------------------------
// Eisenstein terms on H_1 × C

// Coset of Γ^∞ in Γ_{1,1}: coprime (c, d) normalized to c > 0 or (c, d) = (0, 1),
// completed by a fixed (a, b) with 0 <= a < c, and a Heisenberg shift λ.
struct EisensteinCoset {
  long c = 0, d = 1, lambda = 0;
};
JacobiGroupElement coset_element(const EisensteinCoset& k);

// (Im τ_γ)^s · Im z_γ with (τ_γ, z_γ) = γ·(τ, z).
cplx eisenstein_term(const JacobiGroupElement& g, cplx s, const JacobiPoint& p);
cplx eisenstein_term(const EisensteinCoset& k, cplx s, const JacobiPoint& p);
std::vector<EisensteinCoset> eisenstein_cosets(long bound);
cplx eisenstein_truncated(cplx s, const JacobiPoint& p, long bound);

// Random element of Γ_{1,1} = SL(2,Z) ⋉ H_Z: a word in T^{±1}, S plus an integral Heisenberg part.
JacobiGroupElement random_gamma_11(Rng& rng, int word_length = 6, long heis_range = 3);

// ---------------------------------------------------------------------------
// Torus A_Ω = C^(m,n) / (Z^(m,n) + Z^(m,n) Ω)

struct RiemannReport {
  double rc1_defect = 0.0;  // max |Ω* J ᵗΩ*|
  double rc2_min_eig = 0.0; // smallest eigenvalue of −(1/i) Ω* J ᵗΩ̄*
  bool rc1 = false, rc2 = false;
};
// Takes a raw Ω so that invalid inputs can be examined.
RiemannReport riemann_conditions_check(const CMat& omega, const Tolerances& tol = default_tolerances());

struct CharacterIndex {
  RMat A_idx;  // integer m×n
  RMat B_idx;  // integer m×n
};

// exp(2πi (tr(ᵗA U) + tr((B − AX) Y⁻¹ ᵗV))), Z = U + iV.
cplx torus_character(const SiegelPoint& omega, const CharacterIndex& idx, const CMat& Z);

// Gram matrix of the characters for the normalized measure on the fundamental
// parallelotope, by a grid×grid midpoint rule in Z = α + βΩ. n = m = 1.
// GridTooCoarse when an off-diagonal entry exceeds 1e-4.
CMat torus_gram(const SiegelPoint& omega, const std::vector<CharacterIndex>& indices, int grid, int workers = 0);

// {(a, b) : a, b ∈ {−r..r}} for n = m = 1.
std::vector<CharacterIndex> character_box(long r);

}  // namespace sj
