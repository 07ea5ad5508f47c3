#pragma once

// Maass operators on H_n and the invariant operators built from them.

#include "sj/operators.hpp"

namespace sj {

// K = 2iY ∂/∂Ω and Λ = 2iY ∂/∂Ω̄ as operator matrices with jet coefficients.
OpMat maass_K(const Chart& chart, std::span<const Jet> vars);
OpMat maass_Lambda(const Chart& chart, std::span<const Jet> vars);

// (O G)_ab = Σ_c O_ac(G_cb): an operator matrix acting on a matrix of functions.
JMat apply(const OpMat& O, const JMat& G);

struct MaassValues {
  CMat K;
  CMat Lambda;
};
MaassValues maass_operators(const ScalarField& f, const SiegelPoint& p);

// σ in the recursion for A^(j). Trace, kept in one place so the reading can be swapped.
Jet maass_sigma(const JMat& G);

// A^(1) f and A^(j) f, j <= 2, as jet matrices.
JMat maass_A(const Jet& f, const Chart& chart, std::span<const Jet> vars, int j);

// H_j = tr A^(j), j ∈ {1, 2}; UnsupportedOrder beyond (needs jets of order 2j).
InvariantOperator maass_H(std::size_t n, int j);
cplx maass_Hj(const ScalarField& f, const SiegelPoint& p, int j);

// The symmetrization map on H_n applied to c_0 + c_1 q_1 (coefficients on 1, q_1, q_2, ...).
// The q_1 part differentiates f(g·exp(Σ t_α η_α)·iI) along an orthonormal basis of p,
// scaled by a constant fixed once against Δ_{n;1} at a reference point.
struct SymmetrizedOperator {
  InvariantOperator op;
  double calibration = 0.0;
};
SymmetrizedOperator symmetrize_polynomial_to_operator(const std::vector<double>& coeffs, std::size_t n);

// Σ_α ∂²/∂t_α² of f(g·exp(Σ t_α η_α)·iI) at t = 0, g = [[L, X ᵗL⁻¹], [0, ᵗL⁻¹]], L ᵗL = Y.
cplx exponential_casimir(const Jet& f_chart, const SiegelPoint& p);

// Operator lookup used by the CLI: laplacian, D, Psi, D1, D2, K, T, H1, H2.
InvariantOperator operator_by_name(const std::string& name, Space space, std::size_t n, std::size_t m);

}  // namespace sj
