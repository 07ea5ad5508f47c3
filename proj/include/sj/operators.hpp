#pragma once

// Differential operators evaluated on jets. An operator takes the jet of f at
// a point (order r) together with the coordinate jets there, and returns jets
// of order r - k, so operators compose by plain function composition.
//
// Wirtinger conventions: (∂/∂Ω)_{ab} = ((1+δ_ab)/2)·∂/∂ω_ab with
// ∂/∂ω = ½(∂/∂x − i∂/∂y), and (∂/∂Z)_{ik} = ∂/∂z_{ki} (an n×m matrix).

#include "sj/chart.hpp"
#include "sj/fields.hpp"
#include "sj/jet.hpp"
#include "sj/metrics.hpp"

#include <functional>
#include <optional>
#include <string>

namespace sj {

// Σ_k c_k ∂/∂x_{i_k} with jet coefficients.
struct LinOp {
  std::vector<int> idx;
  std::vector<Jet> coef;

  void add(int i, const Jet& c);
  LinOp& operator+=(const LinOp& o);
};
LinOp operator*(const Jet& c, const LinOp& op);

struct OpMat {
  std::size_t rows = 0, cols = 0;
  std::vector<LinOp> e;

  OpMat() = default;
  OpMat(std::size_t r, std::size_t c) : rows(r), cols(c), e(r * c) {}
  LinOp& operator()(std::size_t i, std::size_t j) { return e[i * cols + j]; }
  const LinOp& operator()(std::size_t i, std::size_t j) const { return e[i * cols + j]; }
};

OpMat transpose(const OpMat& o);
// Coefficient matrix on the left: (C·O)_ij = Σ_t C_it O_tj.
OpMat mul(const JMat& C, const OpMat& O);
// Operator matrix times coefficients, coefficients kept left of derivatives:
// (O·C)_ij = Σ_t C_tj O_it.
OpMat mul(const OpMat& O, const JMat& C);
OpMat operator+(const OpMat& a, const OpMat& b);
// ½(O + ᵗO).
OpMat sym(const OpMat& o);

// ∂/∂Ω (or ∂/∂W on the disk chart) and its conjugate, n×n.
OpMat wirtinger_first(const Chart& chart, bool bar);
// ∂/∂Z (or ∂/∂η), n×m.
OpMat wirtinger_second(const Chart& chart, bool bar);

// First and second partial-derivative jets of one jet, memoized.
class Partials {
 public:
  explicit Partials(Jet f);
  const Jet& f() const noexcept { return f_; }
  const Jet& d(int i);
  const Jet& dd(int i, int j);

 private:
  Jet f_;
  int dim_;
  std::vector<std::optional<Jet>> d1_;
  std::vector<std::optional<Jet>> d2_;
};

// L applied to h (coefficients multiply the derivatives).
Jet apply(const Jet& h, const LinOp& L);
// Second-order operator L∘R with frozen coefficients: Σ L_i R_j ∂_i∂_j f.
Jet second(Partials& p, const LinOp& L, const LinOp& R);
// tr(C·L·R) for operator matrices L, R, as a second-order frozen-coefficient operator.
Jet trace2(Partials& p, const JMat& C, const OpMat& L, const OpMat& R);

void require_order(const Jet& f, int needed, const char* what);

// Value (or matrix) valued operator on one chart.
struct InvariantOperator {
  std::string name;
  Chart chart;
  int order = 2;
  std::function<JMat(const Jet& f, std::span<const Jet> vars)> apply;

  CMat evaluate(const ScalarField& f, std::span<const double> point) const;
};

// |L(f∘g)(p) − (Lf)(g·p)|, max over entries. `map` is the action of g on L's chart.
double invariance_residual(const InvariantOperator& L, const ChartMap& map, const ScalarField& f,
                           std::span<const double> point);

// Laplacians. The *_displayed variants are the trace formulas exactly as
// usually printed, which agree with Laplace-Beltrami only for n = 1; the main
// variants symmetrize the mixed term (see README).
Jet laplacian_siegel_jet(const Jet& f, const Chart& chart, std::span<const Jet> vars, double a_scale);
Jet laplacian_jacobi_jet(const Jet& f, const Chart& chart, std::span<const Jet> vars, const MetricScales& s);
Jet laplacian_jacobi_displayed_jet(const Jet& f, const Chart& chart, std::span<const Jet> vars, const MetricScales& s);
Jet laplacian_disk_jet(const Jet& f, const Chart& chart, std::span<const Jet> vars, const MetricScales& s);
Jet laplacian_disk_displayed_jet(const Jet& f, const Chart& chart, std::span<const Jet> vars, const MetricScales& s);

InvariantOperator laplacian_siegel_op(std::size_t n, double a_scale);
InvariantOperator laplacian_jacobi_op(std::size_t n, std::size_t m, const MetricScales& s);
InvariantOperator laplacian_jacobi_displayed_op(std::size_t n, std::size_t m, const MetricScales& s);
InvariantOperator laplacian_disk_op(std::size_t n, std::size_t m, const MetricScales& s);
InvariantOperator laplacian_disk_displayed_op(std::size_t n, std::size_t m, const MetricScales& s);

cplx laplacian_siegel(const ScalarField& f, const SiegelPoint& p, double a_scale);
cplx laplacian_jacobi(const ScalarField& f, const JacobiPoint& p, const MetricScales& s);
cplx laplacian_disk(const ScalarField& f, const DiskPoint& p, const MetricScales& s);

// Generators of the invariant algebra on H_1 × C (coordinates x, y, u, v).
Jet op_D_jet(const Jet& f, std::span<const Jet> vars);
Jet op_Psi_jet(const Jet& f, std::span<const Jet> vars);
Jet op_D1_jet(const Jet& f, std::span<const Jet> vars);
Jet op_D2_jet(const Jet& f, std::span<const Jet> vars);
// Right-hand side of the commutator identity for DΨ − ΨD.
Jet commutator_rhs_jet(const Jet& f, std::span<const Jet> vars);

// name ∈ {D, Psi, D1, D2}.
InvariantOperator generator_op(const std::string& name);
double commutator_residual(const ScalarField& f, const JacobiPoint& p);

// det(Y)·det(∂/∂Z ᵗ∂/∂Z̄), of order 2n (n <= 2).
InvariantOperator op_K_det(std::size_t n, std::size_t m);
// 𝕋_{kl} = Σ_ij y_ij ∂²/∂z̄_ki ∂z_lj, m×m.
InvariantOperator op_T_matrix(std::size_t n, std::size_t m);

}  // namespace sj
