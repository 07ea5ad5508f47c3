#pragma once

namespace sj {

// Numerical tolerances shared by every module. One record so callers (and the
// CLI --tol-file flag) can override them in one place.
struct Tolerances {
  double sym_tol = 1e-12;         // max asymmetry accepted (relative to max(1, |entries|))
  double posdef_tol = 1e-12;      // Cholesky pivot floor
  double symplectic_tol = 1e-10;  // ᵗM J M = J defect
  double lin_tol = 1e-12;
  double pivot_tol = 1e-14;
  double cond_max = 1e12;
  double memb_tol = 1e-9;         // domain-membership boundary band
  double unitary_tol = 1e-12;
  double form_imag_tol = 1e-13;   // imaginary part allowed in real quadratic forms
};

// Process-wide defaults. Pure functions take a Tolerances argument defaulted to this.
const Tolerances& default_tolerances();
void set_default_tolerances(const Tolerances& tol);

}  // namespace sj
