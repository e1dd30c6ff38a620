#ifndef KRAWX_SU11CG_HPP
#define KRAWX_SU11CG_HPP

#include <vector>

#include "krawx/cmatrix.hpp"
#include "krawx/real.hpp"

namespace krawx::su11cg {

// Positive-discrete-series representation parameter nu > 0.
struct Su11Rep {
  Real nu = 0;
};

// Labels of one Clebsch-Gordan coefficient <nu1,n1; nu2,n2 | nu12,n12>.
// The coefficient vanishes unless nu12 = nu1 + nu2 + x with the integer
// x = n1 + n2 - n12 in [0, n1 + n2].
struct CgLabel {
  Real nu1 = 0;
  int n1 = 0;
  Real nu2 = 0;
  int n2 = 0;
  Real nu12 = 0;
  int n12 = 0;

  int x() const { return n1 + n2 - n12; }
};

// Coefficients of the normalized three-term recurrence at a fixed total
// N = n1 + n2:  lambda(x) = x(x + 2nu1 + 2nu2 - 1),
//   A_n = (n - N)(n + 2nu1),  C_n = n(n - 2nu2 - N).
struct CgRecurrenceRow {
  Real lambda_x = 0;
  Real a_n = 0;
  Real c_n = 0;
};

CgRecurrenceRow recurrence_coefficients(Real nu1, Real nu2, int N, int x, int n);

// Explicit Clebsch-Gordan coefficient: positive square-root prefactor times
// (x + n12)! times the dual Hahn polynomial R_{n1}(lambda(x); 2nu1-1,
// 2nu2-1; n1+n2). Returns exactly 0 when the selection rules fail.
// All sign information lives in the dual Hahn factor.
Real cg_explicit(const CgLabel& label);

// Values of the monic polynomials P^_n(lambda(x)), n = 0..N, generated by
//   P^_{n+1} = (lambda(x) + A_n + C_n) P^_n - A_{n-1} C_n P^_{n-1}.
// These coincide with the monic dual Hahn values
// (gamma+1)_n (-N)_n R_n(lambda(x)).
std::vector<Real> cg_recurrence_row(Real nu1, Real nu2, int N, int x);

// (N+1) x (N+1) block of coefficients at fixed N = n1 + n2: rows n1 = 0..N
// (n2 = N - n1), columns x = 0..N (n12 = N - x, nu12 = nu1 + nu2 + x).
// Orthogonal.
RealMatrix cg_block(Real nu1, Real nu2, int N);

// Same block built independently from the three-term recurrence with
// unit-norm columns and a positive n1 = 0 entry. Cross-validation route for
// cg_explicit; shares no code path with the square-root prefactor.
RealMatrix cg_block_recurrence(Real nu1, Real nu2, int N);

} // namespace krawx::su11cg

#endif
