#ifndef KRAWX_BIKRAW_HPP
#define KRAWX_BIKRAW_HPP

#include "krawx/cmatrix.hpp"
#include "krawx/real.hpp"
#include "krawx/rotations.hpp"

namespace krawx::bikraw {

using rotations::EulerAngles;
using rotations::RotationMatrix;

// Indices and rotation parameters of one bivariate Krawtchouk evaluation
// P_{r,s}(i,k;N). Degrees r+s <= N, variables i+k <= N.
struct BiKrawArgs {
  int r = 0;
  int s = 0;
  int i = 0;
  int k = 0;
  int N = 0;
  RotationMatrix R;
};

// Tratnik parameters: trinomial probabilities p1 = R13^2, p2 = R23^2.
struct TratnikParams {
  Real p1 = 0;
  Real p2 = 0;
};

// Cross-ratios entering the Gel'fand-Aomoto series.
struct AomotoU {
  Real u11 = 0;
  Real u12 = 0;
  Real u21 = 0;
  Real u22 = 0;
};

// Cross-ratios of R; throws SingularParameterError when any denominator
// entry is smaller than the singular guard.
AomotoU aomoto_u(const RotationMatrix& R);

// Minimum magnitude below which a rotation entry counts as vanishing for
// the closed-form routes (the formulas have removable singularities this
// library does not regularize; use the representation oracle there).
inline constexpr Real kSingularGuard = 1e-10;

// Amplitude weight W_{i,k;N} = C(N;i,k)^{1/2} R13^i R23^k R33^{N-i-k}.
// Requires |R33| above the singular guard.
Real weight(int i, int k, int N, const RotationMatrix& R);

// Gel'fand-Aomoto quadruple hypergeometric series. Needs R13, R23, R33,
// R31, R32 all nonvanishing.
Real p_aomoto(const BiKrawArgs& args);

// Generating-function route: expands the product of the three bracketed
// trinomials to total degree N by exact truncated polynomial multiplication
// and reads off the u^r v^s coefficient. Needs R13, R23, R33 nonvanishing.
Real p_genfun(const BiKrawArgs& args);

// All P_{r,s}(i,k;N) for one (i,k) from a single generating-function
// expansion; entry (r, s), zero-padded above the r+s <= N triangle.
RealMatrix p_genfun_table(int i, int k, int N, const RotationMatrix& R);

// Interbasis decomposition route: Wigner D-blocks contracted with the
// Cartesian/spherical overlap coefficients, divided by the weight.
// The imaginary residue of the sum is asserted <= 1e-9 and discarded.
Real p_interbasis(int r, int s, int i, int k, int N, const EulerAngles& angles);

// Tratnik polynomial K2(m,n;i,k;p1,p2;N) as the product of two standard
// Krawtchouk polynomials with coupled arguments.
Real tratnik_k2(int m, int n, int i, int k, const TratnikParams& params, int N);

// Verifies, against the representation oracle, the conjugation identity
//   <i,k,l| e^{i theta Lx} e^{i chi Ly} |r,s,t>
//     = (-1)^{l+t} <l,k,i| e^{i theta Lz} e^{i chi Ly} |t,s,r>
// and that the right-hand side is reproduced by the interbasis route with
// Euler angles (alpha, beta, gamma) = (0, -chi, -theta). Returns the largest
// absolute deviation over the level-N eigenspace.
Real tratnik_bridge_check(Real theta, Real chi, int N);

// max over (r,s),(r',s') of |sum_{i+k<=N} W^2 P_{rs} P_{r's'} - delta|,
// generating-function route.
Real orthonormality_defect(int N, const RotationMatrix& R);

} // namespace krawx::bikraw

#endif
