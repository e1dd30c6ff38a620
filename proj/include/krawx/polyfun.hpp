#ifndef KRAWX_POLYFUN_HPP
#define KRAWX_POLYFUN_HPP

#include "krawx/real.hpp"

namespace krawx::polyfun {

struct TrinomialArgs {
  int N = 0;
  int i = 0;
  int k = 0;
};

// Largest N for which the exact integer combinatorics below are supported.
inline constexpr int kMaxExactN = 64;

// Pochhammer symbol (a)_n = a(a+1)...(a+n-1); (a)_0 = 1.
Real pochhammer(Real a, int n);

// Binomial and trinomial coefficients, computed in exact integer arithmetic
// and converted to Real at the end. Arguments must satisfy 0 <= k <= n (resp.
// i, k >= 0, i + k <= N) and n, N <= kMaxExactN.
Real binomial(int n, int k);
Real trinomial(const TrinomialArgs& args);
inline Real trinomial(int N, int i, int k) { return trinomial({N, i, k}); }

// n! exactly for n <= 34 (128-bit product), as a rounded Real product beyond.
Real factorial(int n);

// Standard Krawtchouk polynomial K_n(x; p; N) = 2F1(-n, -x; -N; 1/p),
// summed term by term with compensated accumulation. Requires n <= N and
// p != 0. Non-integer x is allowed (the series then runs to n terms);
// for integer x >= 0 it truncates at min(n, x).
Real krawtchouk(int n, Real x, Real p, int N);

// Dual Hahn polynomial R_n(lambda(x); gamma, delta; N) on the quadratic
// lattice lambda(x) = x(x + gamma + delta + 1), as the terminating
// 3F2(-n, -x, x+gamma+delta+1; gamma+1, -N; 1). Requires n, x <= N and
// gamma > -1.
Real dual_hahn(int n, int x, Real gamma, Real delta, int N);

// Physicists' Hermite polynomial H_n(x) by the three-term recurrence.
Real hermite(int n, Real x);

// Generalized Laguerre polynomial L_n^(alpha)(x) by the three-term
// recurrence.
Real laguerre(int n, Real alpha, Real x);

// Default absolute tolerance for identity checks at level N:
// 1e-10 scaled by 10^ceil(N/20).
Real default_tol(int N);

} // namespace krawx::polyfun

#endif
