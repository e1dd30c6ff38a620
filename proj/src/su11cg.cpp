#include "krawx/su11cg.hpp"

#include <cmath>
#include <stdexcept>

#include "krawx/detail.hpp"
#include "krawx/polyfun.hpp"

namespace krawx::su11cg {

namespace {

constexpr Real kSelectionTol = 1e-9;

long double pochhammer_l(long double a, int n) {
  long double acc = 1;
  for (int j = 0; j < n; ++j) acc *= a + j;
  return acc;
}

long double factorial_l(int n) {
  return static_cast<long double>(polyfun::factorial(n));
}

} // namespace

Real cg_explicit(const CgLabel& label) {
  if (!(label.nu1 > Real(0)) || !(label.nu2 > Real(0)))
    throw std::invalid_argument("cg_explicit: need nu1, nu2 > 0");
  if (label.n1 < 0 || label.n2 < 0 || label.n12 < 0)
    throw std::invalid_argument("cg_explicit: occupation numbers >= 0");

  const int x = label.x();
  if (x < 0) return 0;
  if (std::abs(label.nu12 - (label.nu1 + label.nu2 + x)) > kSelectionTol) return 0;

  const long double nu1 = label.nu1, nu2 = label.nu2;
  const int n1 = label.n1, n2 = label.n2, n12 = label.n12;
  const int total = n1 + n2;

  const long double numerator = pochhammer_l(2 * nu1, n1) *
                                pochhammer_l(2 * nu2, n2) *
                                pochhammer_l(2 * nu1, x);
  const long double denominator =
      factorial_l(n1) * factorial_l(n2) * factorial_l(n12) * factorial_l(x) *
      pochhammer_l(2 * nu2, x) * pochhammer_l(2 * (nu1 + nu2) + 2 * x, n12) *
      pochhammer_l(2 * (nu1 + nu2) + x - 1, x);
  const long double radicand = numerator / denominator;
  if (radicand < 0)
    throw std::domain_error("cg_explicit: negative radicand (out of contract)");

  const Real hahn = polyfun::dual_hahn(n1, x, 2 * label.nu1 - 1,
                                       2 * label.nu2 - 1, total);
  return static_cast<Real>(std::sqrt(radicand) * factorial_l(x + n12)) * hahn;
}

CgRecurrenceRow recurrence_coefficients(Real nu1, Real nu2, int N, int x, int n) {
  CgRecurrenceRow row;
  row.lambda_x = static_cast<Real>(x) * (x + 2 * nu1 + 2 * nu2 - 1);
  row.a_n = (n - static_cast<Real>(N)) * (n + 2 * nu1);
  row.c_n = n * (n - 2 * nu2 - static_cast<Real>(N));
  return row;
}

std::vector<Real> cg_recurrence_row(Real nu1, Real nu2, int N, int x) {
  if (!(nu1 > Real(0)) || !(nu2 > Real(0)))
    throw std::invalid_argument("cg_recurrence_row: need nu1, nu2 > 0");
  if (N < 0 || x < 0 || x > N)
    throw std::invalid_argument("cg_recurrence_row: need 0 <= x <= N");

  // Double-double recurrence; see dual_hahn for the precision rationale.
  using detail::DD;
  const double v1 = static_cast<double>(nu1), v2 = static_cast<double>(nu2);
  const DD lambda = DD(static_cast<double>(x)) *
                    (DD(static_cast<double>(x) - 1) + DD(2 * v1) + DD(2 * v2));
  std::vector<DD> p(static_cast<std::size_t>(N) + 1);
  p[0] = DD(1);
  DD a_prev(0); // A_{n-1}
  for (int n = 0; n < N; ++n) {
    const DD a_n = DD(n - static_cast<double>(N)) * (DD(static_cast<double>(n)) + DD(2 * v1));
    const DD c_n = DD(static_cast<double>(n)) *
                   (DD(n - static_cast<double>(N)) - DD(2 * v2));
    const DD prev = (n == 0) ? DD(0) : p[n - 1];
    p[n + 1] = (lambda + a_n + c_n) * p[n] - a_prev * c_n * prev;
    a_prev = a_n;
  }
  std::vector<Real> out(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) out[j] = static_cast<Real>(p[j].value());
  return out;
}

RealMatrix cg_block(Real nu1, Real nu2, int N) {
  RealMatrix block(N + 1, N + 1);
  for (int n1 = 0; n1 <= N; ++n1)
    for (int x = 0; x <= N; ++x)
      block(n1, x) = cg_explicit(
          {nu1, n1, nu2, N - n1, nu1 + nu2 + x, N - x});
  return block;
}

RealMatrix cg_block_recurrence(Real nu1, Real nu2, int N) {
  RealMatrix block(N + 1, N + 1);
  for (int x = 0; x <= N; ++x) {
    const std::vector<Real> monic = cg_recurrence_row(nu1, nu2, N, x);
    // P_n = monic_n / (W_1 ... W_n) with
    // W_n = -sqrt(n (N-n+1) (n + 2nu1 - 1) (N - n + 2nu2)).
    std::vector<long double> column(static_cast<std::size_t>(N) + 1);
    long double wprod = 1;
    long double norm2 = 0;
    for (int n = 0; n <= N; ++n) {
      if (n > 0) {
        const long double w =
            -std::sqrt(static_cast<long double>(n) * (N - n + 1) *
                       (n + 2 * static_cast<long double>(nu1) - 1) *
                       (N - n + 2 * static_cast<long double>(nu2)));
        wprod *= w;
      }
      column[n] = static_cast<long double>(monic[n]) / wprod;
      norm2 += column[n] * column[n];
    }
    // Unit column norm; the n1 = 0 entry is positive by convention.
    const long double scale = 1 / std::sqrt(norm2);
    for (int n = 0; n <= N; ++n)
      block(n, x) = static_cast<Real>(column[n] * scale);
  }
  return block;
}

} // namespace krawx::su11cg
