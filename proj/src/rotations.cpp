#include "krawx/rotations.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "krawx/detail.hpp"
#include "krawx/polyfun.hpp"

namespace krawx::rotations {

namespace {

constexpr Real kTwoPi = 2 * std::numbers::pi_v<Real>;
constexpr Real kPoleWindow = 1e-12;

// Little-d element d^ell_{m' m}(beta) for beta away from 0 and pi, with the
// tan power folded into the series so no intermediate can overflow:
//   d = (-1)^{m'+ell} sqrt(C(2l, m+l) C(2l, m'+l)) cos(b/2)^{-(m+m')}
//       * sum_j r_j sin(b/2)^{2l+m+m'-2j},
// r_j being the terms of K_{m+l}(m'+l; sin^2(b/2); 2l). The exponent
// 2l+m+m'-2j stays >= |m-m'| for all contributing j.
Real little_d_series(int ell, int m_prime, int m, Real s, Real c) {
  const int n = m + ell;
  const int x = m_prime + ell;
  const int big_n = 2 * ell;
  const int jmax = std::min(n, x);
  const int e0 = 2 * ell + m + m_prime;

  detail::KahanSum<long double> sum;
  long double coeff = 1;
  sum.add(detail::ipow<long double>(s, e0));
  for (int j = 0; j < jmax; ++j) {
    coeff *= (j - static_cast<long double>(n)) * (j - static_cast<long double>(x));
    coeff /= (j - static_cast<long double>(big_n)) * (j + 1.0L);
    sum.add(coeff * detail::ipow<long double>(s, e0 - 2 * (j + 1)));
  }

  const Real binoms = std::sqrt(polyfun::binomial(big_n, n) *
                                polyfun::binomial(big_n, x));
  const int cexp = -(m + m_prime);
  const long double cpow = cexp >= 0
                               ? detail::ipow<long double>(c, cexp)
                               : 1.0L / detail::ipow<long double>(c, -cexp);
  return static_cast<Real>(detail::parity_sign(m_prime + ell) * binoms *
                           static_cast<Real>(cpow * sum.value()));
}

} // namespace

Real RotationMatrix::orthogonality_defect() const {
  Real worst = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Real dot = 0;
      for (int k = 0; k < 3; ++k) dot += e_[k][i] * e_[k][j];
      worst = std::max(worst, std::abs(dot - (i == j ? Real(1) : Real(0))));
    }
  return worst;
}

Real RotationMatrix::det() const {
  return e_[0][0] * (e_[1][1] * e_[2][2] - e_[1][2] * e_[2][1]) -
         e_[0][1] * (e_[1][0] * e_[2][2] - e_[1][2] * e_[2][0]) +
         e_[0][2] * (e_[1][0] * e_[2][1] - e_[1][1] * e_[2][0]);
}

RotationMatrix euler_to_rotation(const EulerAngles& angles) {
  const Real ca = std::cos(angles.alpha), sa = std::sin(angles.alpha);
  const Real cb = std::cos(angles.beta), sb = std::sin(angles.beta);
  const Real cg = std::cos(angles.gamma), sg = std::sin(angles.gamma);
  return RotationMatrix({{{ca * cb * cg - sa * sg, -sa * cb * cg - ca * sg, sb * cg},
                          {ca * cb * sg + sa * cg, ca * cg - sa * cb * sg, sb * sg},
                          {-ca * sb, sa * sb, cb}}});
}

RotationMatrix transposed(const RotationMatrix& r) {
  RotationMatrix t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t(i, j) = r(j, i);
  return t;
}

Complex wigner_d(const WignerIndex& idx, const EulerAngles& angles) {
  const auto [ell, m_prime, m] = idx;
  if (ell < 0 || std::abs(m) > ell || std::abs(m_prime) > ell)
    throw std::invalid_argument("wigner_d: need |m|, |m'| <= ell");

  const Complex phase =
      std::exp(Complex(0, -(angles.gamma * m_prime + angles.alpha * m)));

  Real beta = std::fmod(angles.beta, kTwoPi);
  if (beta < 0) beta += kTwoPi;

  // Analytic limits at the beta poles; the generic form below would hit
  // 0 * inf there.
  if (beta <= kPoleWindow || kTwoPi - beta <= kPoleWindow)
    return (m_prime == m) ? phase : Complex(0);
  if (std::abs(beta - std::numbers::pi_v<Real>) <= kPoleWindow)
    return (m_prime == -m)
               ? phase * Complex(detail::parity_sign(ell + m_prime), 0)
               : Complex(0);

  const Real s = std::sin(beta / 2);
  const Real c = std::cos(beta / 2);

  // d_{m'm} = d_{-m,-m'}; reflect so m + m' <= 0, which keeps the series
  // short and the cos power nonnegative on the unstable half.
  Real d;
  if (m + m_prime > 0)
    d = little_d_series(ell, -m, -m_prime, s, c);
  else
    d = little_d_series(ell, m_prime, m, s, c);

  return phase * d;
}

ComplexMatrix wigner_block(int ell, const EulerAngles& angles) {
  ComplexMatrix block(2 * ell + 1, 2 * ell + 1);
  for (int mp = -ell; mp <= ell; ++mp)
    for (int m = -ell; m <= ell; ++m)
      block(mp + ell, m + ell) = wigner_d({ell, mp, m}, angles);
  return block;
}

ComplexMatrix l1_basis_change() {
  const Real r = 1 / std::sqrt(Real(2));
  ComplexMatrix t(3, 3);
  // rows x, y, z; columns m = -1, 0, +1
  t(0, 0) = {r, 0};
  t(1, 0) = {0, -r};
  t(2, 1) = {1, 0};
  t(0, 2) = {-r, 0};
  t(1, 2) = {0, -r};
  return t;
}

} // namespace krawx::rotations
