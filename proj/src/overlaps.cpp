#include "krawx/overlaps.hpp"

#include <cmath>
#include <stdexcept>

#include "krawx/detail.hpp"
#include "krawx/su11cg.hpp"

namespace krawx::overlaps {

namespace {

using detail::ipow_i;
using detail::parity_sign;

const Real kInvSqrt2 = 1 / std::sqrt(Real(2));

int sigma_of(int m) { return m >= 0 ? 1 : -1; }

} // namespace

Complex cartesian_polar(const Composition3& cart, const PolarLabel& pol) {
  if (cart.c != pol.n_z) return 0;
  const int abs_m = std::abs(pol.m);
  if (cart.a + cart.b != 2 * pol.n_rho + abs_m) return 0;

  const auto [nx_t, q_x] = parity_split(cart.a);
  const auto [ny_t, q_y] = parity_split(cart.b);
  const Real cg = su11cg::cg_explicit({Real(0.25) + Real(0.5) * q_x, nx_t,
                                       Real(0.25) + Real(0.5) * q_y, ny_t,
                                       Real(0.5) * (1 + abs_m), pol.n_rho});
  if (cg == Real(0)) return 0;

  Complex phase = Complex(parity_sign(nx_t + pol.n_rho), 0) *
                  detail::ipow<Complex>(Complex(0, sigma_of(pol.m)), cart.b);
  if (pol.m != 0) phase *= kInvSqrt2;
  return phase * cg;
}

Complex polar_spherical(const PolarLabel& pol, const SphericalLabel& sph) {
  if (pol.m != sph.m) return 0;
  if (pol.level() != sph.level()) return 0;

  const int abs_m = std::abs(pol.m);
  const auto [nz_t, q_z] = parity_split(pol.n_z);
  const Real cg = su11cg::cg_explicit(
      {Real(0.5) * (1 + abs_m), pol.n_rho, Real(0.25) + Real(0.5) * q_z, nz_t,
       Real(0.5) * (sph.ell + Real(1.5)), sph.n_r});
  if (cg == Real(0)) return 0;

  return ipow_i(pol.m + abs_m) * cg;
}

Complex cartesian_spherical(const Composition3& cart, const SphericalLabel& sph) {
  if (cart.level() != sph.level()) return 0;
  const int abs_m = std::abs(sph.m);

  // 2 n_rho + |m| = r + s forces a single intermediate polar state.
  const int twice_rho = cart.a + cart.b - abs_m;
  if (twice_rho < 0 || twice_rho % 2 != 0) return 0;
  const int n_rho = twice_rho / 2;

  const auto [r_t, q_r] = parity_split(cart.a);
  const auto [s_t, q_s] = parity_split(cart.b);
  const auto [t_t, q_t] = parity_split(cart.c);

  const Real cg_xy = su11cg::cg_explicit({Real(0.25) + Real(0.5) * q_r, r_t,
                                          Real(0.25) + Real(0.5) * q_s, s_t,
                                          Real(0.5) * (1 + abs_m), n_rho});
  if (cg_xy == Real(0)) return 0;
  const Real cg_z = su11cg::cg_explicit(
      {Real(0.5) * (1 + abs_m), n_rho, Real(0.25) + Real(0.5) * q_t, t_t,
       Real(0.5) * (sph.ell + Real(1.5)), sph.n_r});
  if (cg_z == Real(0)) return 0;

  Complex phase = Complex(parity_sign(r_t + n_rho), 0) *
                  ipow_i(-(sph.m + abs_m)) *
                  detail::ipow<Complex>(Complex(0, -sigma_of(sph.m)), cart.b);
  if (sph.m != 0) phase *= kInvSqrt2;
  return phase * cg_xy * cg_z;
}

Complex cartesian_spherical_conj(const Composition3& cart,
                                 const SphericalLabel& sph) {
  return std::conj(cartesian_spherical(cart, sph));
}

std::vector<PolarLabel> polar_basis(int level) {
  std::vector<PolarLabel> labels;
  for (int m = -level; m <= level; ++m) {
    const int abs_m = std::abs(m);
    for (int n_rho = 0; 2 * n_rho + abs_m <= level; ++n_rho)
      labels.push_back({n_rho, m, level - 2 * n_rho - abs_m});
  }
  return labels;
}

std::vector<SphericalLabel> spherical_basis(int level) {
  std::vector<SphericalLabel> labels;
  for (int ell = level % 2; ell <= level; ell += 2)
    for (int m = -ell; m <= ell; ++m) labels.push_back({(level - ell) / 2, ell, m});
  return labels;
}

ComplexMatrix overlap_matrix(int level, OverlapKind kind) {
  const oscrep::EigenspaceBasis cart(level);
  const auto polar = polar_basis(level);
  const auto spherical = spherical_basis(level);

  switch (kind) {
    case OverlapKind::cart_polar: {
      ComplexMatrix m(cart.size(), polar.size());
      for (std::size_t i = 0; i < cart.size(); ++i)
        for (std::size_t j = 0; j < polar.size(); ++j)
          m(i, j) = cartesian_polar(cart.at(i), polar[j]);
      return m;
    }
    case OverlapKind::polar_spher: {
      ComplexMatrix m(polar.size(), spherical.size());
      for (std::size_t i = 0; i < polar.size(); ++i)
        for (std::size_t j = 0; j < spherical.size(); ++j)
          m(i, j) = polar_spherical(polar[i], spherical[j]);
      return m;
    }
    case OverlapKind::cart_spher: {
      ComplexMatrix m(cart.size(), spherical.size());
      for (std::size_t i = 0; i < cart.size(); ++i)
        for (std::size_t j = 0; j < spherical.size(); ++j)
          m(i, j) = cartesian_spherical_conj(cart.at(i), spherical[j]);
      return m;
    }
  }
  throw std::logic_error("overlap_matrix: unknown kind");
}

} // namespace krawx::overlaps
