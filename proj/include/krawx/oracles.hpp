#ifndef KRAWX_ORACLES_HPP
#define KRAWX_ORACLES_HPP

#include <vector>

#include "krawx/bikraw.hpp"
#include "krawx/oscrep.hpp"
#include "krawx/overlaps.hpp"
#include "krawx/real.hpp"

namespace krawx::oracles {

// Gauss-Hermite rule for integral e^{-x^2} f(x) dx, exact for polynomial f
// of degree <= 2 order - 1. Nodes ascending (symmetric about 0),
// sum of weights = sqrt(pi).
struct QuadratureRule {
  std::vector<Real> nodes;
  std::vector<Real> weights;
  int order = 0;
};

// Golub-Welsch: eigenproblem of the symmetric tridiagonal Jacobi matrix
// with off-diagonals sqrt(j/2).
QuadratureRule gauss_hermite(int order);

// Bivariate Krawtchouk value through the triple-Gaussian integral
// representation, tensor-product Gauss-Hermite at order max(N+1, 8) per
// axis. Exact up to rounding: the integrand over the Gaussian weight is a
// polynomial of degree <= 2N per axis.
Real p_quadrature(const bikraw::BiKrawArgs& args);

// Evaluation point, Cartesian storage with polar accessors.
struct Point3 {
  Real x = 0;
  Real y = 0;
  Real z = 0;

  static Point3 from_polar(Real rho, Real phi, Real z);
  Real rho() const;
  Real phi() const;
};

// Normalized Cartesian oscillator wavefunction Psi_{n_x,n_y,n_z}(x, y, z).
Real psi_cartesian(const oscrep::Composition3& state, const Point3& pt);

// Normalized polar oscillator wavefunction Psi_{n_rho,m,n_z}(rho, phi, z),
// including the (-1)^{n_rho} phase and e^{i m phi}.
Complex psi_polar(const overlaps::PolarLabel& state, const Point3& pt);

} // namespace krawx::oracles

#endif
