#include "krawx/oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "krawx/detail.hpp"
#include "krawx/errors.hpp"
#include "krawx/polyfun.hpp"

namespace krawx::oracles {

namespace {

constexpr Real kPi = std::numbers::pi_v<Real>;

} // namespace

QuadratureRule gauss_hermite(int order) {
  if (order < 1) throw std::invalid_argument("gauss_hermite: order >= 1");

  ComplexMatrix jacobi(order, order);
  for (int j = 1; j < order; ++j) {
    const Real off = std::sqrt(j / Real(2));
    jacobi(j - 1, j) = off;
    jacobi(j, j - 1) = off;
  }
  const HermitianEigen eig = hermitian_eigensystem(jacobi);

  QuadratureRule rule;
  rule.order = order;
  rule.nodes = eig.values;
  rule.weights.resize(order);
  const Real mu0 = std::sqrt(kPi); // integral of e^{-x^2}
  for (int j = 0; j < order; ++j)
    rule.weights[j] = mu0 * std::norm(eig.vectors(0, j));
  return rule;
}

Real p_quadrature(const bikraw::BiKrawArgs& args) {
  const auto [r, s, i, k, N, R] = args;
  if (r < 0 || s < 0 || i < 0 || k < 0 || r + s > N || i + k > N)
    throw std::invalid_argument("p_quadrature: need r+s <= N and i+k <= N");
  if (std::abs(R(2, 2)) < bikraw::kSingularGuard) throw SingularParameterError("R33");
  if (std::abs(R(0, 2)) < bikraw::kSingularGuard) throw SingularParameterError("R13");
  if (std::abs(R(1, 2)) < bikraw::kSingularGuard) throw SingularParameterError("R23");

  const int l = N - i - k;
  const int t = N - r - s;
  const int order = std::max(N + 1, 8);
  const QuadratureRule rule = gauss_hermite(order);

  // Per-axis Hermite tables for the unrotated factors.
  std::vector<Real> h_i(order), h_k(order), h_l(order);
  for (int a = 0; a < order; ++a) {
    h_i[a] = polyfun::hermite(i, rule.nodes[a]);
    h_k[a] = polyfun::hermite(k, rule.nodes[a]);
    h_l[a] = polyfun::hermite(l, rule.nodes[a]);
  }

  detail::KahanSum<long double> integral;
  for (int a = 0; a < order; ++a) {
    const Real x1 = rule.nodes[a];
    for (int b = 0; b < order; ++b) {
      const Real x2 = rule.nodes[b];
      const long double wab = static_cast<long double>(rule.weights[a]) *
                              rule.weights[b] * h_i[a] * h_k[b];
      for (int c = 0; c < order; ++c) {
        const Real x3 = rule.nodes[c];
        // x~ = R^T x
        const Real xt1 = R(0, 0) * x1 + R(1, 0) * x2 + R(2, 0) * x3;
        const Real xt2 = R(0, 1) * x1 + R(1, 1) * x2 + R(2, 1) * x3;
        const Real xt3 = R(0, 2) * x1 + R(1, 2) * x2 + R(2, 2) * x3;
        integral.add(wab * rule.weights[c] * h_l[c] *
                     polyfun::hermite(r, xt1) * polyfun::hermite(s, xt2) *
                     polyfun::hermite(t, xt3));
    }
    }
  }

  const long double prefactor =
      std::sqrt(static_cast<long double>(polyfun::trinomial(N, r, s))) /
      (detail::ipow<long double>(R(0, 2), i) *
       detail::ipow<long double>(R(1, 2), k) *
       detail::ipow<long double>(R(2, 2), l) *
       detail::ipow<long double>(2, N) * kPi * std::sqrt(kPi) *
       static_cast<long double>(polyfun::factorial(N)));
  return static_cast<Real>(prefactor * integral.value());
}

Point3 Point3::from_polar(Real rho, Real phi, Real z) {
  return {rho * std::cos(phi), rho * std::sin(phi), z};
}

Real Point3::rho() const { return std::hypot(x, y); }
Real Point3::phi() const { return std::atan2(y, x); }

Real psi_cartesian(const oscrep::Composition3& state, const Point3& pt) {
  const int n = state.level();
  const Real norm = std::sqrt(
      1 / (detail::ipow(Real(2), n) * kPi * std::sqrt(kPi) *
           polyfun::factorial(state.a) * polyfun::factorial(state.b) *
           polyfun::factorial(state.c)));
  return norm * std::exp(-(pt.x * pt.x + pt.y * pt.y + pt.z * pt.z) / 2) *
         polyfun::hermite(state.a, pt.x) * polyfun::hermite(state.b, pt.y) *
         polyfun::hermite(state.c, pt.z);
}

Complex psi_polar(const overlaps::PolarLabel& state, const Point3& pt) {
  const int abs_m = std::abs(state.m);
  const Real rho = pt.rho();
  const Real phi = pt.phi();
  const Real norm =
      detail::parity_sign(state.n_rho) / std::pow(kPi, Real(0.75)) *
      std::sqrt(polyfun::factorial(state.n_rho) /
                (detail::ipow(Real(2), state.n_z) * polyfun::factorial(state.n_z) *
                 polyfun::factorial(state.n_rho + abs_m)));
  const Real radial = std::exp(-(rho * rho + pt.z * pt.z) / 2) *
                      detail::ipow(rho, abs_m) *
                      polyfun::laguerre(state.n_rho, static_cast<Real>(abs_m),
                                        rho * rho) *
                      polyfun::hermite(state.n_z, pt.z);
  return norm * radial * std::exp(Complex(0, state.m * phi));
}

} // namespace krawx::oracles
