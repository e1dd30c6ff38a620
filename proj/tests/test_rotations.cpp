#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "krawx/polyfun.hpp"
#include "krawx/rotations.hpp"
#include "krawx/validate.hpp"

using namespace krawx;
using namespace krawx::rotations;

namespace {
constexpr Real kPi = std::numbers::pi_v<Real>;
}

TEST_CASE("euler matrix special cases") {
  const RotationMatrix id = euler_to_rotation({0, 0, 0});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(id(i, j) == doctest::Approx(i == j ? 1 : 0).epsilon(1e-15));

  const Real beta = 0.83;
  const RotationMatrix ry = euler_to_rotation({0, beta, 0});
  CHECK(ry(2, 2) == doctest::Approx(std::cos(beta)));
  CHECK(ry(0, 2) == doctest::Approx(std::sin(beta)));
  CHECK(ry(2, 0) == doctest::Approx(-std::sin(beta)));
}

TEST_CASE("euler matrix is always a proper rotation") {
  for (const auto& a : validate::sample_angles(42, 1000, 0)) {
    const RotationMatrix r = euler_to_rotation({a[0], a[1], a[2]});
    CHECK(r.orthogonality_defect() <= 1e-12);
    CHECK(std::abs(r.det() - 1) <= 1e-12);
  }
}

TEST_CASE("wigner_d trivial and identity cases") {
  for (int ell = 0; ell <= 4; ++ell)
    for (int mp = -ell; mp <= ell; ++mp)
      for (int m = -ell; m <= ell; ++m) {
        const Complex d = wigner_d({ell, mp, m}, {0, 0, 0});
        CHECK(d == Complex(mp == m ? 1 : 0));
      }
  CHECK(wigner_d({0, 0, 0}, {1.3, 0.7, -2.0}) == Complex(1));
}

TEST_CASE("wigner_d l=1 entries against the closed form") {
  const Real b = 1.23;
  const EulerAngles angles{0, b, 0};
  CHECK(wigner_d({1, 0, 0}, angles).real() == doctest::Approx(std::cos(b)));
  CHECK(wigner_d({1, 1, 1}, angles).real() ==
        doctest::Approx((1 + std::cos(b)) / 2));
  CHECK(wigner_d({1, 1, 0}, angles).real() ==
        doctest::Approx(-std::sin(b) / std::sqrt(Real(2))));
  CHECK(wigner_d({1, 0, 1}, angles).real() ==
        doctest::Approx(std::sin(b) / std::sqrt(Real(2))));
  CHECK(wigner_d({1, 1, -1}, angles).real() ==
        doctest::Approx((1 - std::cos(b)) / 2));
}

TEST_CASE("wigner_d matches the raw Krawtchouk form at benign angles") {
  const Real beta = 1.1;
  const Real s2 = std::sin(beta / 2) * std::sin(beta / 2);
  for (int ell = 0; ell <= 5; ++ell)
    for (int mp = -ell; mp <= ell; ++mp)
      for (int m = -ell; m <= ell; ++m) {
        const Real direct =
            (((mp + ell) % 2 == 0) ? 1 : -1) *
            std::pow(std::sin(beta / 2), 2 * ell) *
            std::pow(std::tan(beta / 2), m + mp) *
            std::sqrt(polyfun::binomial(2 * ell, m + ell) *
                      polyfun::binomial(2 * ell, mp + ell)) *
            polyfun::krawtchouk(m + ell, static_cast<Real>(mp + ell), s2, 2 * ell);
        CHECK(wigner_d({ell, mp, m}, {0, beta, 0}).real() ==
              doctest::Approx(direct).epsilon(1e-10));
      }
}

TEST_CASE("wigner_d beta = pi limit") {
  for (int ell = 0; ell <= 6; ++ell)
    for (int mp = -ell; mp <= ell; ++mp)
      for (int m = -ell; m <= ell; ++m) {
        const Complex d = wigner_d({ell, mp, m}, {0, kPi, 0});
        const Complex expect =
            (mp == -m) ? Complex(((ell + mp) % 2 == 0) ? 1 : -1) : Complex(0);
        CHECK(std::abs(d - expect) <= 1e-12);
      }
}

TEST_CASE("wigner block unitarity up to l = 10") {
  for (const auto& a : validate::sample_angles(7, 5, 0))
    for (int ell = 0; ell <= 10; ++ell)
      CHECK(unitarity_defect(wigner_block(ell, {a[0], a[1], a[2]})) <= 1e-10);
}

TEST_CASE("wigner d symmetry under index swap") {
  for (Real beta : {Real(0.3), Real(1.1), Real(2.5)})
    for (int ell = 0; ell <= 6; ++ell)
      for (int mp = -ell; mp <= ell; ++mp)
        for (int m = -ell; m <= ell; ++m) {
          const Complex lhs = wigner_d({ell, mp, m}, {0, beta, 0});
          const Real sign = ((m - mp) % 2 == 0) ? 1 : -1;
          const Complex rhs = sign * wigner_d({ell, m, mp}, {0, beta, 0});
          CHECK(std::abs(lhs - rhs) <= 1e-12);
        }
}

TEST_CASE("wigner block composition in beta") {
  for (int ell : {1, 3, 6}) {
    const ComplexMatrix lhs = multiply(wigner_block(ell, {0, 0.55, 0}),
                                       wigner_block(ell, {0, 1.17, 0}));
    const ComplexMatrix rhs = wigner_block(ell, {0, 0.55 + 1.17, 0});
    CHECK(max_abs_diff(lhs, rhs) <= 1e-9);
  }
}

TEST_CASE("l=1 block conjugates to the rotation matrix") {
  const ComplexMatrix t = l1_basis_change();
  CHECK(unitarity_defect(t) <= 1e-15);
  for (const auto& a : validate::sample_angles(19, 10, 0)) {
    const EulerAngles angles{a[0], a[1], a[2]};
    const ComplexMatrix cart =
        multiply(t, multiply(wigner_block(1, angles), adjoint(t)));
    const RotationMatrix r = euler_to_rotation(angles);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(std::abs(cart(i, j) - Complex(r(i, j))) <= 1e-12);
  }
}
