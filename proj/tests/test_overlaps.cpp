#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "krawx/overlaps.hpp"

using namespace krawx;
using namespace krawx::overlaps;

namespace {
const Real kInvSqrt2 = 1 / std::sqrt(Real(2));
}

TEST_CASE("cartesian/polar examples") {
  for (int t : {0, 1, 3}) {
    CHECK(cartesian_polar({0, 0, t}, {0, 0, t}) == Complex(1));
    CHECK(std::abs(cartesian_polar({1, 0, t}, {0, 1, t}) - Complex(kInvSqrt2)) <=
          1e-15);
    CHECK(std::abs(cartesian_polar({0, 1, t}, {0, -1, t}) -
                   Complex(0, -kInvSqrt2)) <= 1e-15);
  }
  // structural zeros
  CHECK(cartesian_polar({0, 0, 1}, {0, 0, 0}) == Complex(0)); // n_z mismatch
  CHECK(cartesian_polar({2, 0, 0}, {0, 0, 0}) == Complex(0)); // energy mismatch
}

TEST_CASE("polar/spherical examples") {
  CHECK(polar_spherical({0, 0, 0}, {0, 0, 0}) == Complex(1));
  CHECK(polar_spherical({0, 1, 0}, {0, 1, -1}) == Complex(0)); // m mismatch
  CHECK(polar_spherical({0, 1, 0}, {0, 1, 1}) == Complex(-1)); // i^2 * 1
  CHECK(polar_spherical({1, 0, 0}, {0, 0, 0}) == Complex(0));  // energy mismatch
}

TEST_CASE("cartesian/spherical ground state and parity zero") {
  CHECK(cartesian_spherical({0, 0, 0}, {0, 0, 0}) == Complex(1));
  // r + s - |m| odd
  CHECK(cartesian_spherical({1, 0, 0}, {0, 1, 0}) == Complex(0));
  CHECK(cartesian_spherical_conj({0, 0, 0}, {0, 0, 0}) == Complex(1));
}

TEST_CASE("label enumerations match the eigenspace dimension") {
  for (int n = 0; n <= 8; ++n) {
    const std::size_t dim = static_cast<std::size_t>((n + 1) * (n + 2) / 2);
    CHECK(polar_basis(n).size() == dim);
    CHECK(spherical_basis(n).size() == dim);
    for (const auto& p : polar_basis(n)) CHECK(p.level() == n);
    for (const auto& s : spherical_basis(n)) {
      CHECK(s.level() == n);
      CHECK(std::abs(s.m) <= s.ell);
    }
  }
  // documented orders
  const auto p1 = polar_basis(1);
  CHECK(p1[0].m == -1);
  CHECK(p1[1].m == 0);
  CHECK(p1[2].m == 1);
  const auto s2 = spherical_basis(2);
  CHECK(s2[0].ell == 0);
  CHECK(s2[1].ell == 2);
  CHECK(s2[1].m == -2);
}

TEST_CASE("m conservation is structural") {
  for (const auto& pol : polar_basis(4))
    for (const auto& sph : spherical_basis(4))
      if (pol.m != sph.m) CHECK(polar_spherical(pol, sph) == Complex(0));
}

TEST_CASE("energy conservation across eigenspaces is exact zero") {
  CHECK(cartesian_polar({1, 1, 0}, {0, 0, 1}) == Complex(0));
  CHECK(polar_spherical({0, 2, 0}, {0, 1, 1}) == Complex(0));
  CHECK(cartesian_spherical({1, 1, 1}, {0, 2, 0}) == Complex(0));
}

TEST_CASE("overlap matrices are unitary and compose") {
  for (int n = 0; n <= 8; ++n) {
    const ComplexMatrix cp = overlap_matrix(n, OverlapKind::cart_polar);
    const ComplexMatrix ps = overlap_matrix(n, OverlapKind::polar_spher);
    const ComplexMatrix cs = overlap_matrix(n, OverlapKind::cart_spher);
    CHECK(unitarity_defect(cp) <= 1e-10);
    CHECK(unitarity_defect(ps) <= 1e-10);
    CHECK(unitarity_defect(cs) <= 1e-10);
    CHECK(max_abs_diff(cs, multiply(cp, ps)) <= 1e-10);
  }
}
