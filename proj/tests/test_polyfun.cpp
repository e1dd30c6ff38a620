#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "krawx/polyfun.hpp"

using namespace krawx;
using namespace krawx::polyfun;

namespace {

using u128 = unsigned __int128;

// 128 bits hold every factorial up to 33!; enough for the Hermite/Laguerre
// series oracles below.
u128 fact_u128(int n) {
  u128 f = 1;
  for (int j = 2; j <= n; ++j) f *= static_cast<unsigned>(j);
  return f;
}

// Exact big-integer factorial oracle for the trinomial tests (60! needs
// ~273 bits). Base-2^32 limbs, multiply and exact-divide by machine ints.
struct BigNat {
  std::vector<std::uint32_t> limbs{1};

  void mul(std::uint32_t m) {
    std::uint64_t carry = 0;
    for (auto& limb : limbs) {
      const std::uint64_t cur = static_cast<std::uint64_t>(limb) * m + carry;
      limb = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    while (carry) {
      limbs.push_back(static_cast<std::uint32_t>(carry));
      carry >>= 32;
    }
  }

  void div_exact(std::uint32_t d) {
    std::uint64_t rem = 0;
    for (std::size_t j = limbs.size(); j-- > 0;) {
      const std::uint64_t cur = (rem << 32) | limbs[j];
      limbs[j] = static_cast<std::uint32_t>(cur / d);
      rem = cur % d;
    }
    REQUIRE(rem == 0);
    while (limbs.size() > 1 && limbs.back() == 0) limbs.pop_back();
  }

  Real to_real() const {
    long double v = 0;
    for (std::size_t j = limbs.size(); j-- > 0;)
      v = v * 4294967296.0L + limbs[j];
    return static_cast<Real>(v);
  }
};

Real trinomial_oracle(int n, int i, int k) {
  BigNat big;
  for (int j = 2; j <= n; ++j) big.mul(static_cast<std::uint32_t>(j));
  for (int m : {i, k, n - i - k})
    for (int j = 2; j <= m; ++j) big.div_exact(static_cast<std::uint32_t>(j));
  return big.to_real();
}

// Monomial-expansion oracle H_n(x) = n! sum_m (-1)^m (2x)^{n-2m} / (m!(n-2m)!).
Real hermite_oracle(int n, Real x) {
  Real sum = 0;
  for (int m = 0; 2 * m <= n; ++m) {
    Real term = static_cast<Real>(fact_u128(n)) /
                (static_cast<Real>(fact_u128(m)) *
                 static_cast<Real>(fact_u128(n - 2 * m)));
    term *= std::pow(2 * x, n - 2 * m);
    sum += (m % 2 == 0 ? term : -term);
  }
  return sum;
}

// Terminating-series oracle L_n^(a)(x) = sum_j (-1)^j C(n+a, n-j) x^j / j!.
Real laguerre_oracle(int n, Real alpha, Real x) {
  Real sum = 0;
  for (int j = 0; j <= n; ++j) {
    const Real binom = pochhammer(alpha + j + 1, n - j) /
                       static_cast<Real>(fact_u128(n - j));
    const Real term = binom * std::pow(x, j) / static_cast<Real>(fact_u128(j));
    sum += (j % 2 == 0 ? term : -term);
  }
  return sum;
}

} // namespace

TEST_CASE("pochhammer basics and splitting identity") {
  CHECK(pochhammer(2.37, 0) == 1.0);
  CHECK(pochhammer(1.0, 5) == 120.0);
  CHECK(pochhammer(-3.0, 5) == 0.0);

  std::mt19937_64 rng(17);
  std::uniform_real_distribution<Real> dist(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const Real a = dist(rng);
    const int m = static_cast<int>(rng() % 16);
    const int n = static_cast<int>(rng() % (31 - m));
    const Real lhs = pochhammer(a, m + n);
    const Real rhs = pochhammer(a, m) * pochhammer(a + m, n);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("trinomial exact values") {
  CHECK(trinomial(0, 0, 0) == 1.0);
  CHECK(trinomial(3, 1, 1) == 6.0);
  CHECK(trinomial(20, 7, 6) == trinomial_oracle(20, 7, 6));
  CHECK(trinomial(20, 7, 6) == 133024320.0); // fits exactly, spot value
  CHECK(trinomial(30, 10, 12) == trinomial_oracle(30, 10, 12));
  CHECK(trinomial(60, 20, 20) == trinomial_oracle(60, 20, 20));
  CHECK_THROWS_AS(trinomial(4, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(trinomial(-1, 0, 0), std::invalid_argument);
}

TEST_CASE("binomial against trinomial reduction") {
  for (int n = 0; n <= 20; ++n)
    for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == trinomial(n, k, 0));
  CHECK_THROWS_AS(binomial(5, 6), std::invalid_argument);
}

TEST_CASE("krawtchouk examples") {
  CHECK(krawtchouk(0, 3.0, 0.4, 7) == 1.0);
  CHECK(krawtchouk(4, 0.0, 0.3, 9) == 1.0);
  // two-term series 1 - x/(pN)
  CHECK(krawtchouk(1, 1.0, 0.5, 2) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(krawtchouk(1, 2.0, 0.25, 4) == doctest::Approx(1.0 - 2.0 / (0.25 * 4)));
  CHECK_THROWS_AS(krawtchouk(5, 1.0, 0.5, 4), std::invalid_argument);
  CHECK_THROWS_AS(krawtchouk(1, 1.0, 0.0, 4), std::invalid_argument);
}

TEST_CASE("krawtchouk self-duality") {
  const int n_max = 12;
  const Real p = 0.37;
  for (int n = 0; n <= n_max; ++n)
    for (int x = 0; x <= n_max; ++x)
      CHECK(krawtchouk(n, static_cast<Real>(x), p, n_max) ==
            doctest::Approx(krawtchouk(x, static_cast<Real>(n), p, n_max))
                .epsilon(1e-11));
}

TEST_CASE("krawtchouk orthogonality under the binomial weight") {
  const int n_max = 10;
  for (Real p : {Real(0.3), Real(0.62)}) {
    for (int m = 0; m <= n_max; ++m)
      for (int n = 0; n <= n_max; ++n) {
        Real sum = 0;
        for (int x = 0; x <= n_max; ++x)
          sum += binomial(n_max, x) * std::pow(p, x) *
                 std::pow(1 - p, n_max - x) *
                 krawtchouk(m, static_cast<Real>(x), p, n_max) *
                 krawtchouk(n, static_cast<Real>(x), p, n_max);
        if (m == n)
          CHECK(sum > 0);
        else
          CHECK(std::abs(sum) <= default_tol(n_max));
      }
  }
}

TEST_CASE("krawtchouk stays polynomial in non-integer x") {
  // degree-n polynomial: finite differences of order n+1 on a unit grid vanish
  const int n = 4, n_max = 9;
  const Real p = 0.41;
  std::vector<Real> vals;
  for (int j = 0; j <= n + 1; ++j)
    vals.push_back(krawtchouk(n, 0.37 + j, p, n_max));
  for (int order = 0; order < n + 1; ++order)
    for (std::size_t j = 0; j + 1 < vals.size(); ++j)
      vals[j] = vals[j + 1] - vals[j];
  CHECK(std::abs(vals[0]) <= 1e-9);
}

TEST_CASE("dual hahn examples") {
  CHECK(dual_hahn(0, 5, 0.3, 0.7, 8) == 1.0);
  CHECK(dual_hahn(3, 0, 0.3, 0.7, 8) == 1.0);
  const Real g = 0.3, d = 0.7;
  CHECK(dual_hahn(1, 1, g, d, 6) ==
        doctest::Approx(1 - (g + d + 2) / ((g + 1) * 6)).epsilon(1e-14));
  CHECK_THROWS_AS(dual_hahn(7, 1, 0.3, 0.7, 6), std::invalid_argument);
}

TEST_CASE("dual hahn orthogonality under the standard weight") {
  const int n_max = 10;
  for (const auto& [g, d] : std::vector<std::pair<Real, Real>>{
           {0.0, 0.0}, {0.3, 0.7}, {-0.5, 0.5}, {1.5, 2.5}}) {
    for (int m = 0; m <= n_max; ++m)
      for (int n = 0; n < m; ++n) {
        Real sum = 0;
        for (int x = 0; x <= n_max; ++x) {
          const Real w = (2 * x + g + d + 1) * pochhammer(g + 1, x) *
                         pochhammer(static_cast<Real>(-n_max), x) *
                         factorial(n_max) /
                         ((x % 2 == 0 ? 1 : -1) *
                          pochhammer(x + g + d + 1, n_max + 1) *
                          pochhammer(d + 1, x) * factorial(x));
          sum += w * dual_hahn(m, x, g, d, n_max) * dual_hahn(n, x, g, d, n_max);
        }
        CHECK(std::abs(sum) <= default_tol(n_max));
      }
  }
}

TEST_CASE("hermite recurrence vs monomial expansion") {
  CHECK(hermite(0, 1.7) == 1.0);
  CHECK(hermite(1, 1.7) == doctest::Approx(3.4));
  CHECK(hermite(4, 0.5) == doctest::Approx(hermite_oracle(4, 0.5)));
  // H4(0.5) = 16/16 - 48/4 + 12 = 1
  CHECK(hermite(4, 0.5) == doctest::Approx(1.0));

  for (int n = 0; n <= 20; ++n)
    for (Real x : {Real(-3), Real(-1.1), Real(0.2), Real(1.9), Real(3)}) {
      const Real ref = hermite_oracle(n, x);
      const Real scale = std::max(std::abs(ref), Real(1));
      CHECK(std::abs(hermite(n, x) - ref) / scale <= 1e-10);
    }
}

TEST_CASE("laguerre recurrence vs terminating series") {
  CHECK(laguerre(0, 0.5, 2.2) == 1.0);
  CHECK(laguerre(1, 0.5, 2.2) == doctest::Approx(1 + 0.5 - 2.2));
  CHECK(laguerre(3, 0.5, 1.25) == doctest::Approx(laguerre_oracle(3, 0.5, 1.25)));
  for (int n = 0; n <= 12; ++n)
    for (Real alpha : {Real(0), Real(0.5), Real(2)})
      for (Real x : {Real(0.1), Real(1.25), Real(4)})
        CHECK(laguerre(n, alpha, x) ==
              doctest::Approx(laguerre_oracle(n, alpha, x)).epsilon(1e-10));
}

TEST_CASE("default tolerance scaling") {
  CHECK(default_tol(0) == doctest::Approx(1e-10));
  CHECK(default_tol(20) == doctest::Approx(1e-9));
  CHECK(default_tol(21) == doctest::Approx(1e-8));
}
