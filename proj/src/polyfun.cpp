#include "krawx/polyfun.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "krawx/detail.hpp"

namespace krawx::polyfun {

namespace {

using u128 = unsigned __int128;

// Pascal triangle up to kMaxExactN, built once. C(64, 32) ~ 1.8e18 fits a
// u64; rows are immutable after the thread-safe static initialization.
const std::vector<std::vector<std::uint64_t>>& pascal_table() {
  static const std::vector<std::vector<std::uint64_t>> table = [] {
    std::vector<std::vector<std::uint64_t>> t(kMaxExactN + 1);
    for (int n = 0; n <= kMaxExactN; ++n) {
      t[n].resize(static_cast<std::size_t>(n) + 1, 1);
      for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
  }();
  return table;
}

Real u128_to_real(u128 v) {
  return static_cast<Real>(static_cast<long double>(v));
}

// Minimal unsigned big integer (little-endian 64-bit limbs); only what the
// exact terminating-sum path below needs.
class BigUint {
public:
  BigUint() : limbs_{0} {}
  explicit BigUint(std::uint64_t v) : limbs_{v} {}

  void mul_small(std::uint64_t m) {
    u128 carry = 0;
    for (auto& limb : limbs_) {
      const u128 cur = static_cast<u128>(limb) * m + carry;
      limb = static_cast<std::uint64_t>(cur);
      carry = cur >> 64;
    }
    if (carry) limbs_.push_back(static_cast<std::uint64_t>(carry));
  }

  static BigUint mul(const BigUint& a, const BigUint& b) {
    BigUint out;
    out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
      u128 carry = 0;
      for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
        const u128 cur = static_cast<u128>(a.limbs_[i]) * b.limbs_[j] +
                         out.limbs_[i + j] + carry;
        out.limbs_[i + j] = static_cast<std::uint64_t>(cur);
        carry = cur >> 64;
      }
      std::size_t k = i + b.limbs_.size();
      while (carry) {
        const u128 cur = static_cast<u128>(out.limbs_[k]) + carry;
        out.limbs_[k] = static_cast<std::uint64_t>(cur);
        carry = cur >> 64;
        ++k;
      }
    }
    out.trim();
    return out;
  }

  // -1, 0, +1 as a < b, a == b, a > b
  static int compare(const BigUint& a, const BigUint& b) {
    if (a.limbs_.size() != b.limbs_.size())
      return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;)
      if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    return 0;
  }

  void add(const BigUint& other) {
    if (other.limbs_.size() > limbs_.size()) limbs_.resize(other.limbs_.size(), 0);
    u128 carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      const u128 cur = static_cast<u128>(limbs_[i]) + carry +
                       (i < other.limbs_.size() ? other.limbs_[i] : 0);
      limbs_[i] = static_cast<std::uint64_t>(cur);
      carry = cur >> 64;
    }
    if (carry) limbs_.push_back(static_cast<std::uint64_t>(carry));
  }

  // requires *this >= other
  void sub(const BigUint& other) {
    std::uint64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      const std::uint64_t rhs = (i < other.limbs_.size() ? other.limbs_[i] : 0);
      const std::uint64_t before = limbs_[i];
      limbs_[i] = before - rhs - borrow;
      borrow = (before < rhs + borrow || (rhs == ~std::uint64_t{0} && borrow)) ? 1 : 0;
    }
    trim();
  }

  bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }

  long double to_long_double() const {
    long double v = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;)
      v = v * 18446744073709551616.0L + static_cast<long double>(limbs_[i]);
    return v;
  }

private:
  void trim() {
    while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
  }

  std::vector<std::uint64_t> limbs_;
};

struct SignedBig {
  int sign = 1;
  BigUint mag;

  void accumulate(int term_sign, const BigUint& term) {
    if (mag.is_zero()) {
      sign = term_sign;
      mag = term;
      return;
    }
    if (term_sign == sign) {
      mag.add(term);
      return;
    }
    const int cmp = BigUint::compare(mag, term);
    if (cmp >= 0) {
      mag.sub(term);
    } else {
      BigUint tmp = term;
      tmp.sub(mag);
      mag = tmp;
      sign = term_sign;
    }
    if (mag.is_zero()) sign = 1;
  }
};

// Exact rational value of the terminating 3F2 behind dual_hahn when
// 4 gamma and 4 delta are integers (g4, d4). Putting every term over the
// common denominator cof_0 keeps the whole computation in integers:
//   term_j = (-1)^j [n!/(n-j)!][x!/(x-j)!] prod_{i<j}(X+4i) * cof_j / cof_0,
//   cof_j = prod_{i=j}^{jmax-1} (G+4i)(N-i)(i+1),
// with X = 4(x+1) + g4 + d4 and G = g4 + 4.
long double dual_hahn_exact_dyadic(int n, int x, int g4, int d4, int N) {
  const int jmax = std::min(n, x);
  const std::int64_t big_x = 4 * (static_cast<std::int64_t>(x) + 1) + g4 + d4;
  const std::int64_t big_g = g4 + 4;

  std::vector<BigUint> cof(static_cast<std::size_t>(jmax) + 1, BigUint(1));
  for (int j = jmax - 1; j >= 0; --j) {
    cof[j] = cof[j + 1];
    cof[j].mul_small(static_cast<std::uint64_t>(big_g + 4 * j));
    cof[j].mul_small(static_cast<std::uint64_t>(N - j));
    cof[j].mul_small(static_cast<std::uint64_t>(j + 1));
  }

  SignedBig acc;
  BigUint rising(1);
  for (int j = 0; j <= jmax; ++j) {
    acc.accumulate(j % 2 == 0 ? 1 : -1, BigUint::mul(rising, cof[j]));
    if (j < jmax) {
      rising.mul_small(static_cast<std::uint64_t>(n - j));
      rising.mul_small(static_cast<std::uint64_t>(x - j));
      rising.mul_small(static_cast<std::uint64_t>(big_x + 4 * j));
    }
  }
  if (acc.mag.is_zero()) return 0;
  return acc.sign * acc.mag.to_long_double() / cof[0].to_long_double();
}

bool dyadic_quarter(Real v, int* quarters) {
  const Real scaled = 4 * v;
  const Real rounded = std::round(scaled);
  if (std::abs(scaled - rounded) > Real(1e-9)) return false;
  *quarters = static_cast<int>(rounded);
  return true;
}

} // namespace

Real pochhammer(Real a, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer: n must be nonnegative");
  long double acc = 1;
  for (int j = 0; j < n; ++j) acc *= static_cast<long double>(a) + j;
  return static_cast<Real>(acc);
}

Real binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw std::invalid_argument("binomial: need 0 <= k <= n");
  if (n > kMaxExactN)
    throw std::invalid_argument("binomial: n exceeds exact-arithmetic range");
  return static_cast<Real>(pascal_table()[n][k]);
}

Real trinomial(const TrinomialArgs& args) {
  const auto [N, i, k] = args;
  if (N < 0 || i < 0 || k < 0 || i + k > N)
    throw std::invalid_argument("trinomial: need i, k >= 0 and i + k <= N");
  if (N > kMaxExactN)
    throw std::invalid_argument("trinomial: N exceeds exact-arithmetic range");
  // N!/(i! k! (N-i-k)!) = C(N, i) * C(N-i, k); the product needs 128 bits.
  const u128 value = static_cast<u128>(pascal_table()[N][i]) *
                     static_cast<u128>(pascal_table()[N - i][k]);
  return u128_to_real(value);
}

Real factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: n must be nonnegative");
  if (n <= 34) { // 34! < 2^128
    u128 acc = 1;
    for (int j = 2; j <= n; ++j) acc *= static_cast<u128>(j);
    return u128_to_real(acc);
  }
  long double acc = 1;
  for (int j = 2; j <= n; ++j) acc *= j;
  return static_cast<Real>(acc);
}

Real krawtchouk(int n, Real x, Real p, int N) {
  if (n < 0 || N < 0 || n > N)
    throw std::invalid_argument("krawtchouk: need 0 <= n <= N");
  if (p == Real(0)) throw std::invalid_argument("krawtchouk: p must be nonzero");

  int jmax = n;
  if (x >= 0 && x == std::floor(x))
    jmax = std::min<int>(n, static_cast<int>(x));

  const long double z = 1 / static_cast<long double>(p);
  detail::KahanSum<long double> sum;
  long double term = 1;
  sum.add(term);
  for (int j = 0; j < jmax; ++j) {
    term *= (j - static_cast<long double>(n)) * (j - static_cast<long double>(x));
    term /= (j - static_cast<long double>(N)) * (j + 1.0L);
    term *= z;
    sum.add(term);
  }
  return static_cast<Real>(sum.value());
}

Real dual_hahn(int n, int x, Real gamma, Real delta, int N) {
  if (n < 0 || x < 0 || N < 0 || n > N || x > N)
    throw std::invalid_argument("dual_hahn: need 0 <= n, x <= N");
  if (!(gamma > Real(-1)))
    throw std::invalid_argument("dual_hahn: need gamma > -1");

  // Double-double pass: the alternating terms can exceed the sum by
  // ~14 orders of magnitude at N ~ 30.
  using detail::DD;
  const int jmax = std::min(n, x);
  const double g = static_cast<double>(gamma), d = static_cast<double>(delta);
  DD sum(1);
  DD term(1);
  double peak = 1;
  for (int j = 0; j < jmax; ++j) {
    term = term * (DD(j - static_cast<double>(n)) * DD(j - static_cast<double>(x)) *
                   (DD(x + 1.0 + j) + DD(g) + DD(d)));
    term = term / (DD(g + 1 + j) * DD(j - static_cast<double>(N)) * DD(j + 1.0));
    sum = sum + term;
    peak = std::max(peak, std::abs(term.value()));
  }

  // Cancellation beyond ~10 orders erodes even the double-double digits;
  // for dyadic parameters above -1 (the su(1,1) use) the sum is redone
  // exactly.
  int g4 = 0, d4 = 0;
  if (std::abs(sum.value()) < 1e-10 * peak && dyadic_quarter(gamma, &g4) &&
      dyadic_quarter(delta, &d4) && g4 > -4 && d4 > -4)
    return static_cast<Real>(dual_hahn_exact_dyadic(n, x, g4, d4, N));

  return static_cast<Real>(sum.value());
}

Real hermite(int n, Real x) {
  if (n < 0) throw std::invalid_argument("hermite: n must be nonnegative");
  long double hm1 = 0, h = 1;
  for (int j = 0; j < n; ++j) {
    const long double next = 2 * static_cast<long double>(x) * h - 2.0L * j * hm1;
    hm1 = h;
    h = next;
  }
  return static_cast<Real>(h);
}

Real laguerre(int n, Real alpha, Real x) {
  if (n < 0) throw std::invalid_argument("laguerre: n must be nonnegative");
  const long double a = alpha, xx = x;
  long double lm1 = 0, l = 1;
  for (int j = 0; j < n; ++j) {
    // (j+1) L_{j+1} = (2j + 1 + alpha - x) L_j - (j + alpha) L_{j-1}
    const long double next = ((2 * j + 1 + a - xx) * l - (j + a) * lm1) / (j + 1);
    lm1 = l;
    l = next;
  }
  return static_cast<Real>(l);
}

Real default_tol(int N) {
  const int scale = static_cast<int>(std::ceil(N / 20.0));
  return Real(1e-10) * detail::ipow(Real(10), scale);
}

} // namespace krawx::polyfun
