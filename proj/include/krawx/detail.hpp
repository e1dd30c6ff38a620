#ifndef KRAWX_DETAIL_HPP
#define KRAWX_DETAIL_HPP

#include <cmath>
#include <cstdint>

#include "krawx/real.hpp"

namespace krawx::detail {

// Kahan compensated accumulator. All terminating hypergeometric sums in the
// library run through this.
template <class T>
class KahanSum {
public:
  void add(T term) {
    const T y = term - comp_;
    const T t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  T value() const { return sum_; }

private:
  T sum_ = 0;
  T comp_ = 0;
};

// Integer power by repeated multiplication; pow(0, 0) = 1.
template <class T>
T ipow(T base, int exponent) {
  T acc = 1;
  for (int j = 0; j < exponent; ++j) acc *= base;
  return acc;
}

// Double-double value (~106-bit mantissa), Dekker/Knuth error-free
// transformations. The deep terminating series (dual Hahn at N ~ 30 and the
// matching monic recurrence) cancel through ~1e12-sized terms down to
// ~1e-7 results; plain long double cannot carry that and meet the 1e-8
// relative targets.
struct DD {
  double hi = 0;
  double lo = 0;

  DD() = default;
  DD(double h) : hi(h) {}
  DD(double h, double l) : hi(h), lo(l) {}

  static DD two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
  }
  static DD quick_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
  }
  static DD two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
  }

  friend DD operator+(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    const DD t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
  }
  friend DD operator-(DD a, DD b) { return a + DD(-b.hi, -b.lo); }
  friend DD operator*(DD a, DD b) {
    DD p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
  }
  friend DD operator/(DD a, DD b) {
    const double q1 = a.hi / b.hi;
    DD r = a - DD(q1) * b;
    const double q2 = r.hi / b.hi;
    r = r - DD(q2) * b;
    const double q3 = r.hi / b.hi;
    const DD q = quick_two_sum(q1, q2);
    return q + DD(q3);
  }

  double value() const { return hi + lo; }
};

// i^k for integer k (any sign).
inline Complex ipow_i(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

inline int parity_sign(int k) { return (k % 2 == 0) ? 1 : -1; }

} // namespace krawx::detail

#endif
