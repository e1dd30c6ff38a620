#include "krawx/bikraw.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "krawx/detail.hpp"
#include "krawx/errors.hpp"
#include "krawx/oscrep.hpp"
#include "krawx/overlaps.hpp"
#include "krawx/polyfun.hpp"

namespace krawx::bikraw {

namespace {

using detail::ipow;

void require_entry(const RotationMatrix& R, int i, int j, const char* name) {
  if (std::abs(R(i, j)) < kSingularGuard) throw SingularParameterError(name);
}

void check_indices(const BiKrawArgs& a) {
  if (a.r < 0 || a.s < 0 || a.i < 0 || a.k < 0 || a.N < 0 || a.r + a.s > a.N ||
      a.i + a.k > a.N)
    throw std::invalid_argument("bikraw: need r+s <= N and i+k <= N");
}

// Truncated bivariate polynomial in (u, v), dense (N+1)x(N+1) coefficient
// grid; only the total-degree triangle p + q <= N is populated.
class Poly2 {
public:
  explicit Poly2(int max_deg)
      : n_(max_deg),
        c_(static_cast<std::size_t>(max_deg + 1) * (max_deg + 1), 0) {}

  long double& at(int p, int q) {
    return c_[static_cast<std::size_t>(p) * (n_ + 1) + q];
  }
  const long double& at(int p, int q) const {
    return c_[static_cast<std::size_t>(p) * (n_ + 1) + q];
  }

  Poly2 multiply(const Poly2& other) const {
    Poly2 out(n_);
    for (int p = 0; p <= n_; ++p)
      for (int q = 0; p + q <= n_; ++q) {
        const long double a = at(p, q);
        if (a == 0) continue;
        const int rem = n_ - p - q;
        for (int p2 = 0; p2 <= rem; ++p2)
          for (int q2 = 0; p2 + q2 <= rem; ++q2) {
            const long double b = other.at(p2, q2);
            if (b != 0) out.at(p + p2, q + q2) += a * b;
          }
      }
    return out;
  }

private:
  int n_;
  std::vector<long double> c_;
};

} // namespace

AomotoU aomoto_u(const RotationMatrix& R) {
  require_entry(R, 2, 2, "R33");
  require_entry(R, 0, 2, "R13");
  require_entry(R, 1, 2, "R23");
  require_entry(R, 2, 0, "R31");
  require_entry(R, 2, 1, "R32");
  AomotoU u;
  u.u11 = R(0, 0) * R(2, 2) / (R(0, 2) * R(2, 0));
  u.u12 = R(0, 1) * R(2, 2) / (R(0, 2) * R(2, 1));
  u.u21 = R(1, 0) * R(2, 2) / (R(1, 2) * R(2, 0));
  u.u22 = R(1, 1) * R(2, 2) / (R(1, 2) * R(2, 1));
  return u;
}

Real weight(int i, int k, int N, const RotationMatrix& R) {
  if (i < 0 || k < 0 || i + k > N)
    throw std::invalid_argument("weight: need i, k >= 0, i + k <= N");
  require_entry(R, 2, 2, "R33");
  const int l = N - i - k;
  return std::sqrt(polyfun::trinomial(N, i, k)) * ipow(R(0, 2), i) *
         ipow(R(1, 2), k) * ipow(R(2, 2), l);
}

Real p_aomoto(const BiKrawArgs& args) {
  check_indices(args);
  const AomotoU u = aomoto_u(args.R);
  const auto [r, s, i, k, N, R] = args;

  const long double w11 = 1 - static_cast<long double>(u.u11);
  const long double w21 = 1 - static_cast<long double>(u.u21);
  const long double w12 = 1 - static_cast<long double>(u.u12);
  const long double w22 = 1 - static_cast<long double>(u.u22);

  // Vanishing Pochhammers prune the quadruple sum to
  // alpha+beta <= r, gamma+delta <= s, alpha+gamma <= i, beta+delta <= k.
  detail::KahanSum<long double> sum;
  for (int alpha = 0; alpha <= std::min(r, i); ++alpha) {
    const long double pa = ipow(w11, alpha);
    for (int beta = 0; alpha + beta <= r && beta <= k; ++beta) {
      const long double pb = pa * ipow(w21, beta);
      for (int gamma = 0; gamma <= s && alpha + gamma <= i; ++gamma) {
        const long double pg = pb * ipow(w12, gamma);
        for (int delta = 0; gamma + delta <= s && beta + delta <= k; ++delta) {
          const int total = alpha + beta + gamma + delta;
          long double term = pg * ipow(w22, delta);
          term *= polyfun::pochhammer(-r, alpha + beta) *
                  polyfun::pochhammer(-s, gamma + delta) *
                  polyfun::pochhammer(-i, alpha + gamma) *
                  polyfun::pochhammer(-k, beta + delta);
          term /= polyfun::factorial(alpha) * polyfun::factorial(beta) *
                  polyfun::factorial(gamma) * polyfun::factorial(delta) *
                  polyfun::pochhammer(-N, total);
          sum.add(term);
        }
      }
    }
  }

  const long double prefactor =
      std::sqrt(static_cast<long double>(polyfun::trinomial(N, r, s))) *
      ipow(static_cast<long double>(R(2, 0)) / R(2, 2), r) *
      ipow(static_cast<long double>(R(2, 1)) / R(2, 2), s);
  return static_cast<Real>(prefactor * sum.value());
}

RealMatrix p_genfun_table(int i, int k, int N, const RotationMatrix& R) {
  if (i < 0 || k < 0 || i + k > N)
    throw std::invalid_argument("p_genfun_table: need i, k >= 0, i + k <= N");
  require_entry(R, 2, 2, "R33");
  require_entry(R, 0, 2, "R13");
  require_entry(R, 1, 2, "R23");

  // (1 + a u + b v)^n expanded with exact trinomial coefficients.
  const auto trinomial_power = [N](long double a, long double b, int n) {
    Poly2 poly(N);
    for (int p = 0; p <= n; ++p)
      for (int q = 0; p + q <= n; ++q)
        poly.at(p, q) = static_cast<long double>(polyfun::trinomial(n, p, q)) *
                        ipow(a, p) * ipow(b, q);
    return poly;
  };

  const int l = N - i - k;
  const Poly2 product =
      trinomial_power(R(0, 0) / R(0, 2), R(0, 1) / R(0, 2), i)
          .multiply(trinomial_power(R(1, 0) / R(1, 2), R(1, 1) / R(1, 2), k))
          .multiply(trinomial_power(R(2, 0) / R(2, 2), R(2, 1) / R(2, 2), l));

  RealMatrix table(N + 1, N + 1);
  for (int r = 0; r <= N; ++r)
    for (int s = 0; r + s <= N; ++s)
      table(r, s) = static_cast<Real>(
          product.at(r, s) /
          std::sqrt(static_cast<long double>(polyfun::trinomial(N, r, s))));
  return table;
}

Real p_genfun(const BiKrawArgs& args) {
  check_indices(args);
  return p_genfun_table(args.i, args.k, args.N, args.R)(args.r, args.s);
}

Real p_interbasis(int r, int s, int i, int k, int N, const EulerAngles& angles) {
  if (r < 0 || s < 0 || i < 0 || k < 0 || r + s > N || i + k > N)
    throw std::invalid_argument("p_interbasis: need r+s <= N and i+k <= N");
  const RotationMatrix R = rotations::euler_to_rotation(angles);
  const int l = N - i - k;
  if ((i > 0 && std::abs(R(0, 2)) < kSingularGuard) ||
      (k > 0 && std::abs(R(1, 2)) < kSingularGuard) ||
      (l > 0 && std::abs(R(2, 2)) < kSingularGuard))
    throw SingularParameterError("W_{i,k;N}");

  const oscrep::Composition3 cart_ik{i, k, l};
  const oscrep::Composition3 cart_rs{r, s, N - r - s};

  Complex sum = 0;
  for (int ell = N % 2; ell <= N; ell += 2) {
    const int n_r = (N - ell) / 2;
    const ComplexMatrix d = rotations::wigner_block(ell, angles);
    for (int mp = -ell; mp <= ell; ++mp) {
      const Complex bra = overlaps::cartesian_spherical_conj(
          cart_ik, {n_r, ell, mp}); // <C i,k,l | S n_r,ell,m'>
      if (bra == Complex(0)) continue;
      for (int m = -ell; m <= ell; ++m) {
        const Complex ket =
            overlaps::cartesian_spherical(cart_rs, {n_r, ell, m});
        if (ket == Complex(0)) continue;
        sum += d(mp + ell, m + ell) * bra * ket;
      }
    }
  }

  // The contraction reproduces the real matrix element W * P; its imaginary
  // residue is pure rounding and is asserted before the weight division
  // (which can amplify by ~1/W at extreme rotations).
  if (std::abs(sum.imag()) > Real(1e-9))
    throw std::runtime_error("p_interbasis: imaginary residue exceeds 1e-9");
  return sum.real() / weight(i, k, N, R);
}

Real tratnik_k2(int m, int n, int i, int k, const TratnikParams& params, int N) {
  if (m < 0 || n < 0 || i < 0 || k < 0 || m + n > N || i + k > N)
    throw std::invalid_argument("tratnik_k2: need m+n <= N and i+k <= N");
  // (i-N)_n vanishes for n > N-i while the K_n factor stays finite (its
  // series truncates at k <= N-i), so the product is an exact zero.
  if (n > N - i) return 0;
  const Real front = polyfun::pochhammer(static_cast<Real>(n - N), m) *
                     polyfun::pochhammer(static_cast<Real>(i - N), n) /
                     polyfun::pochhammer(static_cast<Real>(-N), m + n);
  return front * polyfun::krawtchouk(m, static_cast<Real>(i), params.p1, N - n) *
         polyfun::krawtchouk(n, static_cast<Real>(k),
                             params.p2 / (1 - params.p1), N - i);
}

Real tratnik_bridge_check(Real theta, Real chi, int N) {
  using oscrep::Axis;
  const ComplexMatrix lhs_u =
      multiply(oscrep::exp_i_angular(N, Axis::x, theta),
               oscrep::exp_i_angular(N, Axis::y, chi));
  const ComplexMatrix rhs_u =
      multiply(oscrep::exp_i_angular(N, Axis::z, theta),
               oscrep::exp_i_angular(N, Axis::y, chi));

  const oscrep::EigenspaceBasis basis(N);
  const EulerAngles euler{0, -chi, -theta}; // U = e^{i theta Lz} e^{i chi Ly}
  const RotationMatrix r_euler = rotations::euler_to_rotation(euler);

  Real worst = 0;
  for (std::size_t row = 0; row < basis.size(); ++row) {
    const auto& ikl = basis.at(row);
    for (std::size_t col = 0; col < basis.size(); ++col) {
      const auto& rst = basis.at(col);
      const Complex lhs = lhs_u(row, col);
      const oscrep::Composition3 flip_row{ikl.c, ikl.b, ikl.a};
      const oscrep::Composition3 flip_col{rst.c, rst.b, rst.a};
      const Complex rhs =
          Real(detail::parity_sign(ikl.c + rst.c)) *
          rhs_u(basis.index(flip_row), basis.index(flip_col));
      worst = std::max(worst, std::abs(lhs - rhs));

      // Same entry through the interbasis decomposition, where the weight
      // is nonsingular (degenerate angles such as theta = chi = 0 leave
      // only the oracle identity to check).
      try {
        const Complex via_formula =
            weight(flip_row.a, flip_row.b, N, r_euler) *
            p_interbasis(flip_col.a, flip_col.b, flip_row.a, flip_row.b, N,
                         euler);
        worst = std::max(
            worst, std::abs(rhs_u(basis.index(flip_row), basis.index(flip_col)) -
                            via_formula));
      } catch (const SingularParameterError&) {
      }
    }
  }
  return worst;
}

Real orthonormality_defect(int N, const RotationMatrix& R) {
  // Stack W * P over variable pairs; orthonormality says the columns over
  // (i,k) are orthonormal across degree pairs (r,s).
  std::vector<std::pair<int, int>> degrees;
  for (int r = 0; r <= N; ++r)
    for (int s = 0; r + s <= N; ++s) degrees.push_back({r, s});

  const std::size_t n_pairs = degrees.size();
  RealMatrix wp(n_pairs, n_pairs); // rows (r,s), cols (i,k)
  for (std::size_t col = 0; col < n_pairs; ++col) {
    const auto [i, k] = degrees[col];
    const Real w = weight(i, k, N, R);
    const RealMatrix table = p_genfun_table(i, k, N, R);
    for (std::size_t row = 0; row < n_pairs; ++row) {
      const auto [r, s] = degrees[row];
      wp(row, col) = w * table(r, s);
    }
  }

  Real worst = 0;
  for (std::size_t a = 0; a < n_pairs; ++a)
    for (std::size_t b = 0; b < n_pairs; ++b) {
      Real dot = 0;
      for (std::size_t c = 0; c < n_pairs; ++c) dot += wp(a, c) * wp(b, c);
      worst = std::max(worst, std::abs(dot - (a == b ? Real(1) : Real(0))));
    }
  return worst;
}

} // namespace krawx::bikraw
