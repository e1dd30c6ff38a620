#include "krawx/validate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "krawx/bikraw.hpp"
#include "krawx/cmatrix.hpp"
#include "krawx/detail.hpp"
#include "krawx/oracles.hpp"
#include "krawx/oscrep.hpp"
#include "krawx/overlaps.hpp"
#include "krawx/polyfun.hpp"
#include "krawx/rotations.hpp"
#include "krawx/su11cg.hpp"

namespace krawx::validate {

namespace {

using rotations::EulerAngles;
using rotations::RotationMatrix;

constexpr Real kPi = std::numbers::pi_v<Real>;

class Collector {
public:
  explicit Collector(std::string suite, Real tol)
      : start_(std::chrono::steady_clock::now()) {
    report_.suite = std::move(suite);
    report_.tolerance = tol;
  }

  void add(std::string label, Real defect) { add(std::move(label), defect, defect); }

  void add(std::string label, Real defect, Real value) {
    report_.max_defect = std::max(report_.max_defect, defect);
    report_.records.push_back({std::move(label), defect, value});
  }

  Report finish() {
    report_.pass = report_.max_defect <= report_.tolerance;
    report_.seconds = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start_)
                          .count();
    return std::move(report_);
  }

private:
  Report report_;
  std::chrono::steady_clock::time_point start_;
};

std::string label(std::initializer_list<std::pair<const char*, Real>> parts) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, value] : parts) {
    if (!first) os << ' ';
    first = false;
    os << key << '=' << value;
  }
  return os.str();
}

// Relative difference with an absolute floor; values both routes place at or
// below the floor count as agreeing on zero (structural zeros of the
// polynomials land there).
Real rel_diff(Real a, Real b, Real floor_scale = Real(1e-12)) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), floor_scale});
}

} // namespace

std::vector<std::array<Real, 3>> sample_angles(std::uint64_t seed, int count,
                                               Real min_entry) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<Real> full(0, 2 * kPi);
  std::uniform_real_distribution<Real> half(0, kPi);

  std::vector<std::array<Real, 3>> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    const std::array<Real, 3> angles{full(rng), half(rng), full(rng)};
    if (min_entry > 0) {
      const RotationMatrix r =
          rotations::euler_to_rotation({angles[0], angles[1], angles[2]});
      Real smallest = 1;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          smallest = std::min(smallest, std::abs(r(i, j)));
      if (smallest < min_entry) continue;
    }
    out.push_back(angles);
  }
  return out;
}

Report cg_orthonormality(const Config& cfg) {
  Collector out("cg-orthonormality", cfg.tol);
  const std::vector<Real> nus{0.25, 0.75, 1.0, 1.5, 2.5};
  for (Real nu1 : nus)
    for (Real nu2 : nus)
      for (int n = 0; n <= cfg.n_max; ++n) {
        const RealMatrix block = su11cg::cg_block(nu1, nu2, n);
        // rows: sum over x of C C' = delta_{n1 n1'}; columns: the dual.
        const Real row_defect = orthogonality_defect(block);
        const Real col_defect = orthogonality_defect(transpose(block));
        out.add(label({{"nu1", nu1}, {"nu2", nu2}, {"N", Real(n)}}),
                std::max(row_defect, col_defect));
      }
  return out.finish();
}

Report cg_explicit_vs_recurrence(const Config& cfg) {
  Collector out("cg-explicit-vs-recurrence", cfg.tol);
  std::vector<Real> nus{0.25, 0.75};
  for (int m = 0; m <= 6; ++m) nus.push_back(Real(1 + m) / 2);

  for (Real nu1 : nus)
    for (Real nu2 : {Real(0.25), Real(0.75), Real(1.5)})
      for (int n = 0; n <= cfg.n_max; n += std::max(1, cfg.n_max / 6)) {
        // Monic recurrence values against monic-normalized dual Hahn; the
        // zero floor scales with the column since monic values are huge.
        Real worst = 0, worst_value = 0;
        for (int x = 0; x <= n; ++x) {
          const auto monic = su11cg::cg_recurrence_row(nu1, nu2, n, x);
          std::vector<Real> expected(monic.size());
          Real column_scale = 0;
          for (int j = 0; j <= n; ++j) {
            expected[j] = polyfun::pochhammer(2 * nu1, j) *
                          polyfun::pochhammer(static_cast<Real>(-n), j) *
                          polyfun::dual_hahn(j, x, 2 * nu1 - 1, 2 * nu2 - 1, n);
            column_scale = std::max({column_scale, std::abs(monic[j]),
                                     std::abs(expected[j])});
          }
          for (int j = 0; j <= n; ++j) {
            const Real d = rel_diff(monic[j], expected[j],
                                    Real(1e-12) * column_scale);
            if (d > worst) {
              worst = d;
              worst_value = expected[j];
            }
          }
        }
        out.add("monic " + label({{"nu1", nu1}, {"nu2", nu2}, {"N", Real(n)}}),
                worst, worst_value);

        // Full coefficients: explicit formula against the normalized
        // recurrence construction.
        const RealMatrix explicit_block = su11cg::cg_block(nu1, nu2, n);
        const RealMatrix recurrence_block = su11cg::cg_block_recurrence(nu1, nu2, n);
        Real worst_block = 0, worst_block_value = 0;
        for (int a = 0; a <= n; ++a)
          for (int b = 0; b <= n; ++b) {
            const Real d = rel_diff(explicit_block(a, b), recurrence_block(a, b));
            if (d > worst_block) {
              worst_block = d;
              worst_block_value = explicit_block(a, b);
            }
          }
        out.add("block " + label({{"nu1", nu1}, {"nu2", nu2}, {"N", Real(n)}}),
                worst_block, worst_block_value);
      }
  return out.finish();
}

Report wigner_checks(const Config& cfg) {
  Collector out("wigner", cfg.tol);
  const int ell_max = std::max(1, cfg.n_max);
  const auto angle_set = sample_angles(cfg.seed, 20, 0);

  for (const auto& a : angle_set) {
    const EulerAngles angles{a[0], a[1], a[2]};
    Real worst = 0;
    for (int ell = 0; ell <= ell_max; ++ell)
      worst = std::max(worst,
                       unitarity_defect(rotations::wigner_block(ell, angles)));
    out.add(label({{"unitarity-beta", angles.beta}}), worst);

    // l = 1 block conjugated to the Cartesian vector representation.
    const ComplexMatrix t = rotations::l1_basis_change();
    const ComplexMatrix cart =
        multiply(t, multiply(rotations::wigner_block(1, angles), adjoint(t)));
    const RotationMatrix r = rotations::euler_to_rotation(angles);
    Real conj_defect = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        conj_defect = std::max(conj_defect,
                               static_cast<Real>(std::abs(cart(i, j) - Complex(r(i, j)))));
    out.add(label({{"l1-conjugation-beta", angles.beta}}), conj_defect);
  }

  // d-symmetry and composition in beta.
  for (Real beta : {Real(0.3), Real(1.1), Real(2.5)}) {
    Real worst = 0;
    for (int ell = 0; ell <= std::min(6, ell_max); ++ell)
      for (int mp = -ell; mp <= ell; ++mp)
        for (int m = -ell; m <= ell; ++m) {
          const Complex lhs = rotations::wigner_d({ell, mp, m}, {0, beta, 0});
          const Complex rhs = Real(detail::parity_sign(m - mp)) *
                              rotations::wigner_d({ell, m, mp}, {0, beta, 0});
          worst = std::max(worst, static_cast<Real>(std::abs(lhs - rhs)));
        }
    out.add(label({{"symmetry-beta", beta}}), worst);
  }
  for (int ell = 1; ell <= std::min(6, ell_max); ++ell) {
    const Real b1 = 0.4, b2 = 0.9;
    const ComplexMatrix lhs =
        multiply(rotations::wigner_block(ell, {0, b1, 0}),
                 rotations::wigner_block(ell, {0, b2, 0}));
    const ComplexMatrix rhs = rotations::wigner_block(ell, {0, b1 + b2, 0});
    out.add(label({{"composition-ell", Real(ell)}}), max_abs_diff(lhs, rhs));
  }
  return out.finish();
}

Report oscrep_checks(const Config& cfg) {
  Collector out("oscrep", cfg.tol);
  for (int n = 0; n <= cfg.n_max; ++n) {
    const auto gen = oscrep::angular_momentum_matrices(n);

    const auto commutator_defect = [](const ComplexMatrix& a,
                                      const ComplexMatrix& b,
                                      const ComplexMatrix& c) {
      ComplexMatrix lhs = multiply(a, b);
      const ComplexMatrix ba = multiply(b, a);
      for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t j = 0; j < lhs.cols(); ++j)
          lhs(i, j) -= ba(i, j) + Complex(0, 1) * c(i, j);
      Real worst = 0;
      for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t j = 0; j < lhs.cols(); ++j)
          worst = std::max(worst, static_cast<Real>(std::abs(lhs(i, j))));
      return worst;
    };
    const Real comm = std::max({commutator_defect(gen.lx, gen.ly, gen.lz),
                                commutator_defect(gen.ly, gen.lz, gen.lx),
                                commutator_defect(gen.lz, gen.lx, gen.ly)});
    out.add(label({{"commutators-N", Real(n)}}), comm);

    // Casimir content: every (2l+1)-dimensional block once, l = N, N-2, ...
    const auto content = oscrep::casimir_spectrum_check(n);
    Real casimir_defect = 0;
    for (const auto& [ell, count] : content)
      if (count != 2 * ell + 1) casimir_defect = 1;
    out.add(label({{"casimir-N", Real(n)}}), casimir_defect);
  }

  const auto angle_set = sample_angles(cfg.seed + 1, 3, 0);
  for (int n = 0; n <= cfg.n_max; ++n)
    for (const auto& a : angle_set) {
      const Real defect = unitarity_defect(
          oscrep::unitary_matrix(n, {a[0], a[1], a[2]}));
      out.add(label({{"unitary-N", Real(n)}, {"beta", a[1]}}), defect);
    }
  return out.finish();
}

Report cross_route(const Config& cfg) {
  Collector out("cross-route", cfg.tol);
  const auto angle_set = sample_angles(cfg.seed, 5, 0.05);

  for (const auto& a : angle_set) {
    const EulerAngles angles{a[0], a[1], a[2]};
    const RotationMatrix r = rotations::euler_to_rotation(angles);
    for (int n = 0; n <= cfg.n_max; ++n) {
      const ComplexMatrix u = oscrep::unitary_matrix(n, angles);
      const oscrep::EigenspaceBasis basis(n);

      struct RouteWorst {
        Real defect = 0;
        Real value = 0;
        void consider(Real d, Real v) {
          if (d > defect) {
            defect = d;
            value = v;
          }
        }
      };
      RouteWorst aomoto_genfun, interbasis, oracle_route, quadrature;

      for (int i = 0; i <= n; ++i)
        for (int k = 0; i + k <= n; ++k) {
          const RealMatrix table = bikraw::p_genfun_table(i, k, n, r);
          const Real w = bikraw::weight(i, k, n, r);
          for (int rr = 0; rr <= n; ++rr)
            for (int ss = 0; rr + ss <= n; ++ss) {
              const bikraw::BiKrawArgs args{rr, ss, i, k, n, r};
              const Real genfun = table(rr, ss);
              const Real aomoto = bikraw::p_aomoto(args);
              const Real inter = bikraw::p_interbasis(rr, ss, i, k, n, angles);
              const Complex entry =
                  u(basis.index({i, k, n - i - k}),
                    basis.index({rr, ss, n - rr - ss}));
              const Real oracle = entry.real() / w;

              aomoto_genfun.consider(std::abs(aomoto - genfun), genfun);
              interbasis.consider(std::abs(inter - genfun), genfun);
              oracle_route.consider(std::abs(oracle - genfun), genfun);
              quadrature.consider(std::abs(oracles::p_quadrature(args) - genfun),
                                  genfun);
            }
        }

      out.add(label({{"aomoto-genfun-N", Real(n)}, {"beta", angles.beta}}),
              aomoto_genfun.defect, aomoto_genfun.value);
      out.add(label({{"interbasis-N", Real(n)}, {"beta", angles.beta}}),
              interbasis.defect, interbasis.value);
      out.add(label({{"oracle-N", Real(n)}, {"beta", angles.beta}}),
              oracle_route.defect, oracle_route.value);
      out.add(label({{"quadrature-N", Real(n)}, {"beta", angles.beta}}),
              quadrature.defect, quadrature.value);
    }
  }
  return out.finish();
}

Report trinomial_orthonormality(const Config& cfg) {
  Collector out("trinomial-orthonormality", cfg.tol);
  const auto angle_set = sample_angles(cfg.seed + 2, 3, 0.05);
  for (const auto& a : angle_set) {
    const RotationMatrix r = rotations::euler_to_rotation({a[0], a[1], a[2]});
    for (int n = 0; n <= cfg.n_max; ++n)
      out.add(label({{"N", Real(n)}, {"beta", a[1]}}),
              bikraw::orthonormality_defect(n, r));
  }
  return out.finish();
}

Report tratnik_checks(const Config& cfg) {
  Collector out("tratnik", cfg.tol);
  const std::vector<Real> grid{0.5, 0.9, 1.7};

  // Explicit product formula against the oracle factorization.
  for (Real theta : grid)
    for (Real chi : grid)
      for (int n = 0; n <= cfg.n_max; ++n) {
        const ComplexMatrix u =
            multiply(oscrep::exp_i_angular(n, oscrep::Axis::x, theta),
                     oscrep::exp_i_angular(n, oscrep::Axis::y, chi));
        // R = vector representation of the same operator.
        const ComplexMatrix u1 =
            multiply(oscrep::exp_i_angular(1, oscrep::Axis::x, theta),
                     oscrep::exp_i_angular(1, oscrep::Axis::y, chi));
        const oscrep::EigenspaceBasis b1(1);
        RotationMatrix r;
        const oscrep::Composition3 unit[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            r(i, j) = u1(b1.index(unit[i]), b1.index(unit[j])).real();

        const bikraw::TratnikParams params{r(0, 2) * r(0, 2), r(1, 2) * r(1, 2)};
        const RotationMatrix rt = rotations::transposed(r);

        const oscrep::EigenspaceBasis basis(n);
        Real worst = 0;
        for (std::size_t row = 0; row < basis.size(); ++row)
          for (std::size_t col = 0; col < basis.size(); ++col) {
            const auto& ikl = basis.at(row);
            const auto& rst = basis.at(col);
            const Real rhs = bikraw::weight(ikl.a, ikl.b, n, r) *
                             bikraw::weight(rst.a, rst.b, n, rt) *
                             bikraw::tratnik_k2(rst.a, rst.b, ikl.a, ikl.b,
                                                params, n) /
                             detail::ipow(r(2, 2), n);
            worst = std::max(worst,
                             static_cast<Real>(std::abs(u(row, col) - rhs)));
          }
        out.add(label({{"product-theta", theta}, {"chi", chi}, {"N", Real(n)}}),
                worst);

        out.add(label({{"bridge-theta", theta}, {"chi", chi}, {"N", Real(n)}}),
                bikraw::tratnik_bridge_check(theta, chi, n));
      }

  // pi/2 rotation identities, exact Kronecker structure.
  for (int n = 0; n <= cfg.n_max; ++n) {
    const ComplexMatrix plus = oscrep::exp_i_angular(n, oscrep::Axis::y, kPi / 2);
    const ComplexMatrix minus =
        oscrep::exp_i_angular(n, oscrep::Axis::y, -kPi / 2);
    const oscrep::EigenspaceBasis basis(n);
    Real worst = 0;
    for (std::size_t row = 0; row < basis.size(); ++row)
      for (std::size_t col = 0; col < basis.size(); ++col) {
        const auto& out_state = basis.at(row);
        const auto& in_state = basis.at(col);
        // <a',b',c'| e^{+i pi/2 Ly} |r,s,t> = (-1)^t delta_{a' t} delta_{b' s}
        const Real expect_plus = (out_state.a == in_state.c &&
                                  out_state.b == in_state.b)
                                     ? Real(detail::parity_sign(in_state.c))
                                     : Real(0);
        // <i,k,l| e^{-i pi/2 Ly} |a,b,c> = (-1)^l delta_{i c} delta_{k b}
        const Real expect_minus = (out_state.c == in_state.a &&
                                   out_state.b == in_state.b)
                                      ? Real(detail::parity_sign(
                                            n - out_state.a - out_state.b))
                                      : Real(0);
        worst = std::max(worst, static_cast<Real>(std::abs(
                                    plus(row, col) - expect_plus)));
        worst = std::max(worst, static_cast<Real>(std::abs(
                                    minus(row, col) - expect_minus)));
      }
    out.add(label({{"halfpi-N", Real(n)}}), worst);
  }
  return out.finish();
}

Report overlap_checks(const Config& cfg) {
  Collector out("overlaps", cfg.tol);
  for (int n = 0; n <= cfg.n_max; ++n) {
    const ComplexMatrix cp =
        overlaps::overlap_matrix(n, overlaps::OverlapKind::cart_polar);
    const ComplexMatrix ps =
        overlaps::overlap_matrix(n, overlaps::OverlapKind::polar_spher);
    const ComplexMatrix cs =
        overlaps::overlap_matrix(n, overlaps::OverlapKind::cart_spher);
    out.add(label({{"unitarity-cart-polar-N", Real(n)}}), unitarity_defect(cp));
    out.add(label({{"unitarity-polar-spher-N", Real(n)}}), unitarity_defect(ps));
    out.add(label({{"unitarity-cart-spher-N", Real(n)}}), unitarity_defect(cs));
    out.add(label({{"composition-N", Real(n)}}),
            max_abs_diff(cs, multiply(cp, ps)));
  }
  return out.finish();
}

Report wavefunction_reconstruction(const Config& cfg) {
  Collector out("wavefunction", cfg.tol);
  std::mt19937_64 rng(cfg.seed + 3);
  std::uniform_real_distribution<Real> coord(-1.5, 1.5);

  std::vector<oracles::Point3> points;
  for (int p = 0; p < 20; ++p) points.push_back({coord(rng), coord(rng), coord(rng)});

  for (int n = 0; n <= cfg.n_max; ++n) {
    const oscrep::EigenspaceBasis basis(n);
    for (const auto& pol : overlaps::polar_basis(n)) {
      Real worst = 0, worst_value = 0;
      for (const auto& pt : points) {
        Complex sum = 0;
        for (const auto& cart : basis.states()) {
          const Complex coeff = overlaps::cartesian_polar(cart, pol);
          if (coeff != Complex(0)) sum += coeff * oracles::psi_cartesian(cart, pt);
        }
        const Complex direct = oracles::psi_polar(pol, pt);
        const Real denom = std::max(static_cast<Real>(std::abs(direct)), Real(1e-6));
        const Real d = static_cast<Real>(std::abs(sum - direct)) / denom;
        if (d > worst) {
          worst = d;
          worst_value = static_cast<Real>(std::abs(direct));
        }
      }
      out.add(label({{"N", Real(n)},
                     {"n_rho", Real(pol.n_rho)},
                     {"m", Real(pol.m)},
                     {"n_z", Real(pol.n_z)}}),
              worst, worst_value);
    }
  }
  return out.finish();
}

Report polyfun_orthogonality(const Config& cfg) {
  Collector out("polyfun-orthogonality", cfg.tol);
  const int n_max = std::min(cfg.n_max, 12);

  for (Real p : {Real(0.3), Real(0.5), Real(0.7)}) {
    Real worst = 0;
    for (int m = 0; m <= n_max; ++m)
      for (int n = 0; n <= n_max; ++n) {
        Real sum = 0;
        for (int x = 0; x <= n_max; ++x) {
          const Real w = polyfun::binomial(n_max, x) * std::pow(p, x) *
                         std::pow(1 - p, n_max - x);
          sum += w * polyfun::krawtchouk(m, Real(x), p, n_max) *
                 polyfun::krawtchouk(n, Real(x), p, n_max);
        }
        if (m == n) {
          if (!(sum > 0)) worst = std::max(worst, Real(1)); // diagonal must be positive
        } else {
          worst = std::max(worst, std::abs(sum));
        }
      }
    out.add(label({{"krawtchouk-p", p}}), worst);
  }

  for (const auto& [gamma, delta] :
       std::vector<std::pair<Real, Real>>{{0, 0}, {0.3, 0.7}, {-0.5, 0.5}, {1.5, 2.5}}) {
    Real worst = 0;
    for (int m = 0; m <= n_max; ++m)
      for (int n = 0; n < m; ++n) {
        Real sum = 0;
        for (int x = 0; x <= n_max; ++x) {
          // standard dual Hahn weight on x = 0..N
          const Real w =
              (2 * x + gamma + delta + 1) * polyfun::pochhammer(gamma + 1, x) *
              polyfun::pochhammer(static_cast<Real>(-n_max), x) *
              polyfun::factorial(n_max) /
              (detail::parity_sign(x) *
               polyfun::pochhammer(x + gamma + delta + 1, n_max + 1) *
               polyfun::pochhammer(delta + 1, x) * polyfun::factorial(x));
          sum += w * polyfun::dual_hahn(m, x, gamma, delta, n_max) *
                 polyfun::dual_hahn(n, x, gamma, delta, n_max);
        }
        worst = std::max(worst, std::abs(sum));
      }
    out.add(label({{"dual-hahn-gamma", gamma}, {"delta", delta}}), worst);
  }
  return out.finish();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "orthogonality", "unitarity", "cross-route", "tratnik",
      "cg",            "wigner",    "wavefunction", "casimir"};
  return names;
}

namespace {

Report merge(std::string name, std::initializer_list<Report> parts) {
  Report out;
  out.suite = std::move(name);
  out.pass = true;
  for (const Report& part : parts) {
    out.tolerance = part.tolerance;
    out.max_defect = std::max(out.max_defect, part.max_defect);
    out.pass = out.pass && part.pass;
    out.seconds += part.seconds;
    for (const auto& rec : part.records)
      out.records.push_back({part.suite + ": " + rec.label, rec.defect, rec.value});
  }
  return out;
}

} // namespace

Report run_suite(std::string_view name, const Config& cfg) {
  if (name == "orthogonality")
    return merge("orthogonality",
                 {polyfun_orthogonality(cfg), trinomial_orthonormality(cfg)});
  if (name == "unitarity")
    return merge("unitarity", {overlap_checks(cfg), oscrep_checks(cfg)});
  if (name == "cross-route") return cross_route(cfg);
  if (name == "tratnik") return tratnik_checks(cfg);
  if (name == "cg")
    return merge("cg", {cg_orthonormality(cfg), cg_explicit_vs_recurrence(cfg)});
  if (name == "wigner") return wigner_checks(cfg);
  if (name == "wavefunction") return wavefunction_reconstruction(cfg);
  if (name == "casimir") return oscrep_checks(cfg);
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

// Timing deliberately stays out of the serialized report: identical seed and
// configuration must produce byte-identical files.
std::string to_json(const Report& report) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["suite"] = report.suite;
  j["cases"] = report.cases();
  j["tolerance"] = report.tolerance;
  j["max_defect"] = report.max_defect;
  j["pass"] = report.pass;
  auto& records = j["records"] = nlohmann::json::array();
  for (const auto& rec : report.records)
    records.push_back(
        {{"label", rec.label}, {"value", rec.value}, {"defect", rec.defect}});
  return j.dump(2) + "\n";
}

std::string to_csv(const Report& report) {
  std::ostringstream os;
  os.precision(17);
  os << "record,label,value,defect\n";
  for (const auto& rec : report.records)
    os << "case," << rec.label << ',' << rec.value << ',' << rec.defect << '\n';
  os << "summary," << report.suite << ",," << report.max_defect << '\n';
  os << "pass," << report.suite << ",," << (report.pass ? 1 : 0) << '\n';
  return os.str();
}

} // namespace krawx::validate
