#ifndef KRAWX_VALIDATE_HPP
#define KRAWX_VALIDATE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "krawx/real.hpp"

namespace krawx::validate {

struct Config {
  int n_max = 6;
  Real tol = 1e-8;
  std::uint64_t seed = 12345;
};

// One checked case: for route comparisons `value` is the reference value at
// the worst point, for identity checks it is the measured residual itself.
struct CaseRecord {
  std::string label;
  Real defect = 0;
  Real value = 0;
};

struct Report {
  std::string suite;
  Real tolerance = 0;
  Real max_defect = 0;
  bool pass = false;
  double seconds = 0;
  std::vector<CaseRecord> records;

  std::size_t cases() const { return records.size(); }
};

// Fine-grained checks. Each runs every case, records per-case defects and
// sets pass = (max_defect <= tol).
Report cg_orthonormality(const Config& cfg);        // both CG orthonormality relations
Report cg_explicit_vs_recurrence(const Config& cfg);
Report wigner_checks(const Config& cfg);            // unitarity, symmetry, l=1 conjugation
Report oscrep_checks(const Config& cfg);            // commutators, Casimir content, U unitarity
Report cross_route(const Config& cfg);              // aomoto = genfun = interbasis = oracle = quadrature
Report trinomial_orthonormality(const Config& cfg);
Report tratnik_checks(const Config& cfg);           // product formula, conjugation bridge, pi/2 identities
Report overlap_checks(const Config& cfg);           // unitarity and composition of the overlap families
Report wavefunction_reconstruction(const Config& cfg);
Report polyfun_orthogonality(const Config& cfg);    // classical discrete orthogonality

// Named suites exposed by the CLI; some merge several checks.
// Names: orthogonality, unitarity, cross-route, tratnik, cg, wigner,
// wavefunction, casimir.
Report run_suite(std::string_view name, const Config& cfg);
const std::vector<std::string>& suite_names();

std::string to_json(const Report& report);
std::string to_csv(const Report& report);

// Deterministic Euler-angle sampler; when min_entry > 0, every entry of the
// resulting rotation matrix is bounded away from zero by it. Shared by
// suites and tests.
std::vector<std::array<Real, 3>> sample_angles(std::uint64_t seed, int count,
                                               Real min_entry);

} // namespace krawx::validate

#endif
