#ifndef KRAWX_OSCREP_HPP
#define KRAWX_OSCREP_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "krawx/cmatrix.hpp"
#include "krawx/real.hpp"
#include "krawx/rotations.hpp"

namespace krawx::oscrep {

// Occupation triple (a, b, c) = (n_x, n_y, n_z) with a + b + c = N.
struct Composition3 {
  int a = 0;
  int b = 0;
  int c = 0;
  int level() const { return a + b + c; }
  bool operator==(const Composition3&) const = default;
};

// Ordered basis of the level-N eigenspace, dimension (N+1)(N+2)/2.
// The ordering is part of the public contract:
//   lexicographic ascending in (a, b), c = N - a - b derived,
//   index(a, b, c) = sum_{a' < a} (N - a' + 1) + b.
class EigenspaceBasis {
public:
  explicit EigenspaceBasis(int level);

  int level() const { return level_; }
  std::size_t size() const { return states_.size(); }
  const Composition3& at(std::size_t idx) const { return states_[idx]; }
  std::size_t index(const Composition3& state) const;
  const std::vector<Composition3>& states() const { return states_; }

private:
  int level_ = 0;
  std::vector<Composition3> states_;
};

inline EigenspaceBasis enumerate_basis(int level) { return EigenspaceBasis(level); }

struct AngularMomentumMatrices {
  ComplexMatrix lx, ly, lz;
};

// L_x, L_y, L_z on the level-N eigenspace, assembled from the ladder-operator
// actions a|n> = sqrt(n)|n-1>, a^dag|n> = sqrt(n+1)|n+1>. Each is Hermitian.
AngularMomentumMatrices angular_momentum_matrices(int level);

enum class Axis { x, y, z };

// exp(i theta L_axis) by Hermitian eigendecomposition of the generator.
ComplexMatrix exp_i_angular(int level, Axis axis, Real theta);

// U(R) = exp(-i gamma Lz) exp(-i beta Ly) exp(-i alpha Lz) on the level-N
// eigenspace, in the EigenspaceBasis ordering.
ComplexMatrix unitary_matrix(int level, const rotations::EulerAngles& angles);

// Single entry <row| U(R) |col> of the above; the brute-force oracle for the
// bivariate polynomials via <i,k,l|U|r,s,t> = W_{ik;N} P_{rs}(i,k;N).
Complex matrix_element_oracle(int level, const rotations::EulerAngles& angles,
                              const Composition3& row, const Composition3& col);

// Eigenvalues of L^2 grouped as (ell, multiplicity), ell descending from N.
// On the level-N space this must be {(N, 2N+1), (N-2, 2N-3), ...}.
std::vector<std::pair<int, int>> casimir_spectrum_check(int level);

} // namespace krawx::oscrep

#endif
