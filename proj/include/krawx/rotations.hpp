#ifndef KRAWX_ROTATIONS_HPP
#define KRAWX_ROTATIONS_HPP

#include <array>

#include "krawx/cmatrix.hpp"
#include "krawx/real.hpp"

namespace krawx::rotations {

// Euler angles in radians for the z-y-z convention realized by
// U(R) = exp(-i gamma Lz) exp(-i beta Ly) exp(-i alpha Lz).
struct EulerAngles {
  Real alpha = 0;
  Real beta = 0;
  Real gamma = 0;
};

// Proper 3x3 rotation matrix; zero-based entry access, R(0,2) is R_13.
class RotationMatrix {
public:
  RotationMatrix() = default;
  explicit RotationMatrix(const std::array<std::array<Real, 3>, 3>& e) : e_(e) {}

  Real operator()(int i, int j) const { return e_[i][j]; }
  Real& operator()(int i, int j) { return e_[i][j]; }

  Real orthogonality_defect() const; // max |R^T R - I|
  Real det() const;

private:
  std::array<std::array<Real, 3>, 3> e_{};
};

// Rotation matrix of the z-y-z Euler angles: R = Rz(gamma) Ry(beta) Rz(alpha),
// i.e. the vector (N = 1) representation of U(R) above.
RotationMatrix euler_to_rotation(const EulerAngles& angles);

RotationMatrix transposed(const RotationMatrix& r);

struct WignerIndex {
  int ell = 0;
  int m_prime = 0; // bra projection (row)
  int m = 0;       // ket projection (column)
};

// Wigner D-matrix element D^ell_{m' m}(alpha, beta, gamma) =
// <ell m'| U(R) |ell m> in the standard angular-momentum basis,
// evaluated through the Krawtchouk-polynomial form of the little-d matrix.
Complex wigner_d(const WignerIndex& idx, const EulerAngles& angles);

// Full (2 ell + 1)-dimensional block; row index m' + ell, column m + ell.
ComplexMatrix wigner_block(int ell, const EulerAngles& angles);

// Unitary change of basis from the ell = 1 spherical basis (m = -1, 0, +1)
// to the Cartesian basis (x, y, z), Condon-Shortley phases:
// |1,+1> = -(|x> + i|y>)/sqrt(2), |1,0> = |z>, |1,-1> = (|x> - i|y>)/sqrt(2).
// Columns are the spherical kets in Cartesian components, so
// euler_to_rotation = T . wigner_block(1) . T^dag.
ComplexMatrix l1_basis_change();

} // namespace krawx::rotations

#endif
