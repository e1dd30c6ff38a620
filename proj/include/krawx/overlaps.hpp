#ifndef KRAWX_OVERLAPS_HPP
#define KRAWX_OVERLAPS_HPP

#include <vector>

#include "krawx/cmatrix.hpp"
#include "krawx/oscrep.hpp"
#include "krawx/real.hpp"

namespace krawx::overlaps {

using oscrep::Composition3;

// Polar (cylindrical) quantum numbers; energy index 2 n_rho + |m| + n_z.
struct PolarLabel {
  int n_rho = 0;
  int m = 0;
  int n_z = 0;
  int level() const { return 2 * n_rho + (m < 0 ? -m : m) + n_z; }
};

// Spherical quantum numbers; energy index 2 n_r + ell, |m| <= ell.
struct SphericalLabel {
  int n_r = 0;
  int ell = 0;
  int m = 0;
  int level() const { return 2 * n_r + ell; }
};

// Even/odd split w = 2 w~ + q_w of a Cartesian occupation number.
struct ParitySplit {
  int w_tilde = 0;
  int q_w = 0; // 0 or 1
};
inline ParitySplit parity_split(int w) { return {w / 2, w % 2}; }

// <C n_x,n_y,n_z | n_rho,m,n_z' P>. Exactly 0 on any selection-rule failure
// (different n_z, energy mismatch, or the underlying Clebsch-Gordan rules).
Complex cartesian_polar(const Composition3& cart, const PolarLabel& pol);

// <P n_rho,m,n_z | n_r,ell,m' S>. Exactly 0 unless m = m' and the energies
// match.
Complex polar_spherical(const PolarLabel& pol, const SphericalLabel& sph);

// <S n_r,ell,m | r,s,t C>, i.e. the spherical bra against the Cartesian ket.
// The sum over intermediate polar states collapses to the single
// n_rho = (r + s - |m|)/2 term; 0 when that index is negative or fractional.
Complex cartesian_spherical(const Composition3& cart, const SphericalLabel& sph);

// Companion accessor <C r,s,t | n_r,ell,m S> = conj(cartesian_spherical).
Complex cartesian_spherical_conj(const Composition3& cart,
                                 const SphericalLabel& sph);

// Deterministic label enumerations for whole-eigenspace matrices.
// Polar: m ascending from -N to N, n_rho ascending, n_z derived.
// Spherical: ell ascending over {N mod 2, N mod 2 + 2, ..., N},
// m ascending from -ell to ell, n_r = (N - ell)/2 derived.
std::vector<PolarLabel> polar_basis(int level);
std::vector<SphericalLabel> spherical_basis(int level);

enum class OverlapKind { cart_polar, polar_spher, cart_spher };

// Unitary overlap matrix over the level-N eigenspace. Rows and columns
// follow the enumeration contracts above (Cartesian rows use
// oscrep::EigenspaceBasis order). Entries are bra-row, ket-column:
//   cart_polar:  M[c][p] = <C c | p P>
//   polar_spher: M[p][s] = <P p | s S>
//   cart_spher:  M[c][s] = <C c | s S>,  so cart_spher = cart_polar * polar_spher.
ComplexMatrix overlap_matrix(int level, OverlapKind kind);

} // namespace krawx::overlaps

#endif
