#include "krawx/oscrep.hpp"

#include <cmath>
#include <stdexcept>

namespace krawx::oscrep {

namespace {

// Adds <dst| L |src> contributions for one generator. Each generator is a
// sum of two hop terms  -i * g1 * a_u^dag a_v + i * g2 * a_v^dag a_u acting
// on the occupation triple; this helper applies one hop a_u^dag a_v with
// amplitude factor, writing into column `col` of `m`.
void add_hop(ComplexMatrix& m, const EigenspaceBasis& basis,
             const Composition3& src, std::size_t col, int from, int to,
             Complex amplitude) {
  int occ[3] = {src.a, src.b, src.c};
  if (occ[from] == 0) return;
  const Real factor =
      std::sqrt(static_cast<Real>(occ[from]) * static_cast<Real>(occ[to] + 1));
  occ[from] -= 1;
  occ[to] += 1;
  const Composition3 dst{occ[0], occ[1], occ[2]};
  m(basis.index(dst), col) += amplitude * factor;
}

const Complex kMinusI{0, -1};
const Complex kPlusI{0, 1};

} // namespace

EigenspaceBasis::EigenspaceBasis(int level) : level_(level) {
  if (level < 0) throw std::invalid_argument("EigenspaceBasis: level >= 0");
  states_.reserve(static_cast<std::size_t>((level + 1) * (level + 2) / 2));
  for (int a = 0; a <= level; ++a)
    for (int b = 0; b <= level - a; ++b) states_.push_back({a, b, level - a - b});
}

std::size_t EigenspaceBasis::index(const Composition3& state) const {
  if (state.level() != level_)
    throw std::invalid_argument("EigenspaceBasis::index: level mismatch");
  std::size_t idx = 0;
  for (int ap = 0; ap < state.a; ++ap) idx += static_cast<std::size_t>(level_ - ap + 1);
  return idx + static_cast<std::size_t>(state.b);
}

AngularMomentumMatrices angular_momentum_matrices(int level) {
  const EigenspaceBasis basis(level);
  const std::size_t dim = basis.size();
  AngularMomentumMatrices gen{ComplexMatrix(dim, dim), ComplexMatrix(dim, dim),
                              ComplexMatrix(dim, dim)};
  for (std::size_t j = 0; j < dim; ++j) {
    const Composition3& s = basis.at(j);
    // L_x = -i (a_y^dag a_z - a_z^dag a_y)
    add_hop(gen.lx, basis, s, j, 2, 1, kMinusI);
    add_hop(gen.lx, basis, s, j, 1, 2, kPlusI);
    // L_y = -i (a_z^dag a_x - a_x^dag a_z)
    add_hop(gen.ly, basis, s, j, 0, 2, kMinusI);
    add_hop(gen.ly, basis, s, j, 2, 0, kPlusI);
    // L_z = -i (a_x^dag a_y - a_y^dag a_x)
    add_hop(gen.lz, basis, s, j, 1, 0, kMinusI);
    add_hop(gen.lz, basis, s, j, 0, 1, kPlusI);
  }
  return gen;
}

ComplexMatrix exp_i_angular(int level, Axis axis, Real theta) {
  const auto gen = angular_momentum_matrices(level);
  const ComplexMatrix* l = nullptr;
  switch (axis) {
    case Axis::x: l = &gen.lx; break;
    case Axis::y: l = &gen.ly; break;
    case Axis::z: l = &gen.lz; break;
  }
  const HermitianEigen eig = hermitian_eigensystem(*l);
  const std::size_t dim = l->rows();
  // V e^{i theta Lambda} V^dag
  ComplexMatrix scaled = eig.vectors;
  for (std::size_t j = 0; j < dim; ++j) {
    const Complex ph = std::exp(Complex(0, theta * eig.values[j]));
    for (std::size_t i = 0; i < dim; ++i) scaled(i, j) *= ph;
  }
  return multiply(scaled, adjoint(eig.vectors));
}

ComplexMatrix unitary_matrix(int level, const rotations::EulerAngles& angles) {
  const ComplexMatrix uz_gamma = exp_i_angular(level, Axis::z, -angles.gamma);
  const ComplexMatrix uy_beta = exp_i_angular(level, Axis::y, -angles.beta);
  const ComplexMatrix uz_alpha = exp_i_angular(level, Axis::z, -angles.alpha);
  return multiply(uz_gamma, multiply(uy_beta, uz_alpha));
}

Complex matrix_element_oracle(int level, const rotations::EulerAngles& angles,
                              const Composition3& row, const Composition3& col) {
  if (row.level() != level || col.level() != level)
    throw std::invalid_argument("matrix_element_oracle: state level mismatch");
  const EigenspaceBasis basis(level);
  const ComplexMatrix u = unitary_matrix(level, angles);
  return u(basis.index(row), basis.index(col));
}

std::vector<std::pair<int, int>> casimir_spectrum_check(int level) {
  const auto gen = angular_momentum_matrices(level);
  ComplexMatrix l2 = multiply(gen.lx, gen.lx);
  const ComplexMatrix ly2 = multiply(gen.ly, gen.ly);
  const ComplexMatrix lz2 = multiply(gen.lz, gen.lz);
  for (std::size_t i = 0; i < l2.rows(); ++i)
    for (std::size_t j = 0; j < l2.cols(); ++j) l2(i, j) += ly2(i, j) + lz2(i, j);

  const HermitianEigen eig = hermitian_eigensystem(l2);

  std::vector<std::pair<int, int>> content;
  for (int ell = level; ell >= 0; ell -= 2) content.push_back({ell, 0});

  for (Real lambda : eig.values) {
    bool matched = false;
    for (auto& [ell, count] : content) {
      if (std::abs(lambda - static_cast<Real>(ell) * (ell + 1)) < Real(1e-6)) {
        ++count;
        matched = true;
        break;
      }
    }
    if (!matched)
      throw std::runtime_error("casimir_spectrum_check: unexpected eigenvalue");
  }
  return content;
}

} // namespace krawx::oscrep
