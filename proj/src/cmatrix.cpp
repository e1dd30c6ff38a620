#include "krawx/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace krawx {

namespace {

template <class T>
Dense<T> multiply_impl(const Dense<T>& a, const Dense<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  Dense<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T aik = a(i, k);
      if (aik == T{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <class T>
Real max_abs_diff_impl(const Dense<T>& a, const Dense<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  Real m = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m = std::max(m, static_cast<Real>(std::abs(a(i, j) - b(i, j))));
  return m;
}

} // namespace

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  return multiply_impl(a, b);
}
RealMatrix multiply(const RealMatrix& a, const RealMatrix& b) {
  return multiply_impl(a, b);
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = std::conj(a(i, j));
  return t;
}

RealMatrix transpose(const RealMatrix& a) {
  RealMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

Real max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return max_abs_diff_impl(a, b);
}
Real max_abs_diff(const RealMatrix& a, const RealMatrix& b) {
  return max_abs_diff_impl(a, b);
}

Real unitarity_defect(const ComplexMatrix& m) {
  return max_abs_diff(multiply(m, adjoint(m)),
                      ComplexMatrix::identity(m.rows()));
}

Real orthogonality_defect(const RealMatrix& m) {
  return max_abs_diff(multiply(m, transpose(m)), RealMatrix::identity(m.rows()));
}

HermitianEigen hermitian_eigensystem(const ComplexMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("hermitian_eigensystem: matrix must be square");
  const std::size_t n = a.rows();
  ComplexMatrix h = a;
  ComplexMatrix v = ComplexMatrix::identity(n);

  // Frobenius scale for the convergence test.
  Real scale = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scale += std::norm(h(i, j));
  scale = std::sqrt(scale);
  const Real stop = std::max<Real>(scale, Real(1)) * Real(1e-15);

  for (int sweep = 0; sweep < 100; ++sweep) {
    Real off = 0;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += 2 * std::norm(h(p, q));
    if (std::sqrt(off) < stop) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Real apq = std::abs(h(p, q));
        if (apq < Real(1e-300)) continue;
        const Complex phase = h(p, q) / apq; // e^{i arg h_pq}
        const Real tau = (h(q, q).real() - h(p, p).real()) / (2 * apq);
        const Real t = (tau >= 0 ? Real(1) : Real(-1)) /
                       (std::abs(tau) + std::sqrt(1 + tau * tau));
        const Real c = 1 / std::sqrt(1 + t * t);
        const Real s = t * c;
        const Complex sp = s * phase;        // J_pq
        const Complex sm = -s * std::conj(phase); // J_qp

        // h <- J^dag h J on rows/columns p, q.
        for (std::size_t k = 0; k < n; ++k) {
          const Complex hkp = h(k, p), hkq = h(k, q);
          h(k, p) = hkp * c + hkq * sm;
          h(k, q) = hkp * sp + hkq * c;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex hpk = h(p, k), hqk = h(q, k);
          h(p, k) = c * hpk + std::conj(sm) * hqk;
          h(q, k) = std::conj(sp) * hpk + c * hqk;
        }
        h(p, q) = 0;
        h(q, p) = 0;

        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * c + vkq * sm;
          v(k, q) = vkp * sp + vkq * c;
        }
      }
    }
  }

  HermitianEigen out;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = h(i, i).real();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return out.values[x] < out.values[y]; });

  std::vector<Real> sorted(n);
  ComplexMatrix vecs(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    sorted[j] = out.values[order[j]];
    for (std::size_t i = 0; i < n; ++i) vecs(i, j) = v(i, order[j]);
  }
  out.values = std::move(sorted);
  out.vectors = std::move(vecs);
  return out;
}

} // namespace krawx
