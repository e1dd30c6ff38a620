#ifndef KRAWX_CMATRIX_HPP
#define KRAWX_CMATRIX_HPP

#include <cstddef>
#include <vector>

#include "krawx/real.hpp"

namespace krawx {

// Dense row-major matrix. Everything in this project is at desk scale
// (dimension <= a few hundred), so no sparse or blocked machinery.
template <class T>
class Dense {
public:
  Dense() = default;
  Dense(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Dense identity(std::size_t n) {
    Dense m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RealMatrix = Dense<Real>;
using ComplexMatrix = Dense<Complex>;

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
RealMatrix multiply(const RealMatrix& a, const RealMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
RealMatrix transpose(const RealMatrix& a);

// max |a_ij - b_ij| over all entries.
Real max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
Real max_abs_diff(const RealMatrix& a, const RealMatrix& b);

// max |(M M^dag - I)_ij| (resp. M M^T for the real overload).
Real unitarity_defect(const ComplexMatrix& m);
Real orthogonality_defect(const RealMatrix& m);

// Eigendecomposition A = V diag(values) V^dag of a Hermitian matrix by
// cyclic complex Jacobi rotations. Eigenvalues ascending, eigenvectors in
// the columns of `vectors`.
struct HermitianEigen {
  std::vector<Real> values;
  ComplexMatrix vectors;
};
HermitianEigen hermitian_eigensystem(const ComplexMatrix& a);

} // namespace krawx

#endif
