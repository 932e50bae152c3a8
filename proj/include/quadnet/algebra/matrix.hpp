#pragma once

#include <cstddef>
#include <vector>

#include "quadnet/algebra/poly.hpp"
#include "quadnet/algebra/scalar.hpp"

namespace quadnet {

/// Row-major dense matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using ScalarMatrix = Matrix<Scalar>;
using PolyMatrix = Matrix<MultiPoly>;

ScalarMatrix identity_matrix(std::size_t n);
ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
ScalarMatrix transpose(const ScalarMatrix& a);

/// Fraction-free (Bareiss) determinant with row pivoting. All entries must
/// live in the same ring; the empty matrix has determinant 1 in 0 variables.
MultiPoly det_poly_matrix(const PolyMatrix& m);

/// Plain cofactor expansion; only meant as a test oracle for small sizes.
MultiPoly det_cofactor(const PolyMatrix& m);

Scalar determinant(const ScalarMatrix& m);
std::size_t rank(const ScalarMatrix& m);
/// Throws MathError(SingularMatrix).
ScalarMatrix inverse(const ScalarMatrix& m);
/// Basis of the right kernel {v : m v = 0}, one vector per free column.
std::vector<std::vector<Scalar>> kernel(const ScalarMatrix& m);
/// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(ScalarMatrix& m);

}  // namespace quadnet
