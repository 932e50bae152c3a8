#include "quadnet/algebra/matrix.hpp"

#include "quadnet/error.hpp"

namespace quadnet {

ScalarMatrix identity_matrix(std::size_t n) {
  ScalarMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.cols() != b.rows()) throw MathError(ErrorKind::LengthMismatch, "matrix product shapes");
  ScalarMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

ScalarMatrix transpose(const ScalarMatrix& a) {
  ScalarMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

MultiPoly det_poly_matrix(const PolyMatrix& input) {
  const std::size_t n = input.rows();
  if (n != input.cols()) throw MathError(ErrorKind::InvalidArgument, "determinant of non-square matrix");
  if (n == 0) return MultiPoly::constant(0, Scalar(1));
  PolyMatrix m = input;
  const std::size_t nv = m(0, 0).nvars();
  MultiPoly prev = MultiPoly::constant(nv, Scalar(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return MultiPoly(nv);
      m.swap_rows(k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = exact_divide(num, prev);
      }
      m(i, k) = MultiPoly(nv);
    }
    prev = m(k, k);
  }
  MultiPoly d = m(n - 1, n - 1);
  return negate ? -d : d;
}

MultiPoly det_cofactor(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return MultiPoly::constant(0, Scalar(1));
  if (n == 1) return m(0, 0);
  const std::size_t nv = m(0, 0).nvars();
  MultiPoly total(nv);
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    PolyMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t c = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) minor(i - 1, c++) = m(i, k);
    }
    MultiPoly t = m(0, j) * det_cofactor(minor);
    if (j % 2 == 0)
      total += t;
    else
      total -= t;
  }
  return total;
}

std::vector<std::size_t> rref(ScalarMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(row, p);
    Scalar inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      Scalar f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Scalar determinant(const ScalarMatrix& input) {
  if (input.rows() != input.cols()) throw MathError(ErrorKind::InvalidArgument, "determinant of non-square matrix");
  ScalarMatrix m = input;
  const std::size_t n = m.rows();
  Scalar det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k).is_zero()) ++p;
    if (p == n) return Scalar();
    if (p != k) {
      m.swap_rows(k, p);
      det = -det;
    }
    det *= m(k, k);
    Scalar inv = m(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      Scalar f = m(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

std::size_t rank(const ScalarMatrix& input) {
  ScalarMatrix m = input;
  return rref(m).size();
}

ScalarMatrix inverse(const ScalarMatrix& input) {
  const std::size_t n = input.rows();
  if (n != input.cols()) throw MathError(ErrorKind::InvalidArgument, "inverse of non-square matrix");
  ScalarMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = input(i, j);
    aug(i, n + i) = Scalar(1);
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw MathError(ErrorKind::SingularMatrix, "matrix is not invertible");
  ScalarMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::vector<std::vector<Scalar>> kernel(const ScalarMatrix& input) {
  ScalarMatrix m = input;
  auto piv = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols());
    v[free] = Scalar(1);
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace quadnet
