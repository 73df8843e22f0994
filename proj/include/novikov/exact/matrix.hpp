#pragma once

#include "novikov/exact/poly.hpp"

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace novikov {

/// Dense row-major matrix over a ring T. T(0) and T(1) must be constructible.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, T(0)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  }
  Matrix(int rows, int cols, std::vector<T> entries) : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != static_cast<std::size_t>(rows) * cols) throw std::invalid_argument("entry count mismatch");
  }
  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged matrix rows");
      for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const std::vector<T>& entries() const { return a_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  template <class F>
  auto map(F f) const -> Matrix<decltype(f(std::declval<T>()))> {
    using U = decltype(f(std::declval<T>()));
    std::vector<U> out;
    out.reserve(a_.size());
    for (const auto& v : a_) out.push_back(f(v));
    return Matrix<U>(rows_, cols_, std::move(out));
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix z(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        const T& v = x(i, k);
        for (int j = 0; j < y.cols_; ++j) z(i, j) += v * y(k, j);
      }
    return z;
  }
  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    Matrix z = x;
    for (std::size_t i = 0; i < z.a_.size(); ++i) z.a_[i] += y.a_[i];
    return z;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("matrix difference shape mismatch");
    Matrix z = x;
    for (std::size_t i = 0; i < z.a_.size(); ++i) z.a_[i] -= y.a_[i];
    return z;
  }
  friend Matrix operator*(const T& s, const Matrix& x) {
    Matrix z = x;
    for (auto& v : z.a_) v = s * v;
    return z;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

/// k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k);

/// Determinant by cofactor expansion; no division, so it works over rings.
template <class T>
T det_laplace(const Matrix<T>& m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  T acc(0);
  for (int j = 0; j < n; ++j) {
    Matrix<T> minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      int c = 0;
      for (int k = 0; k < n; ++k) {
        if (k == j) continue;
        minor(i - 1, c++) = m(i, k);
      }
    }
    T term = m(0, j) * det_laplace(minor);
    if (j % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

/// Determinant of the submatrix on the given ordered rows and columns.
template <class T>
T minor_det(const Matrix<T>& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  const int k = static_cast<int>(rows.size());
  Matrix<T> sub(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
  return det_laplace(sub);
}

/// Matrix of the induced map on the k-th exterior power, lexicographic
/// basis: entry (I, J) is the minor on rows I and columns J.
template <class T>
Matrix<T> exterior_power(const Matrix<T>& m, int k) {
  if (!m.square()) throw std::invalid_argument("exterior power of a non-square matrix");
  if (k < 0 || k > m.rows()) throw std::out_of_range("exterior power degree out of range");
  auto basis = subsets(m.rows(), k);
  const int n = static_cast<int>(basis.size());
  Matrix<T> out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = minor_det(m, basis[i], basis[j]);
  return out;
}

/// Second exterior power of a 3x3 matrix in the cyclic basis
/// {e2^e3, e3^e1, e1^e2}; equals the cofactor matrix det(A) * A^{-T}.
template <class T>
Matrix<T> wedge2_cyclic(const Matrix<T>& m) {
  if (m.rows() != 3 || m.cols() != 3) throw std::invalid_argument("cyclic wedge basis needs a 3x3 matrix");
  const std::vector<std::vector<int>> basis{{1, 2}, {2, 0}, {0, 1}};
  Matrix<T> out(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out(i, j) = minor_det(m, basis[i], basis[j]);
  return out;
}

/// det(xI - M) with denominators cleared (primitive, positive leading
/// coefficient). Throws on a non-square matrix.
IntPoly char_poly(const Matrix<Rat>& m);

/// Monic det(xI - M) over Q.
RatPoly char_poly_monic(const Matrix<Rat>& m);

inline bool is_zero(const Rat& v) { return v == 0; }

/// Rank by Gaussian elimination over a field. `is_zero` tests entries and
/// division is T's operator/.
template <class T>
int rank_field(Matrix<T> m) {
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows(); ++r) {
      if (!is_zero(m(r, col))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    for (int c = 0; c < m.cols(); ++c) std::swap(m(rank, c), m(pivot, c));
    const T inv = T(1) / m(rank, col);
    for (int r = rank + 1; r < m.rows(); ++r) {
      if (is_zero(m(r, col))) continue;
      T f = m(r, col) * inv;
      for (int c = col; c < m.cols(); ++c) m(r, c) -= f * m(rank, c);
    }
    ++rank;
  }
  return rank;
}

int rank_rat(const Matrix<Rat>& m);

/// Reduced row echelon form over Q; returns the pivot columns.
std::vector<int> rref(Matrix<Rat>& m);

/// Basis of the right kernel {v : M v = 0} over Q, one vector per free column.
std::vector<std::vector<Rat>> kernel_rat(const Matrix<Rat>& m);

}  // namespace novikov
