#include "novikov/exact/matrix.hpp"

namespace novikov {

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

RatPoly char_poly_monic(const Matrix<Rat>& m) {
  if (!m.square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  // Faddeev-LeVerrier: exact over Q since we divide only by small integers.
  const int n = m.rows();
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = 1;
  Matrix<Rat> mk(n, n);
  for (int k = 1; k <= n; ++k) {
    Matrix<Rat> next = m * mk;
    for (int i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    Matrix<Rat> amk = m * mk;
    Rat trace = 0;
    for (int i = 0; i < n; ++i) trace += amk(i, i);
    c[n - k] = -trace / k;
  }
  return RatPoly(std::move(c));
}

IntPoly char_poly(const Matrix<Rat>& m) { return primitive_part(char_poly_monic(m)); }

std::vector<int> rref(Matrix<Rat>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    for (int c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(pivot, c));
    Rat inv = 1 / m(row, col);
    for (int c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      Rat f = m(r, col);
      for (int c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank_rat(const Matrix<Rat>& m) { return rank_field(m); }

std::vector<std::vector<Rat>> kernel_rat(const Matrix<Rat>& m) {
  Matrix<Rat> r = m;
  auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(m.cols(), Rat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(static_cast<int>(i), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace novikov
