#pragma once

#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qgr/fp.hpp"
#include "qgr/rational.hpp"

namespace qgr {

/// Dense matrix over one exact field. The element type K is either Rational
/// or Fp; a zero prototype is stored so that the field survives even in a
/// matrix with no entries (0xN and Nx0 shapes are legal and show up in the
/// construction whenever the equation set is empty).
template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, K zero = K{})
      : rows_(checked(rows)), cols_(checked(cols)), zero_(std::move(zero)),
        a_(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_), zero_) {}

  static Matrix identity(int n, K zero = K{}) {
    Matrix m(n, n, zero);
    for (int i = 0; i < n; ++i) m.at(i, i) = one_like(m.zero());
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const K& zero() const { return zero_; }

  K& at(int r, int c) {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return a_[static_cast<std::size_t>(r) * cols_ + c];
  }
  const K& at(int r, int c) const {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return a_[static_cast<std::size_t>(r) * cols_ + c];
  }

  void swap_rows(int i, int j) {
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
  }

  std::vector<K> row(int r) const {
    std::vector<K> out;
    out.reserve(cols_);
    for (int c = 0; c < cols_; ++c) out.push_back(at(r, c));
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.zero_ == b.zero_ &&
           a.a_ == b.a_;
  }

 private:
  static int checked(int v) {
    if (v < 0) throw std::invalid_argument("Matrix: negative shape");
    return v;
  }

  int rows_ = 0, cols_ = 0;
  K zero_{};
  std::vector<K> a_;
};

namespace detail {

/// In-place reduced row echelon form via exact Gaussian elimination with
/// first-nonzero pivoting. Returns the pivot column indices.
template <class K>
std::vector<int> rref(Matrix<K>& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (!is_zero(m.at(i, c))) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) m.swap_rows(r, piv);
    K scale = inv(m.at(r, c));
    for (int j = c; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * scale;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m.at(i, c))) continue;
      K f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

template <class K>
int rank(const Matrix<K>& m) {
  Matrix<K> work = m;
  return static_cast<int>(detail::rref(work).size());
}

/// Basis of the right null space as column vectors, canonicalized to reduced
/// column echelon form so identical inputs always give bit-identical output.
/// Size of the basis is cols - rank.
template <class K>
std::vector<std::vector<K>> kernel_basis(const Matrix<K>& m) {
  Matrix<K> r = m;
  std::vector<int> pivots = detail::rref(r);
  std::vector<char> is_pivot(m.cols(), 0);
  for (int c : pivots) is_pivot[c] = 1;

  std::vector<int> free_cols;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  int t = static_cast<int>(free_cols.size());
  if (t == 0) return {};

  // Free-variable basis, one vector per free column, then a second
  // elimination on the stacked vectors to reach the canonical form.
  Matrix<K> b(t, m.cols(), m.zero());
  for (int k = 0; k < t; ++k) {
    int f = free_cols[k];
    b.at(k, f) = one_like(m.zero());
    for (std::size_t i = 0; i < pivots.size(); ++i)
      b.at(k, pivots[i]) = -r.at(static_cast<int>(i), f);
  }
  detail::rref(b);

  std::vector<std::vector<K>> basis;
  basis.reserve(t);
  for (int k = 0; k < t; ++k) basis.push_back(b.row(k));
  return basis;
}

template <class K>
std::vector<K> mat_vec(const Matrix<K>& m, const std::vector<K>& v) {
  if (static_cast<int>(v.size()) != m.cols())
    throw std::invalid_argument("mat_vec: dimension mismatch");
  std::vector<K> out(static_cast<std::size_t>(m.rows()), m.zero());
  for (int r = 0; r < m.rows(); ++r) {
    K acc = m.zero();
    for (int c = 0; c < m.cols(); ++c) acc = acc + m.at(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

inline Matrix<Fp> reduce_mod_p(const Matrix<Rational>& m, std::uint32_t p) {
  Matrix<Fp> out(m.rows(), m.cols(), Fp(0, p));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out.at(r, c) = reduce_mod_p(m.at(r, c), p);
  return out;
}

}  // namespace qgr
