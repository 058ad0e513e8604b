#pragma once

#include <cstddef>
#include <vector>

#include "qconic/rational.hpp"

namespace qconic {

/// Row-major dense matrix over an exact field.
template <class F>
struct DenseMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<F> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, F(0)) {}
  static DenseMatrix from_rows(const std::vector<std::vector<F>>& rows, std::size_t cols) {
    DenseMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols && j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
  }

  F& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Reduced row echelon form in place; returns the pivot columns.
template <class F>
std::vector<std::size_t> rref(DenseMatrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t p = row;
    while (p < m.rows && is_zero(m(p, col))) ++p;
    if (p == m.rows) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(p, j), m(row, j));
    F inv = F(1) / m(row, col);
    for (std::size_t j = col; j < m.cols; ++j) m(row, j) = m(row, j) * inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      F factor = m(i, col);
      for (std::size_t j = col; j < m.cols; ++j) m(i, j) = m(i, j) - factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
std::size_t rank(DenseMatrix<F> m) {
  return rref(m).size();
}

/// Exact basis of the right kernel {v : M v = 0}, one vector per free
/// column (that entry is 1, other free entries 0). Empty iff the kernel is
/// trivial.
template <class F>
std::vector<std::vector<F>> kernel_basis(DenseMatrix<F> m) {
  std::vector<std::size_t> pivots = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(m.cols, F(0));
    v[free] = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
std::vector<F> multiply(const DenseMatrix<F>& m, const std::vector<F>& v) {
  std::vector<F> out(m.rows, F(0));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if (!is_zero(m(i, j)) && !is_zero(v[j])) out[i] = out[i] + m(i, j) * v[j];
  return out;
}

/// Row space accumulated one vector at a time, kept in echelon form with
/// sparse rows. Used when the spanning set is large but the rank is small.
template <class F>
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : pivot_row_(dim, npos) {}

  /// Reduces v against the basis; returns true if it enlarged the span.
  bool insert(std::vector<F> v) {
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (is_zero(v[c])) continue;
      std::size_t r = pivot_row_[c];
      if (r == npos) {
        F inv = F(1) / v[c];
        for (std::size_t j = c; j < v.size(); ++j)
          if (!is_zero(v[j])) v[j] = v[j] * inv;
        pivot_row_[c] = rows_.size();
        rows_.push_back(std::move(v));
        return true;
      }
      F factor = v[c];
      const std::vector<F>& row = rows_[r];
      for (std::size_t j = c; j < v.size(); ++j)
        if (!is_zero(row[j])) v[j] = v[j] - factor * row[j];
    }
    return false;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pivot_row_;
  std::vector<std::vector<F>> rows_;
};

}  // namespace qconic
