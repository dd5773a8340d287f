#pragma once

// Gauss-Jordan elimination over a (possibly noncommutative) division ring.
// Every row operation is a left multiplication, so the solution set of
// M x = 0 (x a column with scalars acting on the right) is preserved.

#include <optional>
#include <vector>

#include "revcert/dense_matrix.hpp"
#include "revcert/kernels.hpp"

namespace revcert {

template <class T>
DenseMatrix<T> operator*(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  return kernels::multiply(a, b);
}

/// Reduces m in place to reduced row echelon form; returns pivot columns.
/// Only the first `active_cols` columns are used for pivoting (the rest ride
/// along, e.g. an augmented identity).
template <class T>
std::vector<std::size_t> rref(DenseMatrix<T>& m, std::size_t active_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < active_cols && row < m.rows(); ++col) {
    std::size_t pick = row;
    while (pick < m.rows() && is_zero(m(pick, col))) ++pick;
    if (pick == m.rows()) continue;
    m.swap_rows(row, pick);
    const T inv = inverse(m(row, col));
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!is_zero(m(row, c))) m(row, c) = inv * m(row, c);
    kernels::eliminate(m, row, col);
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
std::vector<std::size_t> rref(DenseMatrix<T>& m) {
  return rref(m, m.cols());
}

template <class T>
std::size_t rank(DenseMatrix<T> m) {
  return rref(m).size();
}

template <class T>
std::optional<DenseMatrix<T>> try_inverse(const DenseMatrix<T>& a) {
  if (!a.is_square()) throw Error(ErrorCode::ShapeMismatch, "inverse of non-square matrix");
  const std::size_t n = a.rows();
  DenseMatrix<T> aug(n, 2 * n);
  aug.set_block(0, 0, a);
  aug.set_block(0, n, DenseMatrix<T>::identity(n));
  if (rref(aug, n).size() != n) return std::nullopt;
  return aug.block(0, n, n, n);
}

template <class T>
DenseMatrix<T> inverse(const DenseMatrix<T>& a) {
  auto inv = try_inverse(a);
  if (!inv) throw Error(ErrorCode::Singular, "matrix is singular");
  return *std::move(inv);
}

/// Basis (as columns of the result) of the right null space {x : m x = 0}.
template <class T>
DenseMatrix<T> nullspace(DenseMatrix<T> m) {
  const std::size_t n = m.cols();
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  DenseMatrix<T> basis(n, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis(f, k) = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -m(r, f);
  }
  return basis;
}

/// Column vectors helpers.
template <class T>
DenseMatrix<T> column(const DenseMatrix<T>& m, std::size_t c) {
  return m.block(0, c, m.rows(), 1);
}

template <class T>
DenseMatrix<T> hconcat(const std::vector<DenseMatrix<T>>& cols) {
  if (cols.empty()) return {};
  std::size_t total = 0;
  for (const auto& c : cols) {
    if (c.rows() != cols.front().rows()) throw Error(ErrorCode::ShapeMismatch, "hconcat row mismatch");
    total += c.cols();
  }
  DenseMatrix<T> out(cols.front().rows(), total);
  std::size_t at = 0;
  for (const auto& c : cols) {
    out.set_block(0, at, c);
    at += c.cols();
  }
  return out;
}

template <class T>
DenseMatrix<T> block_diagonal(const std::vector<DenseMatrix<T>>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  DenseMatrix<T> out(r, c);
  r = c = 0;
  for (const auto& b : blocks) {
    out.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return out;
}

}  // namespace revcert
