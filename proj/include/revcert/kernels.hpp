#pragma once

// Data-parallel inner loops.  Each kernel has a serial reference version kept
// for tests and for the benchmark, and an OpenMP version.  The dispatching
// entry points pick the parallel path once the work is large enough to pay
// for thread start-up; both paths produce identical exact results.

#include <cstddef>

#include "revcert/dense_matrix.hpp"

namespace revcert::kernels {

/// Scalar multiply-adds below this count run serially.
inline constexpr std::size_t kParallelThreshold = 4096;

template <class T>
void check_product_shape(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::ShapeMismatch, "matrix product needs a.cols == b.rows");
}

template <class T>
DenseMatrix<T> multiply_serial(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  check_product_shape(a, b);
  DenseMatrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (is_zero(b(k, j))) continue;
        out(i, j) += aik * b(k, j);
      }
    }
  return out;
}

template <class T>
DenseMatrix<T> multiply_parallel(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  check_product_shape(a, b);
  DenseMatrix<T> out(a.rows(), b.cols());
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t si = 0; si < rows; ++si) {
    const auto i = static_cast<std::size_t>(si);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (is_zero(b(k, j))) continue;
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

template <class T>
DenseMatrix<T> multiply(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  if (a.rows() * a.cols() * b.cols() >= kParallelThreshold) return multiply_parallel(a, b);
  return multiply_serial(a, b);
}

/// Clears column `col` in every row except `pivot_row`, whose pivot entry
/// must already be 1.  Row updates act by left multiplication:
/// row_r <- row_r - m(r, col) * row_pivot.
template <class T>
void eliminate_serial(DenseMatrix<T>& m, std::size_t pivot_row, std::size_t col) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r == pivot_row || is_zero(m(r, col))) continue;
    const T factor = m(r, col);
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!is_zero(m(pivot_row, c))) m(r, c) -= factor * m(pivot_row, c);
  }
}

template <class T>
void eliminate_parallel(DenseMatrix<T>& m, std::size_t pivot_row, std::size_t col) {
  const auto rows = static_cast<std::ptrdiff_t>(m.rows());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t sr = 0; sr < rows; ++sr) {
    const auto r = static_cast<std::size_t>(sr);
    if (r == pivot_row || is_zero(m(r, col))) continue;
    const T factor = m(r, col);
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!is_zero(m(pivot_row, c))) m(r, c) -= factor * m(pivot_row, c);
  }
}

template <class T>
void eliminate(DenseMatrix<T>& m, std::size_t pivot_row, std::size_t col) {
  if (m.rows() * m.cols() >= kParallelThreshold)
    eliminate_parallel(m, pivot_row, col);
  else
    eliminate_serial(m, pivot_row, col);
}

}  // namespace revcert::kernels
