#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "revcert/dense_matrix.hpp"
#include "revcert/linalg.hpp"
#include "revcert/scalars.hpp"

namespace revcert {

/// Dense matrix of rational quaternions tagged with the scalar domain its
/// entries live in.  All arithmetic is exact; operations between matrices of
/// different domains are rejected.
class Matrix {
 public:
  Matrix() = default;
  Matrix(ScalarDomain domain, std::size_t rows, std::size_t cols);
  Matrix(ScalarDomain domain, QuaternionMatrix entries);

  static Matrix identity(ScalarDomain domain, std::size_t n);
  static Matrix from_rows(ScalarDomain domain,
                          std::initializer_list<std::initializer_list<Quaternion>> rows);
  static Matrix diagonal(ScalarDomain domain, const std::vector<Quaternion>& diag);

  ScalarDomain domain() const noexcept { return domain_; }
  std::size_t rows() const noexcept { return entries_.rows(); }
  std::size_t cols() const noexcept { return entries_.cols(); }
  bool is_square() const noexcept { return entries_.is_square(); }
  const QuaternionMatrix& entries() const noexcept { return entries_; }

  const Quaternion& operator()(std::size_t r, std::size_t c) const { return entries_(r, c); }
  void set(std::size_t r, std::size_t c, Quaternion value);

  /// Same entries under another tag; throws DomainMismatch if an entry does
  /// not satisfy the new domain's constraint.
  Matrix with_domain(ScalarDomain domain) const;

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  bool is_zero() const { return entries_.is_zero(); }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(const Matrix& a) { return Matrix(a.domain_, -a.entries_); }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  ScalarDomain domain_ = ScalarDomain::R;
  QuaternionMatrix entries_;
};

/// Left scalar multiple s * A; s must be admitted by A's domain.
Matrix scale(const Quaternion& s, const Matrix& a);

Matrix mat_mul(const Matrix& a, const Matrix& b);
/// Gauss-Jordan inverse with left-multiplication row operations.
Matrix mat_inverse(const Matrix& a);

/// Psi: M(n, C) -> M(2n, R), z -> [[Re z, Im z], [-Im z, Re z]].
Matrix psi_embed(const Matrix& a);
/// chi: M(n, H) -> M(2n, C), A1 + A2 j -> [[A1, A2], [-conj A2, conj A1]].
Matrix complex_adjoint(const Matrix& a);

/// (I + X)(I - X)^{-1}; throws Singular when 1 is an eigenvalue of X.
Matrix cayley(const Matrix& x);

/// Finite exponential series of a nilpotent matrix; NotApplicable otherwise.
Matrix exp_nilpotent(const Matrix& x);

enum class BlockLayout { Diagonal, Antidiagonal };
Matrix block_compose(const std::vector<Matrix>& blocks, BlockLayout layout);

/// Bijection on 0..n-1; index a is sent to image[a].
struct Permutation {
  std::vector<std::size_t> image;

  static Permutation identity(std::size_t n);
  /// Index permutation that moves contiguous blocks of the given sizes into
  /// `order` (order[k] = old block index placed at position k).
  static Permutation of_blocks(const std::vector<std::size_t>& block_sizes,
                               const std::vector<std::size_t>& order);
  Permutation inverse() const;
  std::size_t size() const { return image.size(); }
};

Matrix permutation_matrix(ScalarDomain domain, const Permutation& p);
/// P A P^{-1} where P moves index a to p.image[a].
Matrix permute_conjugate(const Matrix& a, const Permutation& p);

// Bridges to the commutative kernels.
ComplexMatrix to_complex(const Matrix& a);
Matrix from_complex(ScalarDomain domain, const ComplexMatrix& a);
ComplexMatrix conj(const ComplexMatrix& a);

/// Sign pattern diag(1, -1, 1, ...) of size n.
Matrix alternating_signs(ScalarDomain domain, std::size_t n);

}  // namespace revcert
