#include "revcert/matrix.hpp"

#include <string>

namespace revcert {

namespace {

void require_domain(const Matrix& a, ScalarDomain d, const char* op) {
  if (a.domain() != d)
    throw Error(ErrorCode::DomainMismatch,
                std::string(op) + " expects domain " + std::string(to_string(d)) + ", got " +
                    std::string(to_string(a.domain())));
}

void require_same_domain(const Matrix& a, const Matrix& b, const char* op) {
  if (a.domain() != b.domain())
    throw Error(ErrorCode::DomainMismatch, std::string(op) + ": operands have different domains");
}

void validate(ScalarDomain domain, const QuaternionMatrix& m) {
  for (const auto& q : m.data())
    if (!admits(domain, q))
      throw Error(ErrorCode::DomainMismatch, "entry " + format_scalar(q) + " is outside domain " +
                                                 std::string(to_string(domain)));
}

}  // namespace

Matrix::Matrix(ScalarDomain domain, std::size_t rows, std::size_t cols)
    : domain_(domain), entries_(rows, cols) {}

Matrix::Matrix(ScalarDomain domain, QuaternionMatrix entries)
    : domain_(domain), entries_(std::move(entries)) {
  validate(domain_, entries_);
}

Matrix Matrix::identity(ScalarDomain domain, std::size_t n) {
  return Matrix(domain, QuaternionMatrix::identity(n));
}

Matrix Matrix::from_rows(ScalarDomain domain,
                         std::initializer_list<std::initializer_list<Quaternion>> rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr ? rows.begin()->size() : 0;
  QuaternionMatrix m(nr, nc);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != nc) throw Error(ErrorCode::ShapeMismatch, "ragged rows");
    std::size_t c = 0;
    for (const auto& q : row) m(r, c++) = q;
    ++r;
  }
  return Matrix(domain, std::move(m));
}

Matrix Matrix::diagonal(ScalarDomain domain, const std::vector<Quaternion>& diag) {
  QuaternionMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return Matrix(domain, std::move(m));
}

void Matrix::set(std::size_t r, std::size_t c, Quaternion value) {
  if (!admits(domain_, value))
    throw Error(ErrorCode::DomainMismatch, "entry " + format_scalar(value) + " is outside domain " +
                                               std::string(to_string(domain_)));
  entries_(r, c) = std::move(value);
}

Matrix Matrix::with_domain(ScalarDomain domain) const { return Matrix(domain, entries_); }

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Matrix out;
  out.domain_ = domain_;
  out.entries_ = entries_.block(r0, c0, nr, nc);
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same_domain(*this, o, "add");
  entries_ += o.entries_;
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_same_domain(*this, o, "subtract");
  entries_ -= o.entries_;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_domain(a, b, "mat_mul");
  if (a.cols() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "mat_mul: inner dimensions differ");
  if (a.domain() == ScalarDomain::H) {
    Matrix out;
    out.domain_ = a.domain_;
    out.entries_ = a.entries_ * b.entries_;
    return out;
  }
  return from_complex(a.domain(), to_complex(a) * to_complex(b));
}

Matrix scale(const Quaternion& s, const Matrix& a) {
  if (!admits(a.domain(), s))
    throw Error(ErrorCode::DomainMismatch, "scalar " + format_scalar(s) + " outside matrix domain");
  return Matrix(a.domain(), scale_left(s, a.entries()));
}

Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }

Matrix mat_inverse(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::ShapeMismatch, "mat_inverse of non-square matrix");
  if (a.domain() == ScalarDomain::H) return Matrix(a.domain(), inverse(a.entries()));
  return from_complex(a.domain(), inverse(to_complex(a)));
}

Matrix psi_embed(const Matrix& a) {
  require_domain(a, ScalarDomain::C, "psi_embed");
  QuaternionMatrix out(2 * a.rows(), 2 * a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const Quaternion& z = a(r, c);
      out(2 * r, 2 * c) = z.a;
      out(2 * r, 2 * c + 1) = z.b;
      out(2 * r + 1, 2 * c) = Quaternion(-z.b);
      out(2 * r + 1, 2 * c + 1) = z.a;
    }
  return Matrix(ScalarDomain::R, std::move(out));
}

Matrix complex_adjoint(const Matrix& a) {
  require_domain(a, ScalarDomain::H, "complex_adjoint");
  const std::size_t n = a.rows(), m = a.cols();
  QuaternionMatrix out(2 * n, 2 * m);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      // q = (a + b i) + (c + d i) j
      const Quaternion& q = a(r, c);
      out(r, c) = Quaternion(q.a, q.b);
      out(r, m + c) = Quaternion(q.c, q.d);
      out(n + r, c) = Quaternion(-q.c, q.d);
      out(n + r, m + c) = Quaternion(q.a, -q.b);
    }
  return Matrix(ScalarDomain::C, std::move(out));
}

Matrix cayley(const Matrix& x) {
  if (!x.is_square()) throw Error(ErrorCode::ShapeMismatch, "cayley of non-square matrix");
  const Matrix id = Matrix::identity(x.domain(), x.rows());
  return (id + x) * mat_inverse(id - x);
}

Matrix exp_nilpotent(const Matrix& x) {
  if (!x.is_square()) throw Error(ErrorCode::ShapeMismatch, "exp of non-square matrix");
  const std::size_t n = x.rows();
  Matrix sum = Matrix::identity(x.domain(), n);
  Matrix term = sum;
  for (std::size_t k = 1; k <= n; ++k) {
    term = scale(Quaternion(Rational(1, static_cast<unsigned long>(k))), term * x);
    if (term.is_zero()) return sum;
    sum += term;
  }
  throw Error(ErrorCode::NotApplicable, "exp_nilpotent: matrix is not nilpotent");
}

Matrix block_compose(const std::vector<Matrix>& blocks, BlockLayout layout) {
  if (blocks.empty()) throw Error(ErrorCode::ShapeMismatch, "block_compose of no blocks");
  const ScalarDomain domain = blocks.front().domain();
  for (const auto& b : blocks) {
    if (b.domain() != domain) throw Error(ErrorCode::DomainMismatch, "block_compose: mixed domains");
    if (!b.is_square()) throw Error(ErrorCode::ShapeMismatch, "block_compose: non-square block");
  }
  if (layout == BlockLayout::Diagonal) {
    std::vector<QuaternionMatrix> parts;
    parts.reserve(blocks.size());
    for (const auto& b : blocks) parts.push_back(b.entries());
    return Matrix(domain, block_diagonal(parts));
  }
  if (blocks.size() != 2 || blocks[0].rows() != blocks[1].rows())
    throw Error(ErrorCode::ShapeMismatch, "antidiagonal layout needs two blocks of equal size");
  const std::size_t n = blocks[0].rows();
  QuaternionMatrix out(2 * n, 2 * n);
  out.set_block(0, n, blocks[0].entries());
  out.set_block(n, 0, blocks[1].entries());
  return Matrix(domain, std::move(out));
}

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.image.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.image[i] = i;
  return p;
}

Permutation Permutation::of_blocks(const std::vector<std::size_t>& block_sizes,
                                   const std::vector<std::size_t>& order) {
  if (order.size() != block_sizes.size())
    throw Error(ErrorCode::ShapeMismatch, "block order does not match block count");
  std::vector<std::size_t> old_offset(block_sizes.size() + 1, 0);
  for (std::size_t b = 0; b < block_sizes.size(); ++b) old_offset[b + 1] = old_offset[b] + block_sizes[b];
  std::vector<bool> seen(block_sizes.size(), false);
  Permutation p;
  p.image.resize(old_offset.back());
  std::size_t at = 0;
  for (std::size_t ob : order) {
    if (ob >= block_sizes.size() || seen[ob])
      throw Error(ErrorCode::ShapeMismatch, "block order is not a permutation");
    seen[ob] = true;
    for (std::size_t k = 0; k < block_sizes[ob]; ++k) p.image[old_offset[ob] + k] = at++;
  }
  return p;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.image.resize(image.size());
  for (std::size_t a = 0; a < image.size(); ++a) inv.image[image[a]] = a;
  return inv;
}

namespace {

void validate_permutation(const Permutation& p, std::size_t n) {
  if (p.size() != n) throw Error(ErrorCode::ShapeMismatch, "permutation size does not match matrix");
  std::vector<bool> seen(n, false);
  for (std::size_t v : p.image) {
    if (v >= n || seen[v]) throw Error(ErrorCode::ShapeMismatch, "not a permutation");
    seen[v] = true;
  }
}

}  // namespace

Matrix permutation_matrix(ScalarDomain domain, const Permutation& p) {
  validate_permutation(p, p.size());
  QuaternionMatrix m(p.size(), p.size());
  for (std::size_t a = 0; a < p.size(); ++a) m(p.image[a], a) = Quaternion(1);
  return Matrix(domain, std::move(m));
}

Matrix permute_conjugate(const Matrix& a, const Permutation& p) {
  if (!a.is_square()) throw Error(ErrorCode::ShapeMismatch, "permute_conjugate of non-square matrix");
  validate_permutation(p, a.rows());
  QuaternionMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(p.image[r], p.image[c]) = a(r, c);
  return Matrix(a.domain(), std::move(out));
}

ComplexMatrix to_complex(const Matrix& a) {
  if (a.domain() == ScalarDomain::H)
    throw Error(ErrorCode::DomainMismatch, "quaternionic matrix has no direct complex form");
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = Gaussian(a(r, c).a, a(r, c).b);
  return out;
}

Matrix from_complex(ScalarDomain domain, const ComplexMatrix& a) {
  QuaternionMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = Quaternion(a(r, c));
  return Matrix(domain, std::move(out));
}

ComplexMatrix conj(const ComplexMatrix& a) {
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = conj(a(r, c));
  return out;
}

Matrix alternating_signs(ScalarDomain domain, std::size_t n) {
  QuaternionMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Quaternion(i % 2 == 0 ? 1 : -1);
  return Matrix(domain, std::move(m));
}

}  // namespace revcert
