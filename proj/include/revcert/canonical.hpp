#pragma once

#include <cstddef>
#include <vector>

#include "revcert/matrix.hpp"
#include "revcert/polynomial.hpp"
#include "revcert/scalars.hpp"

namespace revcert {

/// J(lambda, size), or for domain R with real_complex_pair the real block
/// Psi(J(mu + i nu, size)) of dimension 2 * size.
struct JordanBlock {
  Gaussian eigenvalue;
  std::size_t size = 1;
  bool real_complex_pair = false;

  std::size_t dimension() const { return real_complex_pair ? 2 * size : size; }
  friend bool operator==(const JordanBlock&, const JordanBlock&) = default;
};

/// Multiset of Jordan blocks kept in canonical order: eigenvalues ascending
/// by (real, imaginary), sizes descending within an eigenvalue.
struct JordanSpec {
  ScalarDomain domain = ScalarDomain::C;
  std::vector<JordanBlock> blocks;

  std::size_t dimension() const;
  EigenvalueClass eigenvalue_class(std::size_t block) const {
    return {blocks.at(block).eigenvalue, domain};
  }
  friend bool operator==(const JordanSpec&, const JordanSpec&) = default;
};

/// Checks the per-domain block invariants; throws DomainMismatch.
void validate(const JordanSpec& spec);
/// Validates and sorts blocks into canonical order.
JordanSpec canonicalize(JordanSpec spec);

struct Decomposition {
  JordanSpec spec;
  /// S with S * A * S^{-1} == assemble(spec).
  Matrix conjugator;
};

Matrix build_block(const JordanBlock& block, ScalarDomain domain);
Matrix assemble(const JordanSpec& spec);

/// det(xI - A) for commutative domains.
PolynomialQi char_poly(const Matrix& a);
PolynomialQi char_poly(const ComplexMatrix& a);

/// Jordan form over the matrix's own domain with an exact conjugator.
/// Throws NonSplittingSpectrum when an eigenvalue lies outside Q(i).
Decomposition jordan_decompose(const Matrix& a);

/// S with S * A * S^{-1} == B; throws NotSimilar if the Jordan forms differ.
Matrix similarity_conjugator(const Matrix& a, const Matrix& b);

/// Monic non-unit invariant factors of xI - A (each divides the next).
std::vector<PolynomialQi> invariant_factors(const Matrix& a);
std::vector<PolynomialQi> invariant_factors(const ComplexMatrix& a);

}  // namespace revcert
