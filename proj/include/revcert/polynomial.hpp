#pragma once

#include <string>
#include <utility>
#include <vector>

#include "revcert/scalars.hpp"

namespace revcert {

/// Polynomial over Q(i), coefficients lowest degree first.  Always trimmed:
/// the zero polynomial has no coefficients.
class PolynomialQi {
 public:
  PolynomialQi() = default;
  explicit PolynomialQi(std::vector<Gaussian> coefficients);

  static PolynomialQi constant(Gaussian c);
  static PolynomialQi x();
  /// x - root
  static PolynomialQi linear(const Gaussian& root);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Gaussian>& coefficients() const noexcept { return coeffs_; }
  Gaussian coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Gaussian(); }
  const Gaussian& leading() const { return coeffs_.back(); }

  bool is_monic() const;
  PolynomialQi monic() const;
  PolynomialQi derivative() const;
  Gaussian evaluate(const Gaussian& at) const;

  PolynomialQi& operator+=(const PolynomialQi& o);
  PolynomialQi& operator-=(const PolynomialQi& o);
  friend PolynomialQi operator+(PolynomialQi a, const PolynomialQi& b) { return a += b; }
  friend PolynomialQi operator-(PolynomialQi a, const PolynomialQi& b) { return a -= b; }
  friend PolynomialQi operator-(const PolynomialQi& a);
  friend PolynomialQi operator*(const PolynomialQi& a, const PolynomialQi& b);
  friend PolynomialQi operator*(const Gaussian& s, const PolynomialQi& p);
  friend bool operator==(const PolynomialQi&, const PolynomialQi&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Gaussian> coeffs_;
};

/// Euclidean division; throws ZeroDivision on a zero divisor.
std::pair<PolynomialQi, PolynomialQi> divmod(const PolynomialQi& a, const PolynomialQi& b);
/// Monic gcd (zero if both inputs are zero).
PolynomialQi gcd(PolynomialQi a, PolynomialQi b);
PolynomialQi pow(const PolynomialQi& p, unsigned exponent);

struct RootMultiplicity {
  Gaussian root;
  unsigned multiplicity = 0;

  friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

struct GaussianRoots {
  /// Distinct roots in Q(i), sorted by (real, imaginary).
  std::vector<RootMultiplicity> roots;
  /// Cofactor with no roots in Q(i): input == remainder * prod (x - r)^m.
  PolynomialQi remainder;

  bool splits() const { return remainder.degree() == 0; }
  int leftover_degree() const { return remainder.degree(); }
};

/// All roots of p lying in Q(i), with multiplicities.  Exact: denominators
/// are cleared, candidates u/v come from Gaussian-integer divisors of the
/// trailing and leading coefficients of the square-free part.
GaussianRoots gaussian_roots(const PolynomialQi& p);

}  // namespace revcert
