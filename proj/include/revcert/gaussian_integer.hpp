#pragma once

#include <utility>
#include <vector>

#include "revcert/scalars.hpp"

namespace revcert {

/// Element of Z[i].
struct GaussianInteger {
  Integer re;
  Integer im;

  friend bool operator==(const GaussianInteger&, const GaussianInteger&) = default;
};

inline GaussianInteger operator*(const GaussianInteger& x, const GaussianInteger& y) {
  Integer r = x.re * y.re - x.im * y.im;
  Integer i = x.re * y.im + x.im * y.re;
  return {r, i};
}

inline Integer norm(const GaussianInteger& z) { return z.re * z.re + z.im * z.im; }

/// Exact quotient x / y if y divides x in Z[i].
bool divides(const GaussianInteger& y, const GaussianInteger& x, GaussianInteger* quotient = nullptr);

/// Greatest common divisor (up to units) via the Euclidean algorithm.
GaussianInteger gcd(GaussianInteger a, GaussianInteger b);

/// Factorisation of a positive rational integer into primes with exponents.
std::vector<std::pair<Integer, unsigned>> factor_integer(Integer n);

/// Gaussian-prime factorisation of a nonzero z, up to a unit.
std::vector<std::pair<GaussianInteger, unsigned>> factor_gaussian(const GaussianInteger& z);

/// One divisor per associate class (unit factor omitted) of a nonzero z.
std::vector<GaussianInteger> divisors_up_to_units(const GaussianInteger& z);

/// The four units 1, i, -1, -i.
const std::vector<GaussianInteger>& gaussian_units();

}  // namespace revcert
