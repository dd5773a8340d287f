#pragma once

// Hand-rolled random generators for the property tests.

#include <random>
#include <vector>

#include "revcert/canonical.hpp"
#include "revcert/matrix.hpp"

namespace revcert::testing {

inline Rational small_rational(std::mt19937_64& rng, long bound = 3) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, 3);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Gaussian small_gaussian(std::mt19937_64& rng) { return {small_rational(rng), small_rational(rng)}; }

inline Quaternion small_scalar(std::mt19937_64& rng, ScalarDomain d) {
  switch (d) {
    case ScalarDomain::R: return Quaternion(small_rational(rng));
    case ScalarDomain::C: return Quaternion(small_rational(rng), small_rational(rng));
    case ScalarDomain::H:
      return Quaternion(small_rational(rng), small_rational(rng), small_rational(rng), small_rational(rng));
  }
  return {};
}

inline Matrix random_matrix(std::mt19937_64& rng, ScalarDomain d, std::size_t rows, std::size_t cols) {
  Matrix m(d, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, small_scalar(rng, d));
  return m;
}

/// Random invertible matrix: resample until the rank is full.
inline Matrix random_invertible(std::mt19937_64& rng, ScalarDomain d, std::size_t n) {
  for (;;) {
    Matrix m = random_matrix(rng, d, n, n);
    if (try_inverse(m.entries())) return m;
  }
}

/// T N T^{-1} for a random strictly upper triangular N.
inline Matrix random_nilpotent(std::mt19937_64& rng, ScalarDomain d, std::size_t n) {
  Matrix strict(d, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c) strict.set(r, c, small_scalar(rng, d));
  const Matrix t = random_invertible(rng, d, n);
  return t * strict * mat_inverse(t);
}

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Random canonical spec of dimension at most max_dim over small Q(i)
/// eigenvalues; zero eigenvalues are skipped when `invertible` is set.
inline JordanSpec random_spec(std::mt19937_64& rng, ScalarDomain d, std::size_t max_dim, bool invertible = false) {
  static const std::vector<Gaussian> pool{
      Gaussian(0),  Gaussian(1),  Gaussian(-1),          Gaussian(2),
      Gaussian(Rational(1, 2)), Gaussian(0, 1),          Gaussian(0, 2),
      Gaussian(1, 1), Gaussian(-1, 1), Gaussian(Rational(1, 2), Rational(1, 2)),
      Gaussian(Rational(3, 5), Rational(4, 5)), Gaussian(-2, 1), Gaussian(0, -1)};
  JordanSpec spec{d, {}};
  const std::size_t target = uniform(rng, 1, max_dim);
  std::size_t used = 0;
  for (int tries = 0; used < target && tries < 40; ++tries) {
    Gaussian z = pool[uniform(rng, 0, pool.size() - 1)];
    if (invertible && is_zero(z)) continue;
    const std::size_t size = uniform(rng, 1, std::min<std::size_t>(3, target - used));
    JordanBlock b{z, size, false};
    if (d != ScalarDomain::C) b.eigenvalue.im = abs(z.im);
    if (d == ScalarDomain::R && !z.is_real()) b.real_complex_pair = true;
    if (used + b.dimension() > target) continue;
    used += b.dimension();
    spec.blocks.push_back(b);
  }
  if (spec.blocks.empty()) spec.blocks.push_back({Gaussian(1), 1, false});
  return canonicalize(std::move(spec));
}

}  // namespace revcert::testing
