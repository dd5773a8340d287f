#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "revcert/error.hpp"

namespace revcert {

using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
Rational inverse(const Rational& x);
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& x);
/// Exact square root when x is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& x);

// ---------------------------------------------------------------------------
// Gaussian rationals Q(i).  Used for all commutative (R and C) linear algebra.

struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() = default;
  Gaussian(Rational r) : re(std::move(r)) {}
  Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  Gaussian(long r) : re(r) {}

  bool is_real() const { return sgn(im) == 0; }

  Gaussian& operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o);

  friend Gaussian operator+(Gaussian x, const Gaussian& y) { return x += y; }
  friend Gaussian operator-(Gaussian x, const Gaussian& y) { return x -= y; }
  friend Gaussian operator*(Gaussian x, const Gaussian& y) { return x *= y; }
  friend Gaussian operator-(const Gaussian& x) { return {-x.re, -x.im}; }
  friend bool operator==(const Gaussian& x, const Gaussian& y) {
    return x.re == y.re && x.im == y.im;
  }
};

inline bool is_zero(const Gaussian& z) { return sgn(z.re) == 0 && sgn(z.im) == 0; }
inline Gaussian conj(const Gaussian& z) { return {z.re, -z.im}; }
inline Rational norm2(const Gaussian& z) { return z.re * z.re + z.im * z.im; }
Gaussian inverse(const Gaussian& z);
Gaussian operator/(const Gaussian& x, const Gaussian& y);

/// Lexicographic (real, imaginary) order used for canonical block ordering.
std::strong_ordering lex_compare(const Gaussian& x, const Gaussian& y);

// ---------------------------------------------------------------------------
// Quaternions a + b i + c j + d k with rational coordinates.

struct Quaternion {
  Rational a;
  Rational b;
  Rational c;
  Rational d;

  Quaternion() = default;
  Quaternion(Rational a_, Rational b_ = 0, Rational c_ = 0, Rational d_ = 0)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}
  Quaternion(long x) : a(x) {}
  Quaternion(const Gaussian& z) : a(z.re), b(z.im) {}

  static Quaternion i() { return {0, 1, 0, 0}; }
  static Quaternion j() { return {0, 0, 1, 0}; }
  static Quaternion k() { return {0, 0, 0, 1}; }

  bool is_real() const { return sgn(b) == 0 && sgn(c) == 0 && sgn(d) == 0; }
  bool is_complex() const { return sgn(c) == 0 && sgn(d) == 0; }
  Gaussian to_gaussian() const;

  Quaternion& operator+=(const Quaternion& o);
  Quaternion& operator-=(const Quaternion& o);
  Quaternion& operator*=(const Quaternion& o);

  friend Quaternion operator+(Quaternion x, const Quaternion& y) { return x += y; }
  friend Quaternion operator-(Quaternion x, const Quaternion& y) { return x -= y; }
  friend Quaternion operator*(Quaternion x, const Quaternion& y) { return x *= y; }
  friend Quaternion operator-(const Quaternion& x) { return {-x.a, -x.b, -x.c, -x.d}; }
  friend bool operator==(const Quaternion& x, const Quaternion& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

inline bool is_zero(const Quaternion& q) {
  return sgn(q.a) == 0 && sgn(q.b) == 0 && sgn(q.c) == 0 && sgn(q.d) == 0;
}
Quaternion conj(const Quaternion& q);
Rational norm2(const Quaternion& q);
Quaternion inverse(const Quaternion& q);

/// Hamilton product; the named form of operator*.
inline Quaternion quat_product(const Quaternion& x, const Quaternion& y) { return x * y; }
inline Quaternion quat_inverse(const Quaternion& x) { return inverse(x); }

/// Text grammar: "p/q", "re+im i", "a+bi+cj+dk" with any subset of terms.
Quaternion parse_scalar(std::string_view text);
std::string format_scalar(const Quaternion& q);
std::string format_scalar(const Gaussian& z);

// ---------------------------------------------------------------------------
// Domains and eigenvalue classes.

enum class ScalarDomain { R, C, H };

std::string_view to_string(ScalarDomain d);
ScalarDomain parse_domain(std::string_view text);
/// True when q satisfies the coefficient constraint of the domain.
bool admits(ScalarDomain d, const Quaternion& q);

/// Representative of an eigenvalue similarity class.  For H the imaginary
/// part is non-negative; for R a non-real representative has positive
/// imaginary part and stands for the conjugate pair.
struct EigenvalueClass {
  Gaussian representative;
  ScalarDomain domain = ScalarDomain::C;

  friend bool operator==(const EigenvalueClass&, const EigenvalueClass&) = default;
};

struct RepresentativeWitness {
  EigenvalueClass eigenvalue;
  /// s with s * q * s^{-1} == representative.
  Quaternion conjugator;
};

/// Complex representative a + |v| i of q = a + v; fails off Q(i).
RepresentativeWitness class_representative_with_witness(const Quaternion& q);
EigenvalueClass class_representative(const Quaternion& q);

EigenvalueClass class_negate(const EigenvalueClass& x);
EigenvalueClass class_invert(const EigenvalueClass& x);

}  // namespace revcert
