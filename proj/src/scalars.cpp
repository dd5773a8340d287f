#include "revcert/scalars.hpp"

#include <cctype>

namespace revcert {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroDivision: return "ZeroDivision";
    case ErrorCode::RepresentativeOutsideQi: return "RepresentativeOutsideQi";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NonSplittingSpectrum: return "NonSplittingSpectrum";
    case ErrorCode::NotSimilar: return "NotSimilar";
    case ErrorCode::SingularSpec: return "SingularSpec";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::PlanMismatch: return "PlanMismatch";
    case ErrorCode::CertificationFailed: return "CertificationFailed";
    case ErrorCode::SingularInput: return "SingularInput";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

// --- rationals --------------------------------------------------------------

Rational inverse(const Rational& x) {
  if (is_zero(x)) throw Error(ErrorCode::ZeroDivision, "inverse of rational zero");
  Rational r = 1 / x;
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s = strip_spaces(text);
  std::string_view body = s;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::ZeroDivision, "zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string format_rational(const Rational& x) { return x.get_str(10); }

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (sgn(x) < 0) return std::nullopt;
  Integer num = x.get_num();
  Integer den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  Integer rn = sqrt(num);
  Integer rd = sqrt(den);
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

// --- Gaussian rationals -----------------------------------------------------

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Gaussian inverse(const Gaussian& z) {
  Rational n = norm2(z);
  if (is_zero(n)) throw Error(ErrorCode::ZeroDivision, "inverse of Gaussian zero");
  Rational r = z.re / n;
  Rational i = -z.im / n;
  return {r, i};
}

Gaussian operator/(const Gaussian& x, const Gaussian& y) { return x * inverse(y); }

std::strong_ordering lex_compare(const Gaussian& x, const Gaussian& y) {
  int c = cmp(x.re, y.re);
  if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  c = cmp(x.im, y.im);
  if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// --- quaternions ------------------------------------------------------------

Gaussian Quaternion::to_gaussian() const {
  if (!is_complex())
    throw Error(ErrorCode::DomainMismatch, "quaternion " + format_scalar(*this) + " is not in Q(i)");
  return {a, b};
}

Quaternion& Quaternion::operator+=(const Quaternion& o) {
  a += o.a;
  b += o.b;
  c += o.c;
  d += o.d;
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) {
  a -= o.a;
  b -= o.b;
  c -= o.c;
  d -= o.d;
  return *this;
}

Quaternion& Quaternion::operator*=(const Quaternion& o) {
  // (a1 + b1 i + c1 j + d1 k)(a2 + b2 i + c2 j + d2 k) with ij = k, jk = i, ki = j.
  Rational na = a * o.a - b * o.b - c * o.c - d * o.d;
  Rational nb = a * o.b + b * o.a + c * o.d - d * o.c;
  Rational nc = a * o.c - b * o.d + c * o.a + d * o.b;
  Rational nd = a * o.d + b * o.c - c * o.b + d * o.a;
  a = std::move(na);
  b = std::move(nb);
  c = std::move(nc);
  d = std::move(nd);
  return *this;
}

Quaternion conj(const Quaternion& q) { return {q.a, -q.b, -q.c, -q.d}; }

Rational norm2(const Quaternion& q) { return q.a * q.a + q.b * q.b + q.c * q.c + q.d * q.d; }

Quaternion inverse(const Quaternion& q) {
  Rational n = norm2(q);
  if (is_zero(n)) throw Error(ErrorCode::ZeroDivision, "inverse of quaternion zero");
  Rational a = q.a / n, b = -q.b / n, c = -q.c / n, d = -q.d / n;
  return {a, b, c, d};
}

Quaternion parse_scalar(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty scalar");
  Quaternion q;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw Error(ErrorCode::ParseError, "expected sign in scalar '" + s + "'");
    }
    std::size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
    std::string_view number(s.data() + start, pos - start);
    if (pos < s.size() && s[pos] == '*') {
      if (number.empty()) throw Error(ErrorCode::ParseError, "dangling '*' in scalar '" + s + "'");
      ++pos;
    }
    char unit = '1';
    if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'j' || s[pos] == 'k')) unit = s[pos++];
    if (number.empty() && unit == '1')
      throw Error(ErrorCode::ParseError, "malformed term in scalar '" + s + "'");
    Rational coeff = number.empty() ? Rational(1) : parse_rational(number);
    if (negative) coeff = -coeff;
    switch (unit) {
      case 'i': q.b += coeff; break;
      case 'j': q.c += coeff; break;
      case 'k': q.d += coeff; break;
      default: q.a += coeff; break;
    }
  }
  return q;
}

std::string format_scalar(const Quaternion& q) {
  std::string out;
  auto term = [&out](const Rational& x, const char* unit) {
    if (is_zero(x)) return;
    bool negative = sgn(x) < 0;
    Rational mag = abs(x);
    if (negative)
      out += '-';
    else if (!out.empty())
      out += '+';
    if (*unit == '\0' || mag != 1) out += format_rational(mag);
    out += unit;
  };
  term(q.a, "");
  term(q.b, "i");
  term(q.c, "j");
  term(q.d, "k");
  return out.empty() ? "0" : out;
}

std::string format_scalar(const Gaussian& z) { return format_scalar(Quaternion(z)); }

// --- domains and classes ----------------------------------------------------

std::string_view to_string(ScalarDomain d) {
  switch (d) {
    case ScalarDomain::R: return "R";
    case ScalarDomain::C: return "C";
    case ScalarDomain::H: return "H";
  }
  return "?";
}

ScalarDomain parse_domain(std::string_view text) {
  if (text == "R") return ScalarDomain::R;
  if (text == "C") return ScalarDomain::C;
  if (text == "H") return ScalarDomain::H;
  throw Error(ErrorCode::ParseError, "unknown domain '" + std::string(text) + "'");
}

bool admits(ScalarDomain d, const Quaternion& q) {
  switch (d) {
    case ScalarDomain::R: return q.is_real();
    case ScalarDomain::C: return q.is_complex();
    case ScalarDomain::H: return true;
  }
  return false;
}

RepresentativeWitness class_representative_with_witness(const Quaternion& q) {
  Rational v2 = q.b * q.b + q.c * q.c + q.d * q.d;
  auto r = rational_sqrt(v2);
  if (!r)
    throw Error(ErrorCode::RepresentativeOutsideQi,
                "class of " + format_scalar(q) + " has no representative in Q(i)");
  RepresentativeWitness out;
  out.eigenvalue = {Gaussian(q.a, *r), ScalarDomain::H};
  if (is_zero(*r)) {
    out.conjugator = Quaternion(1);
    return out;
  }
  // For pure v with |v| = r, s = r - i v satisfies s v = r i s, unless v = -r i.
  Quaternion v(0, q.b, q.c, q.d);
  Quaternion s = Quaternion(*r) - Quaternion::i() * v;
  if (is_zero(s)) s = Quaternion::j();
  out.conjugator = s;
  return out;
}

EigenvalueClass class_representative(const Quaternion& q) {
  return class_representative_with_witness(q).eigenvalue;
}

EigenvalueClass class_negate(const EigenvalueClass& x) {
  const Gaussian& z = x.representative;
  switch (x.domain) {
    case ScalarDomain::C: return {-z, x.domain};
    case ScalarDomain::R:
    case ScalarDomain::H: return {Gaussian(-z.re, z.im), x.domain};
  }
  return x;
}

EigenvalueClass class_invert(const EigenvalueClass& x) {
  const Gaussian& z = x.representative;
  if (is_zero(z)) throw Error(ErrorCode::ZeroDivision, "class_invert of zero eigenvalue");
  switch (x.domain) {
    case ScalarDomain::C: return {inverse(z), x.domain};
    case ScalarDomain::R:
    case ScalarDomain::H: {
      Rational n = norm2(z);
      Rational re = z.re / n, im = z.im / n;
      return {Gaussian(re, im), x.domain};
    }
  }
  return x;
}

}  // namespace revcert
