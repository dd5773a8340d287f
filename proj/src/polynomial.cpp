#include "revcert/polynomial.hpp"

#include <algorithm>

#include "revcert/gaussian_integer.hpp"

namespace revcert {

PolynomialQi::PolynomialQi(std::vector<Gaussian> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

PolynomialQi PolynomialQi::constant(Gaussian c) { return PolynomialQi({std::move(c)}); }

PolynomialQi PolynomialQi::x() { return PolynomialQi({Gaussian(0), Gaussian(1)}); }

PolynomialQi PolynomialQi::linear(const Gaussian& root) { return PolynomialQi({-root, Gaussian(1)}); }

void PolynomialQi::trim() {
  while (!coeffs_.empty() && revcert::is_zero(coeffs_.back())) coeffs_.pop_back();
}

bool PolynomialQi::is_monic() const { return !coeffs_.empty() && coeffs_.back() == Gaussian(1); }

PolynomialQi PolynomialQi::monic() const {
  if (is_zero()) return *this;
  const Gaussian inv = inverse(leading());
  PolynomialQi out = *this;
  for (auto& c : out.coeffs_) c *= inv;
  return out;
}

PolynomialQi PolynomialQi::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Gaussian> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    d[k - 1] = Gaussian(static_cast<long>(k)) * coeffs_[k];
  return PolynomialQi(std::move(d));
}

Gaussian PolynomialQi::evaluate(const Gaussian& at) const {
  Gaussian acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

PolynomialQi& PolynomialQi::operator+=(const PolynomialQi& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

PolynomialQi& PolynomialQi::operator-=(const PolynomialQi& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

PolynomialQi operator-(const PolynomialQi& a) {
  PolynomialQi out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

PolynomialQi operator*(const PolynomialQi& a, const PolynomialQi& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Gaussian> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (is_zero(a.coeffs_[i])) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return PolynomialQi(std::move(out));
}

PolynomialQi operator*(const Gaussian& s, const PolynomialQi& p) {
  std::vector<Gaussian> out = p.coeffs_;
  for (auto& c : out) c = s * c;
  return PolynomialQi(std::move(out));
}

std::string PolynomialQi::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Gaussian& c = coeffs_[k];
    if (revcert::is_zero(c)) continue;
    if (!out.empty()) out += " + ";
    const bool unit = c == Gaussian(1) && k > 0;
    if (!unit) out += c.is_real() || k == 0 ? format_scalar(c) : "(" + format_scalar(c) + ")";
    if (k > 0) out += k == 1 ? "x" : "x^" + std::to_string(k);
  }
  return out;
}

std::pair<PolynomialQi, PolynomialQi> divmod(const PolynomialQi& a, const PolynomialQi& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroDivision, "polynomial division by zero");
  if (a.degree() < b.degree()) return {PolynomialQi(), a};
  std::vector<Gaussian> rem = a.coefficients();
  std::vector<Gaussian> quot(rem.size() - b.coefficients().size() + 1);
  const Gaussian lead_inv = inverse(b.leading());
  const std::size_t db = b.coefficients().size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Gaussian& top = rem[k + db];
    if (is_zero(top)) continue;
    Gaussian q = top * lead_inv;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coefficients()[j];
    quot[k] = std::move(q);
  }
  rem.resize(db);
  return {PolynomialQi(std::move(quot)), PolynomialQi(std::move(rem))};
}

PolynomialQi gcd(PolynomialQi a, PolynomialQi b) {
  while (!b.is_zero()) {
    PolynomialQi r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

PolynomialQi pow(const PolynomialQi& p, unsigned exponent) {
  PolynomialQi out = PolynomialQi::constant(Gaussian(1));
  for (unsigned k = 0; k < exponent; ++k) out = out * p;
  return out;
}

namespace {

// Scales p to a primitive polynomial with Gaussian-integer coefficients.
std::vector<GaussianInteger> integral_primitive(const PolynomialQi& p) {
  Integer lcm = 1;
  for (const auto& c : p.coefficients()) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.re.get_den_mpz_t());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.im.get_den_mpz_t());
  }
  std::vector<GaussianInteger> out;
  out.reserve(p.coefficients().size());
  GaussianInteger content{0, 0};
  for (const auto& c : p.coefficients()) {
    Rational re = c.re * lcm, im = c.im * lcm;
    out.push_back({re.get_num(), im.get_num()});
    content = gcd(content, out.back());
  }
  for (auto& c : out) divides(content, c, &c);
  return out;
}

Gaussian to_gaussian(const GaussianInteger& z) { return {Rational(z.re), Rational(z.im)}; }

}  // namespace

GaussianRoots gaussian_roots(const PolynomialQi& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroDivision, "gaussian_roots of the zero polynomial");
  GaussianRoots out;
  std::vector<Gaussian> distinct;

  std::size_t zero_mult = 0;
  while (is_zero(p.coefficient(zero_mult))) ++zero_mult;
  if (zero_mult > 0) distinct.emplace_back(0);

  std::vector<Gaussian> shifted(p.coefficients().begin() + static_cast<std::ptrdiff_t>(zero_mult),
                                p.coefficients().end());
  const PolynomialQi nonzero_part(std::move(shifted));
  if (nonzero_part.degree() > 0) {
    const PolynomialQi squarefree = divmod(nonzero_part, gcd(nonzero_part, nonzero_part.derivative())).first;
    const auto coeffs = integral_primitive(squarefree);
    const auto numerators = divisors_up_to_units(coeffs.front());
    const auto denominators = divisors_up_to_units(coeffs.back());
    const std::size_t wanted = static_cast<std::size_t>(squarefree.degree());
    std::size_t found = 0;
    for (const auto& v : denominators) {
      const Gaussian vinv = inverse(to_gaussian(v));
      for (const auto& u0 : numerators) {
        for (const auto& unit : gaussian_units()) {
          const Gaussian candidate = to_gaussian(u0 * unit) * vinv;
          if (std::find(distinct.begin(), distinct.end(), candidate) != distinct.end()) continue;
          if (is_zero(squarefree.evaluate(candidate))) {
            distinct.push_back(candidate);
            if (++found == wanted) goto done;
          }
        }
      }
    }
  done:;
  }

  std::sort(distinct.begin(), distinct.end(),
            [](const Gaussian& x, const Gaussian& y) { return lex_compare(x, y) < 0; });
  PolynomialQi rest = p;
  for (const auto& r : distinct) {
    const PolynomialQi factor = PolynomialQi::linear(r);
    unsigned mult = 0;
    for (;;) {
      auto [q, rem] = divmod(rest, factor);
      if (!rem.is_zero()) break;
      rest = std::move(q);
      ++mult;
    }
    out.roots.push_back({r, mult});
  }
  out.remainder = std::move(rest);
  return out;
}

}  // namespace revcert
