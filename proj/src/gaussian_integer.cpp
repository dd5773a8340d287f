#include "revcert/gaussian_integer.hpp"

#include <algorithm>

namespace revcert {

namespace {

// Nearest integer to n / d for d > 0.
Integer round_div(const Integer& n, const Integer& d) {
  Integer twice = 2 * n + d;
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), Integer(2 * d).get_mpz_t());
  return q;
}

bool is_probable_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// Brent's variant of Pollard rho; n odd composite.
Integer pollard_brent(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, q = 1, g = 1, ys;
    const Integer cc = c;
    auto f = [&](const Integer& v) {
      Integer r = v * v + cc;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    unsigned long r = 1;
    constexpr unsigned long m = 64;
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Integer diff = abs(x - y);
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(Integer n, std::vector<Integer>& primes) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    primes.push_back(n);
    return;
  }
  Integer d = pollard_brent(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

}  // namespace

bool divides(const GaussianInteger& y, const GaussianInteger& x, GaussianInteger* quotient) {
  const Integer n = norm(y);
  if (n == 0) return x.re == 0 && x.im == 0;
  // x * conj(y) / n
  Integer re = x.re * y.re + x.im * y.im;
  Integer im = x.im * y.re - x.re * y.im;
  if (!mpz_divisible_p(re.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(im.get_mpz_t(), n.get_mpz_t()))
    return false;
  if (quotient) {
    Integer qr = re / n;
    Integer qi = im / n;
    *quotient = {qr, qi};
  }
  return true;
}

GaussianInteger gcd(GaussianInteger a, GaussianInteger b) {
  while (b.re != 0 || b.im != 0) {
    const Integer n = norm(b);
    Integer re = a.re * b.re + a.im * b.im;
    Integer im = a.im * b.re - a.re * b.im;
    GaussianInteger q{round_div(re, n), round_div(im, n)};
    GaussianInteger qb = q * b;
    GaussianInteger r{a.re - qb.re, a.im - qb.im};
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::pair<Integer, unsigned>> factor_integer(Integer n) {
  if (n <= 0) throw Error(ErrorCode::Internal, "factor_integer expects a positive integer");
  std::vector<Integer> primes;
  for (unsigned long p = 2; p < 1000; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      primes.emplace_back(p);
      n /= p;
    }
    if (n == 1) break;
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Integer, unsigned>> out;
  for (const auto& p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1u);
  }
  return out;
}

namespace {

// Gaussian prime above p = 1 (mod 4).
GaussianInteger split_prime(const Integer& p) {
  const Integer e = (p - 1) / 4;
  for (unsigned long c = 2;; ++c) {
    Integer x;
    mpz_powm(x.get_mpz_t(), Integer(c).get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    Integer sq = x * x + 1;
    if (mpz_divisible_p(sq.get_mpz_t(), p.get_mpz_t())) return gcd(GaussianInteger{p, 0}, GaussianInteger{x, 1});
  }
}

unsigned strip(GaussianInteger& z, const GaussianInteger& prime) {
  unsigned count = 0;
  GaussianInteger q;
  while (divides(prime, z, &q)) {
    z = q;
    ++count;
  }
  return count;
}

}  // namespace

std::vector<std::pair<GaussianInteger, unsigned>> factor_gaussian(const GaussianInteger& z) {
  if (z.re == 0 && z.im == 0) throw Error(ErrorCode::Internal, "factor_gaussian of zero");
  std::vector<std::pair<GaussianInteger, unsigned>> out;
  GaussianInteger rest = z;
  for (const auto& [p, e] : factor_integer(norm(z))) {
    if (p == 2) {
      GaussianInteger pi{1, 1};
      unsigned k = strip(rest, pi);
      if (k) out.emplace_back(pi, k);
    } else if (mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) {
      GaussianInteger pi{p, 0};
      unsigned k = strip(rest, pi);
      if (k) out.emplace_back(pi, k);
    } else {
      GaussianInteger pi = split_prime(p);
      GaussianInteger pibar{pi.re, -pi.im};
      unsigned k1 = strip(rest, pi);
      unsigned k2 = strip(rest, pibar);
      if (k1) out.emplace_back(pi, k1);
      if (k2) out.emplace_back(pibar, k2);
    }
  }
  return out;
}

std::vector<GaussianInteger> divisors_up_to_units(const GaussianInteger& z) {
  std::vector<GaussianInteger> divs{{1, 0}};
  for (const auto& [prime, exponent] : factor_gaussian(z)) {
    std::vector<GaussianInteger> next;
    next.reserve(divs.size() * (exponent + 1));
    for (const auto& d : divs) {
      GaussianInteger power{1, 0};
      for (unsigned k = 0; k <= exponent; ++k) {
        next.push_back(d * power);
        power = power * prime;
      }
    }
    divs = std::move(next);
  }
  return divs;
}

const std::vector<GaussianInteger>& gaussian_units() {
  static const std::vector<GaussianInteger> units{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return units;
}

}  // namespace revcert
