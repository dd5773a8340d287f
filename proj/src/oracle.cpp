#include "revcert/oracle.hpp"

#include <random>

#include "revcert/canonical.hpp"
#include "revcert/linalg.hpp"
#include "revcert/polynomial.hpp"

namespace revcert {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Confirmed: return "confirmed";
    case Outcome::Refuted: return "refuted";
    case Outcome::Inconclusive: return "inconclusive";
  }
  return "?";
}

Outcome parse_outcome(std::string_view text) {
  if (text == "confirmed") return Outcome::Confirmed;
  if (text == "refuted") return Outcome::Refuted;
  if (text == "inconclusive") return Outcome::Inconclusive;
  throw Error(ErrorCode::ParseError, "unknown oracle outcome '" + std::string(text) + "'");
}

namespace {

/// Ranks of (A - r)^k for k = 1..m, for each root r of multiplicity m.
std::vector<std::size_t> rank_profile(const ComplexMatrix& a, const GaussianRoots& spectrum) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> out;
  for (const auto& [root, mult] : spectrum.roots) {
    ComplexMatrix shifted = a;
    for (std::size_t t = 0; t < n; ++t) shifted(t, t) -= root;
    ComplexMatrix power = shifted;
    for (unsigned k = 1; k <= mult; ++k) {
      out.push_back(rank(power));
      if (k < mult) power = power * shifted;
    }
  }
  return out;
}

bool similar(const ComplexMatrix& a, const ComplexMatrix& b) {
  const PolynomialQi p = char_poly(a);
  if (p != char_poly(b)) return false;
  const GaussianRoots spectrum = gaussian_roots(p);
  if (!spectrum.splits()) return invariant_factors(a) == invariant_factors(b);
  return rank_profile(a, spectrum) == rank_profile(b, spectrum);
}

}  // namespace

bool similarity_oracle(const Matrix& a, const Matrix& b) {
  if (a.domain() != b.domain()) throw Error(ErrorCode::DomainMismatch, "similarity_oracle: domains differ");
  if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::ShapeMismatch, "similarity_oracle: shapes differ");
  if (a.domain() == ScalarDomain::H) return similar(to_complex(complex_adjoint(a)), to_complex(complex_adjoint(b)));
  return similar(to_complex(a), to_complex(b));
}

namespace {

std::size_t units_of(ScalarDomain d) {
  switch (d) {
    case ScalarDomain::R: return 1;
    case ScalarDomain::C: return 2;
    case ScalarDomain::H: return 4;
  }
  return 1;
}

Quaternion unit(std::size_t t) {
  switch (t) {
    case 0: return Quaternion(1);
    case 1: return Quaternion::i();
    case 2: return Quaternion::j();
    default: return Quaternion::k();
  }
}

const Rational& coordinate(const Quaternion& q, std::size_t t) {
  switch (t) {
    case 0: return q.a;
    case 1: return q.b;
    case 2: return q.c;
    default: return q.d;
  }
}

/// Columns of the result span the solutions g of g A - T g = 0, written in
/// real coordinates (entry-major, unit-minor).
RationalMatrix reverser_space(const Matrix& a, const Matrix& t) {
  const std::size_t n = a.rows();
  const std::size_t u = units_of(a.domain());
  const std::size_t unknowns = n * n * u;
  RationalMatrix system(unknowns, unknowns);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t k = 0; k < u; ++k) {
        Matrix e(a.domain(), n, n);
        e.set(r, c, unit(k));
        const Matrix image = e * a - t * e;
        const std::size_t col = (r * n + c) * u + k;
        for (std::size_t rr = 0; rr < n; ++rr)
          for (std::size_t cc = 0; cc < n; ++cc)
            for (std::size_t kk = 0; kk < u; ++kk)
              system((rr * n + cc) * u + kk, col) = coordinate(image(rr, cc), kk);
      }
  return nullspace(system);
}

Matrix from_coordinates(ScalarDomain domain, std::size_t n, const std::vector<Rational>& x) {
  const std::size_t u = units_of(domain);
  Matrix g(domain, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Quaternion q;
      for (std::size_t k = 0; k < u; ++k) q += Quaternion(x[(r * n + c) * u + k]) * unit(k);
      g.set(r, c, std::move(q));
    }
  return g;
}

/// g / r when g^2 = r^2 I with r > 0.
std::optional<Matrix> normalize_involution(const Matrix& g) {
  const std::size_t n = g.rows();
  const Matrix sq = g * g;
  const Quaternion& c = sq(0, 0);
  if (!c.is_real() || sgn(c.a) <= 0) return std::nullopt;
  if (sq != scale(c, Matrix::identity(g.domain(), n))) return std::nullopt;
  const auto root = rational_sqrt(c.a);
  if (!root) return std::nullopt;
  return scale(Quaternion(inverse(*root)), g);
}

}  // namespace

OracleReport involution_search(const Matrix& a, Level mode, std::size_t budget, std::uint64_t seed) {
  if (!a.is_square()) throw Error(ErrorCode::ShapeMismatch, "involution_search: matrix is not square");
  const std::size_t n = a.rows();
  Matrix target;
  if (mode == Level::Lie) {
    target = -a;
  } else {
    const auto inv = try_inverse(a.entries());
    if (!inv) throw Error(ErrorCode::SingularInput, "involution_search: group mode needs an invertible matrix");
    target = mat_inverse(a);
  }

  OracleReport report;
  if (budget == 0 || n == 0) return report;
  const RationalMatrix basis = reverser_space(a, target);
  const std::size_t dim = basis.cols();
  if (dim == 0) {
    report.attempts = 1;
    return report;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coefficient(-3, 3);
  const Matrix id = Matrix::identity(a.domain(), n);
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    report.attempts = attempt + 1;
    Matrix candidate;
    if (attempt < 2) {
      // +-I first: they reverse exactly the matrices with A = T.
      candidate = attempt == 0 ? id : -id;
      if (candidate * a != target * candidate) continue;
    } else {
      std::vector<Rational> x(basis.rows());
      for (std::size_t k = 0; k < dim; ++k) {
        const int w = coefficient(rng);
        if (w == 0) continue;
        for (std::size_t r = 0; r < basis.rows(); ++r)
          if (!is_zero(basis(r, k))) x[r] += Rational(w) * basis(r, k);
      }
      candidate = from_coordinates(a.domain(), n, x);
      if (candidate.is_zero()) continue;
    }
    const auto g = normalize_involution(candidate);
    if (!g) continue;
    Witness w{*g, mode, {}};
    try {
      certify(a, w);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CertificationFailed) throw;
      continue;
    }
    report.outcome = Outcome::Confirmed;
    report.evidence = std::move(w);
    return report;
  }
  return report;
}

Answer decide_1x1(const Quaternion& q, Level mode) {
  if (mode == Level::Lie) return is_zero(q) ? Answer::Yes : Answer::No;
  if (is_zero(q)) throw Error(ErrorCode::ZeroDivision, "decide_1x1: 0 has no inverse");
  return q == Quaternion(1) || q == Quaternion(-1) ? Answer::Yes : Answer::No;
}

}  // namespace revcert
