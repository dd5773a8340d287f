#include "revcert/canonical.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace revcert {

// --- specs and blocks -------------------------------------------------------

std::size_t JordanSpec::dimension() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.dimension();
  return n;
}

void validate(const JordanSpec& spec) {
  if (spec.blocks.empty()) throw Error(ErrorCode::ShapeMismatch, "Jordan spec has no blocks");
  for (const auto& b : spec.blocks) {
    const std::string where = "block (" + format_scalar(b.eigenvalue) + ", " + std::to_string(b.size) + ")";
    if (b.size == 0) throw Error(ErrorCode::ShapeMismatch, where + ": size must be positive");
    switch (spec.domain) {
      case ScalarDomain::R:
        if (b.real_complex_pair && sgn(b.eigenvalue.im) <= 0)
          throw Error(ErrorCode::DomainMismatch, where + ": real complex pair needs positive imaginary part");
        if (!b.real_complex_pair && !b.eigenvalue.is_real())
          throw Error(ErrorCode::DomainMismatch, where + ": non-real eigenvalue over R must be a complex pair");
        break;
      case ScalarDomain::C:
        if (b.real_complex_pair) throw Error(ErrorCode::DomainMismatch, where + ": complex pair flag over C");
        break;
      case ScalarDomain::H:
        if (b.real_complex_pair) throw Error(ErrorCode::DomainMismatch, where + ": complex pair flag over H");
        if (sgn(b.eigenvalue.im) < 0)
          throw Error(ErrorCode::DomainMismatch, where + ": class representative needs imaginary part >= 0");
        break;
    }
  }
}

namespace {

bool canonical_less(const JordanBlock& x, const JordanBlock& y) {
  auto c = lex_compare(x.eigenvalue, y.eigenvalue);
  if (c != 0) return c < 0;
  return x.size > y.size;
}

}  // namespace

JordanSpec canonicalize(JordanSpec spec) {
  validate(spec);
  std::stable_sort(spec.blocks.begin(), spec.blocks.end(), canonical_less);
  return spec;
}

Matrix build_block(const JordanBlock& block, ScalarDomain domain) {
  ComplexMatrix j(block.size, block.size);
  for (std::size_t i = 0; i < block.size; ++i) {
    j(i, i) = block.eigenvalue;
    if (i + 1 < block.size) j(i, i + 1) = Gaussian(1);
  }
  if (block.real_complex_pair) {
    if (domain != ScalarDomain::R) throw Error(ErrorCode::DomainMismatch, "complex pair block outside R");
    return psi_embed(from_complex(ScalarDomain::C, j));
  }
  return from_complex(domain, j);
}

Matrix assemble(const JordanSpec& spec) {
  std::vector<Matrix> parts;
  parts.reserve(spec.blocks.size());
  for (const auto& b : spec.blocks) parts.push_back(build_block(b, spec.domain));
  return block_compose(parts, BlockLayout::Diagonal);
}

// --- characteristic polynomial ------------------------------------------------

PolynomialQi char_poly(const ComplexMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::ShapeMismatch, "char_poly of non-square matrix");
  const std::size_t n = a.rows();
  // Similarity reduction to upper Hessenberg form, then the classical
  // three-term recurrence over leading principal submatrices.
  ComplexMatrix h = a;
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && is_zero(h(i, m - 1))) ++i;
    if (i == n) continue;
    if (i != m) {
      h.swap_rows(i, m);
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, i), h(r, m));
    }
    const Gaussian pivot_inv = inverse(h(m, m - 1));
    for (std::size_t r = m + 1; r < n; ++r) {
      if (is_zero(h(r, m - 1))) continue;
      const Gaussian u = h(r, m - 1) * pivot_inv;
      for (std::size_t c = 0; c < n; ++c)
        if (!is_zero(h(m, c))) h(r, c) -= u * h(m, c);
      for (std::size_t c = 0; c < n; ++c)
        if (!is_zero(h(c, r))) h(c, m) += u * h(c, r);
    }
  }
  std::vector<PolynomialQi> p(n + 1);
  p[0] = PolynomialQi::constant(Gaussian(1));
  for (std::size_t m = 1; m <= n; ++m) {
    p[m] = (PolynomialQi::x() - PolynomialQi::constant(h(m - 1, m - 1))) * p[m - 1];
    Gaussian t(1);
    for (std::size_t i = m - 1; i >= 1; --i) {
      t *= h(i, i - 1);
      if (is_zero(t)) break;
      const Gaussian coeff = t * h(i - 1, m - 1);
      if (!is_zero(coeff)) p[m] -= coeff * p[i - 1];
    }
  }
  return p[n];
}

PolynomialQi char_poly(const Matrix& a) {
  if (a.domain() == ScalarDomain::H)
    throw Error(ErrorCode::DomainMismatch, "char_poly needs a commutative domain; use complex_adjoint");
  return char_poly(to_complex(a));
}

// --- Jordan chains ------------------------------------------------------------

namespace {

using Vec = std::vector<Gaussian>;

Vec mat_vec(const ComplexMatrix& m, const Vec& v) {
  Vec out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!is_zero(m(r, c)) && !is_zero(v[c])) out[r] += m(r, c) * v[c];
  return out;
}

/// theta([u; w]) = [-conj w; conj u]: the action of right multiplication by j
/// on C^{2n} = H^n, which commutes with chi(A).
Vec theta(const Vec& v) {
  const std::size_t n = v.size() / 2;
  Vec out(v.size());
  for (std::size_t r = 0; r < n; ++r) {
    out[r] = -conj(v[n + r]);
    out[n + r] = conj(v[r]);
  }
  return out;
}

/// Incrementally maintained echelon basis for independence tests.
class EchelonBasis {
 public:
  /// Adds v if independent of the current span; returns whether it was added.
  bool insert(Vec v) {
    for (const auto& [pivot, b] : basis_) {
      if (is_zero(v[pivot])) continue;
      const Gaussian f = v[pivot];
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!is_zero(b[i])) v[i] -= f * b[i];
    }
    std::size_t pivot = 0;
    while (pivot < v.size() && is_zero(v[pivot])) ++pivot;
    if (pivot == v.size()) return false;
    const Gaussian inv = inverse(v[pivot]);
    for (auto& x : v) x *= inv;
    basis_.emplace_back(pivot, std::move(v));
    return true;
  }
  std::size_t size() const { return basis_.size(); }

 private:
  std::vector<std::pair<std::size_t, Vec>> basis_;
};

struct Chain {
  /// p_1 (eigenvector) ... p_k with (A - lambda) p_j = p_{j-1}.
  std::vector<Vec> vectors;
};

/// Jordan chains of `a` at `lambda`, longest first.  With `quaternionic`
/// set (lambda real, a = chi(A)), only one chain of each theta-pair is
/// returned and independence is taken modulo the theta-images.
std::vector<Chain> jordan_chains(const ComplexMatrix& a, const Gaussian& lambda, std::size_t alg_mult,
                                 bool quaternionic) {
  const std::size_t n = a.rows();
  ComplexMatrix nil = a;
  for (std::size_t i = 0; i < n; ++i) nil(i, i) -= lambda;

  // kernels[k] = basis of ker nil^k (as columns), k >= 1.
  std::vector<ComplexMatrix> kernels{ComplexMatrix(n, 0)};
  ComplexMatrix power = ComplexMatrix::identity(n);
  while (kernels.back().cols() < alg_mult) {
    power = power * nil;
    kernels.push_back(nullspace(power));
    if (kernels.size() > n + 1) throw Error(ErrorCode::Internal, "generalized eigenspace did not stabilise");
  }
  const std::size_t index = kernels.size() - 1;

  std::vector<Vec> tops;        // chain tops returned to the caller, with level
  std::vector<std::size_t> top_level;
  std::vector<Vec> shadow_tops; // theta images (quaternionic only)
  std::vector<std::size_t> shadow_level;

  for (std::size_t k = index; k >= 1; --k) {
    EchelonBasis span;
    for (std::size_t c = 0; c < kernels[k - 1].cols(); ++c) {
      Vec v(n);
      for (std::size_t r = 0; r < n; ++r) v[r] = kernels[k - 1](r, c);
      span.insert(std::move(v));
    }
    auto push_descendants = [&](const std::vector<Vec>& ts, const std::vector<std::size_t>& levels) {
      for (std::size_t t = 0; t < ts.size(); ++t) {
        Vec v = ts[t];
        for (std::size_t s = k; s < levels[t]; ++s) v = mat_vec(nil, v);
        span.insert(std::move(v));
      }
    };
    push_descendants(tops, top_level);
    push_descendants(shadow_tops, shadow_level);

    const std::size_t target = kernels[k].cols();
    for (std::size_t c = 0; c < kernels[k].cols() && span.size() < target; ++c) {
      Vec v(n);
      for (std::size_t r = 0; r < n; ++r) v[r] = kernels[k](r, c);
      if (!span.insert(v)) continue;
      if (quaternionic) {
        Vec tv = theta(v);
        if (!span.insert(tv)) throw Error(ErrorCode::Internal, "theta image dependent in chain selection");
        shadow_tops.push_back(std::move(tv));
        shadow_level.push_back(k);
      }
      tops.push_back(std::move(v));
      top_level.push_back(k);
    }
    if (span.size() != target) throw Error(ErrorCode::Internal, "chain selection fell short of kernel dimension");
  }

  std::vector<Chain> chains;
  for (std::size_t t = 0; t < tops.size(); ++t) {
    Chain chain;
    chain.vectors.resize(top_level[t]);
    Vec v = tops[t];
    for (std::size_t j = top_level[t]; j-- > 0;) {
      chain.vectors[j] = v;
      if (j > 0) v = mat_vec(nil, v);
    }
    chains.push_back(std::move(chain));
  }
  return chains;
}

GaussianRoots split_spectrum(const ComplexMatrix& a, const char* what) {
  GaussianRoots roots = gaussian_roots(char_poly(a));
  if (!roots.splits())
    throw Error(ErrorCode::NonSplittingSpectrum,
                std::string(what) + ": characteristic polynomial has a factor of degree " +
                    std::to_string(roots.leftover_degree()) + " without roots in Q(i)");
  return roots;
}

Decomposition finish(const Matrix& a, JordanSpec spec, const Matrix& basis) {
  Decomposition dec{std::move(spec), mat_inverse(basis)};
  const Matrix target = assemble(dec.spec);
  if (dec.conjugator * a * basis != target)
    throw Error(ErrorCode::Internal, "Jordan conjugator failed the exact round-trip check");
  return dec;
}

Decomposition decompose_commutative(const Matrix& a) {
  const ComplexMatrix ca = to_complex(a);
  const std::size_t n = ca.rows();
  const GaussianRoots roots = split_spectrum(ca, "jordan_decompose");
  const bool real = a.domain() == ScalarDomain::R;

  JordanSpec spec{a.domain(), {}};
  std::vector<Vec> columns;
  for (const auto& [lambda, mult] : roots.roots) {
    const bool pair = real && !lambda.is_real();
    if (real && sgn(lambda.im) < 0) continue;
    for (const auto& chain : jordan_chains(ca, lambda, mult, false)) {
      spec.blocks.push_back({lambda, chain.vectors.size(), pair});
      for (const auto& v : chain.vectors) {
        if (!pair) {
          columns.push_back(v);
          continue;
        }
        Vec re(n), im(n);
        for (std::size_t r = 0; r < n; ++r) {
          re[r] = v[r].re;
          im[r] = v[r].im;
        }
        columns.push_back(std::move(re));
        columns.push_back(std::move(im));
      }
    }
  }
  ComplexMatrix basis(n, n);
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < n; ++r) basis(r, c) = columns[c][r];
  return finish(a, canonicalize(std::move(spec)), from_complex(a.domain(), basis));
}

Decomposition decompose_quaternionic(const Matrix& a) {
  const std::size_t n = a.rows();
  const ComplexMatrix chi = to_complex(complex_adjoint(a));
  const GaussianRoots roots = split_spectrum(chi, "jordan_decompose (complex adjoint)");

  JordanSpec spec{ScalarDomain::H, {}};
  QuaternionMatrix basis(n, n);
  std::size_t col = 0;
  for (const auto& [lambda, mult] : roots.roots) {
    if (sgn(lambda.im) < 0) continue;
    const bool real = lambda.is_real();
    for (const auto& chain : jordan_chains(chi, lambda, mult, real)) {
      spec.blocks.push_back({lambda, chain.vectors.size(), false});
      for (const auto& v : chain.vectors) {
        if (col >= n) throw Error(ErrorCode::Internal, "too many quaternionic chain vectors");
        // [u; w] in C^{2n} corresponds to the quaternion column u - conj(w) j.
        for (std::size_t r = 0; r < n; ++r) {
          const Gaussian& u = v[r];
          const Gaussian& w = v[n + r];
          basis(r, col) = Quaternion(u.re, u.im, -w.re, w.im);
        }
        ++col;
      }
    }
  }
  if (col != n) throw Error(ErrorCode::Internal, "quaternionic chains do not span");
  return finish(a, canonicalize(std::move(spec)), Matrix(ScalarDomain::H, std::move(basis)));
}

}  // namespace

Decomposition jordan_decompose(const Matrix& a) {
  if (!a.is_square() || a.rows() == 0) throw Error(ErrorCode::ShapeMismatch, "jordan_decompose needs a square matrix");
  if (a.domain() == ScalarDomain::H) return decompose_quaternionic(a);
  return decompose_commutative(a);
}

Matrix similarity_conjugator(const Matrix& a, const Matrix& b) {
  if (a.domain() != b.domain()) throw Error(ErrorCode::DomainMismatch, "similarity_conjugator: domains differ");
  if (a.rows() != b.rows() || !a.is_square() || !b.is_square())
    throw Error(ErrorCode::ShapeMismatch, "similarity_conjugator: shapes differ");
  const Decomposition da = jordan_decompose(a);
  const Decomposition db = jordan_decompose(b);
  if (da.spec != db.spec) throw Error(ErrorCode::NotSimilar, "matrices have different Jordan forms");
  return mat_inverse(db.conjugator) * da.conjugator;
}

// --- invariant factors ------------------------------------------------------------

std::vector<PolynomialQi> invariant_factors(const ComplexMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::ShapeMismatch, "invariant_factors of non-square matrix");
  const std::size_t n = a.rows();
  std::vector<PolynomialQi> m(n * n);
  auto at = [&](std::size_t r, std::size_t c) -> PolynomialQi& { return m[r * n + c]; };
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      at(r, c) = PolynomialQi::constant(-a(r, c));
      if (r == c) at(r, c) += PolynomialQi::x();
    }

  auto swap_rows = [&](std::size_t r1, std::size_t r2) {
    if (r1 != r2)
      for (std::size_t c = 0; c < n; ++c) std::swap(at(r1, c), at(r2, c));
  };
  auto swap_cols = [&](std::size_t c1, std::size_t c2) {
    if (c1 != c2)
      for (std::size_t r = 0; r < n; ++r) std::swap(at(r, c1), at(r, c2));
  };

  // Smith normal form over Q(i)[x] by minimal-degree pivoting.
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t r = t; r < n; ++r)
        for (std::size_t c = t; c < n; ++c)
          if (!at(r, c).is_zero() && (!best || at(r, c).degree() < at(best->first, best->second).degree()))
            best = {r, c};
      if (!best) break;
      swap_rows(t, best->first);
      swap_cols(t, best->second);
      const PolynomialQi pivot = at(t, t);

      bool clean = true;
      for (std::size_t r = t + 1; r < n; ++r) {
        if (at(r, t).is_zero()) continue;
        const PolynomialQi q = divmod(at(r, t), pivot).first;
        for (std::size_t c = t; c < n; ++c)
          if (!at(t, c).is_zero()) at(r, c) -= q * at(t, c);
        if (!at(r, t).is_zero()) clean = false;
      }
      for (std::size_t c = t + 1; c < n; ++c) {
        if (at(t, c).is_zero()) continue;
        const PolynomialQi q = divmod(at(t, c), pivot).first;
        for (std::size_t r = t; r < n; ++r)
          if (!at(r, t).is_zero()) at(r, c) -= at(r, t) * q;
        if (!at(t, c).is_zero()) clean = false;
      }
      if (!clean) continue;

      std::optional<std::size_t> offending;
      for (std::size_t r = t + 1; r < n && !offending; ++r)
        for (std::size_t c = t + 1; c < n; ++c)
          if (!divmod(at(r, c), pivot).second.is_zero()) {
            offending = r;
            break;
          }
      if (!offending) break;
      for (std::size_t c = t; c < n; ++c) at(t, c) += at(*offending, c);
    }
  }

  std::vector<PolynomialQi> factors;
  for (std::size_t t = 0; t < n; ++t)
    if (at(t, t).degree() >= 1) factors.push_back(at(t, t).monic());
  return factors;
}

std::vector<PolynomialQi> invariant_factors(const Matrix& a) {
  if (a.domain() == ScalarDomain::H)
    throw Error(ErrorCode::DomainMismatch, "invariant_factors needs a commutative domain; use complex_adjoint");
  return invariant_factors(to_complex(a));
}

}  // namespace revcert
