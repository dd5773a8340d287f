#include "revcert/witness.hpp"

#include <string>

namespace revcert {

namespace {

Matrix not_applicable(const std::string& what) { throw Error(ErrorCode::NotApplicable, what); }

std::string describe(const JordanBlock& b) {
  return std::string(b.real_complex_pair ? "J_R(" : "J(") + format_scalar(b.eigenvalue) + ", " +
         std::to_string(b.size) + ")";
}

/// diag(I11, -I11, I11, ...) with I11 = diag(1, -1); dimension 2 * blocks.
Matrix alternating_i11(std::size_t blocks) {
  std::vector<Quaternion> d;
  for (std::size_t t = 0; t < 2 * blocks; ++t) {
    const bool outer = (t / 2) % 2 == 0;
    const bool inner = t % 2 == 0;
    d.emplace_back(outer == inner ? 1 : -1);
  }
  return Matrix::diagonal(ScalarDomain::R, d);
}

/// diag(I2, -I2, ...) * diag(1, -1, 1, -1, ...): maps J_R(-mu +- i nu) to
/// -J_R(mu +- i nu) under conjugation.
Matrix real_pair_swap_sign(std::size_t blocks) {
  std::vector<Quaternion> d;
  for (std::size_t t = 0; t < 2 * blocks; ++t) {
    const bool outer = (t / 2) % 2 == 0;
    const bool inner = t % 2 == 0;
    d.emplace_back(outer == inner ? 1 : -1);
  }
  return Matrix::diagonal(ScalarDomain::R, d);
}

Matrix antidiagonal_involution(const Matrix& x) {
  return block_compose({x, mat_inverse(x)}, BlockLayout::Antidiagonal);
}

Matrix nilpotent_block(ScalarDomain domain, std::size_t n) { return build_block({Gaussian(0), n, false}, domain); }

}  // namespace

Matrix lie_singleton_reverser(const JordanBlock& b, ScalarDomain domain) {
  if (!b.real_complex_pair && is_zero(b.eigenvalue)) return alternating_signs(domain, b.size);
  if (b.real_complex_pair && domain == ScalarDomain::R && is_zero(b.eigenvalue.re))
    return alternating_i11(b.size);
  return not_applicable("no singleton Lie reverser for " + describe(b));
}

Matrix lie_pair_reverser(const JordanBlock& b1, const JordanBlock& b2, ScalarDomain domain) {
  if (b1.size != b2.size || b1.real_complex_pair != b2.real_complex_pair)
    return not_applicable("Lie pair blocks differ in shape");
  const EigenvalueClass negated = class_negate({b1.eigenvalue, domain});
  if (negated.representative != b2.eigenvalue)
    return not_applicable(describe(b2) + " is not the negation partner of " + describe(b1));
  const bool fixed = negated.representative == b1.eigenvalue;

  if (fixed) {
    if (domain != ScalarDomain::H || b1.eigenvalue.is_real())
      return not_applicable("negation-fixed class " + describe(b1) + " is a singleton");
    // tau = diag(j, -j, ...), tau^2 = -I, tau J(mu i) tau^{-1} = -J(mu i).
    std::vector<Quaternion> d;
    for (std::size_t t = 0; t < b1.size; ++t) d.push_back(t % 2 == 0 ? Quaternion::j() : -Quaternion::j());
    const Matrix tau = Matrix::diagonal(ScalarDomain::H, d);
    return block_compose({tau, -tau}, BlockLayout::Antidiagonal);
  }
  if (b1.real_complex_pair) {
    const Matrix x = real_pair_swap_sign(b1.size);
    return block_compose({x, x}, BlockLayout::Antidiagonal);
  }
  const Matrix tau = alternating_signs(domain, b1.size);
  if (domain == ScalarDomain::H && !b1.eigenvalue.is_real()) {
    // The partner of x + iy is -x + iy; j conjugates it to -x - iy first.
    const Matrix x = scale(Quaternion(1), tau) * scale(Quaternion::j(), Matrix::identity(domain, b1.size));
    return antidiagonal_involution(x);
  }
  return block_compose({tau, tau}, BlockLayout::Antidiagonal);
}

Matrix group_singleton_reverser(const JordanBlock& b, ScalarDomain domain) {
  if (!b.real_complex_pair && b.eigenvalue.is_real() && abs(b.eigenvalue.re) == 1) {
    // g0 N g0 = -N turns into g0 M g0 = M^{-1} for M = cayley(N); for -1 the
    // sign is carried through since (-M)^{-1} = -M^{-1}.
    const Matrix m = sgn(b.eigenvalue.re) > 0 ? cayley(nilpotent_block(domain, b.size))
                                              : -cayley(nilpotent_block(domain, b.size));
    const Matrix g0 = alternating_signs(domain, b.size);
    const Matrix tau = similarity_conjugator(m, build_block(b, domain));
    return tau * g0 * mat_inverse(tau);
  }
  if (b.real_complex_pair && domain == ScalarDomain::R && norm2(b.eigenvalue) == 1) {
    // Cayley parameter: cayley(i a) = alpha + i beta for a = beta / (1 + alpha).
    const Rational a = b.eigenvalue.im / (1 + b.eigenvalue.re);
    const Matrix m = cayley(build_block({Gaussian(0, a), b.size, true}, domain));
    const Matrix g0 = alternating_i11(b.size);
    const Matrix tau = similarity_conjugator(m, build_block(b, domain));
    return tau * g0 * mat_inverse(tau);
  }
  return not_applicable("no singleton group reverser for " + describe(b));
}

Matrix group_pair_reverser(const JordanBlock& b1, const JordanBlock& b2, ScalarDomain domain) {
  if (b1.size != b2.size || b1.real_complex_pair != b2.real_complex_pair)
    return not_applicable("group pair blocks differ in shape");
  if (is_zero(b1.eigenvalue) || is_zero(b2.eigenvalue)) return not_applicable("zero eigenvalue in group pair");
  const EigenvalueClass inverted = class_invert({b1.eigenvalue, domain});
  if (inverted.representative != b2.eigenvalue)
    return not_applicable(describe(b2) + " is not the inversion partner of " + describe(b1));
  const bool fixed = inverted.representative == b1.eigenvalue;

  if (!fixed) {
    // X B2 X^{-1} = B1^{-1} makes [[0, X], [X^{-1}, 0]] reverse B1 + B2.
    const Matrix block1 = build_block(b1, domain);
    const Matrix block2 = build_block(b2, domain);
    return antidiagonal_involution(similarity_conjugator(block2, mat_inverse(block1)));
  }
  if (domain != ScalarDomain::H || b1.eigenvalue.is_real())
    return not_applicable("inversion-fixed class " + describe(b1) + " is a singleton");
  // |mu| = 1: Y J(conj mu) Y^{-1} = J(mu)^{-1} over C, then X = Y j.
  const JordanBlock conj_block{conj(b1.eigenvalue), b1.size, false};
  const Matrix p = build_block(b1, ScalarDomain::C);
  const Matrix y = similarity_conjugator(build_block(conj_block, ScalarDomain::C), mat_inverse(p));
  const Matrix x = y.with_domain(ScalarDomain::H) * scale(Quaternion::j(), Matrix::identity(ScalarDomain::H, b1.size));
  return antidiagonal_involution(x);
}

namespace {

bool is_lie_pattern(Pattern p) {
  switch (p) {
    case Pattern::LieNilpotent:
    case Pattern::LieRealImaginaryBlock:
    case Pattern::LieQuaternionImaginary:
    case Pattern::LieNegationPair:
    case Pattern::LieQuaternionImaginaryPair:
    case Pattern::LieRealComplexPair:
      return true;
    default:
      return false;
  }
}

}  // namespace

Witness assemble_witness(const Decomposition& dec, const PairingPlan& plan, Level mode) {
  const JordanSpec& spec = dec.spec;
  const ScalarDomain domain = spec.domain;
  std::vector<bool> used(spec.blocks.size(), false);
  std::vector<std::size_t> order;
  std::vector<Matrix> pieces;
  Witness w{Matrix(), mode, {}};

  for (const auto& entry : plan.entries) {
    if (entry.blocks.empty() || entry.blocks.size() > 2)
      throw Error(ErrorCode::PlanMismatch, "plan entry must hold one or two blocks");
    if (is_lie_pattern(entry.pattern) != (mode == Level::Lie))
      throw Error(ErrorCode::PlanMismatch, "plan pattern does not match witness mode");
    if (!has_involutive_reverser(entry.pattern))
      throw Error(ErrorCode::PlanMismatch, std::string("pattern ") + std::string(to_string(entry.pattern)) +
                                               " has no involutive reverser");
    for (auto idx : entry.blocks) {
      if (idx >= spec.blocks.size() || used[idx])
        throw Error(ErrorCode::PlanMismatch, "plan does not partition the block indices");
      used[idx] = true;
      order.push_back(idx);
    }
    const JordanBlock& b1 = spec.blocks[entry.blocks[0]];
    if (entry.is_pair()) {
      const JordanBlock& b2 = spec.blocks[entry.blocks[1]];
      pieces.push_back(mode == Level::Lie ? lie_pair_reverser(b1, b2, domain) : group_pair_reverser(b1, b2, domain));
    } else {
      pieces.push_back(mode == Level::Lie ? lie_singleton_reverser(b1, domain) : group_singleton_reverser(b1, domain));
    }
    w.provenance.push_back(entry.pattern);
  }
  for (bool u : used)
    if (!u) throw Error(ErrorCode::PlanMismatch, "plan leaves a block unassigned");

  std::vector<std::size_t> sizes;
  for (const auto& b : spec.blocks) sizes.push_back(b.dimension());
  const Permutation arrange = Permutation::of_blocks(sizes, order);
  const Matrix g_canonical = permute_conjugate(block_compose(pieces, BlockLayout::Diagonal), arrange.inverse());
  const Matrix s_inv = mat_inverse(dec.conjugator);
  w.g = s_inv * g_canonical * dec.conjugator;

  const Matrix a = s_inv * assemble(spec) * dec.conjugator;
  certify(a, w);
  return w;
}

Certificate certify(const Matrix& a, const Witness& w) {
  if (a.domain() != w.g.domain()) throw Error(ErrorCode::DomainMismatch, "certify: witness domain differs");
  if (!a.is_square() || a.rows() != w.g.rows() || !w.g.is_square())
    throw Error(ErrorCode::ShapeMismatch, "certify: witness shape differs");
  const Matrix id = Matrix::identity(a.domain(), a.rows());
  if (w.g * w.g != id) throw Error(ErrorCode::CertificationFailed, "involution identity g*g = I fails");
  const Matrix gag = w.g * a * w.g;
  if (w.mode == Level::Lie) {
    if (gag != -a) throw Error(ErrorCode::CertificationFailed, "reversal identity g*A*g^-1 = -A fails");
  } else {
    if (gag * a != id) throw Error(ErrorCode::CertificationFailed, "reversal identity g*A*g^-1 = A^-1 fails");
  }
  return {w, true, true};
}

}  // namespace revcert
