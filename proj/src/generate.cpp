#include "revcert/generate.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace revcert {

std::string_view to_string(Condition c) { return c == Condition::Satisfy ? "satisfy" : "violate"; }

Condition parse_condition(std::string_view text) {
  if (text == "satisfy") return Condition::Satisfy;
  if (text == "violate") return Condition::Violate;
  throw Error(ErrorCode::ParseError, "unknown condition '" + std::string(text) + "'");
}

Matrix Instance::matrix() const { return conjugator * assemble(spec) * mat_inverse(conjugator); }

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Small Q(i) values, including several on the unit circle so the group
/// questions meet their fixed classes.
Gaussian sample_value(std::mt19937_64& rng) {
  static const std::array<Rational, 7> parts{Rational(-2), Rational(-1), Rational(-1, 2), Rational(0),
                                             Rational(1, 2), Rational(1),  Rational(2)};
  static const std::array<Gaussian, 6> units{Gaussian(Rational(3, 5), Rational(4, 5)),
                                             Gaussian(Rational(4, 5), Rational(3, 5)),
                                             Gaussian(Rational(-3, 5), Rational(4, 5)),
                                             Gaussian(0, 1),
                                             Gaussian(1),
                                             Gaussian(-1)};
  if (pick(rng, 0, 3) == 0) return units[pick(rng, 0, units.size() - 1)];
  return {parts[pick(rng, 0, parts.size() - 1)], parts[pick(rng, 0, parts.size() - 1)]};
}

JordanBlock as_block(const Gaussian& z, std::size_t size, ScalarDomain domain) {
  const Gaussian upper(z.re, abs(z.im));
  switch (domain) {
    case ScalarDomain::C: return {z, size, false};
    case ScalarDomain::R: return z.is_real() ? JordanBlock{z, size, false} : JordanBlock{upper, size, true};
    case ScalarDomain::H: return {upper, size, false};
  }
  return {z, size, false};
}

struct Drawn {
  JordanBlock block;
  JordanBlock partner;
  bool fixed = false;
};

Drawn draw(std::mt19937_64& rng, ScalarDomain domain, Level level, std::size_t max_size) {
  Gaussian z;
  do {
    z = sample_value(rng);
  } while (level == Level::Group && is_zero(z));
  const std::size_t size = pick(rng, 1, std::max<std::size_t>(1, max_size));
  Drawn d;
  d.block = as_block(z, size, domain);
  const EigenvalueClass partner = class_involution(level, {d.block.eigenvalue, domain});
  d.partner = {partner.representative, size, d.block.real_complex_pair};
  d.fixed = partner.representative == d.block.eigenvalue;
  return d;
}

/// Adds blocks meeting the partition condition until about `budget`
/// dimensions are used.
void fill_satisfying(std::vector<JordanBlock>& out, std::size_t budget, const GenerateParams& p,
                     std::mt19937_64& rng) {
  const std::size_t target = budget == 0 ? 0 : pick(rng, 1, budget);
  std::size_t used = 0;
  for (int tries = 0; used < target && tries < 32; ++tries) {
    const Drawn d = draw(rng, p.domain, p.question.level, std::min<std::size_t>(3, target - used));
    const bool doubled = !d.fixed || (p.domain == ScalarDomain::H && p.question.strength == Strength::Strong &&
                                      !d.block.eigenvalue.is_real());
    const std::size_t cost = d.block.dimension() * (doubled ? 2 : 1);
    if (used + cost > target) continue;
    out.push_back(d.block);
    if (doubled) out.push_back(d.partner);
    used += cost;
  }
}

}  // namespace

Matrix random_conjugator(ScalarDomain domain, std::size_t n, std::mt19937_64& rng) {
  auto entry = [&]() {
    auto coord = [&]() { return Rational(static_cast<long>(pick(rng, 0, 2)) - 1); };
    switch (domain) {
      case ScalarDomain::R: return Quaternion(coord());
      case ScalarDomain::C: return Quaternion(coord(), coord());
      case ScalarDomain::H: return Quaternion(coord(), coord(), coord(), coord());
    }
    return Quaternion();
  };
  Matrix l = Matrix::identity(domain, n);
  Matrix u = Matrix::identity(domain, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < r; ++c) {
      l.set(r, c, entry());
      u.set(c, r, entry());
    }
  std::vector<std::size_t> image(n);
  std::iota(image.begin(), image.end(), std::size_t{0});
  std::shuffle(image.begin(), image.end(), rng);
  return l * u * permutation_matrix(domain, Permutation{image});
}

std::vector<Instance> generate(const GenerateParams& p) {
  std::mt19937_64 rng(p.seed);
  const std::size_t max_dim = std::max<std::size_t>(1, p.max_dimension);
  std::vector<Instance> corpus;
  corpus.reserve(p.count);
  while (corpus.size() < p.count) {
    JordanSpec spec{p.domain, {}};
    if (p.condition == Condition::Violate) {
      Drawn d = draw(rng, p.domain, p.question.level, std::min<std::size_t>(3, max_dim));
      if (d.fixed || d.block.dimension() > max_dim) continue;
      spec.blocks.push_back(d.block);
      fill_satisfying(spec.blocks, max_dim - d.block.dimension(), p, rng);
    } else {
      fill_satisfying(spec.blocks, max_dim, p, rng);
      if (spec.blocks.empty()) continue;
    }
    spec = canonicalize(std::move(spec));
    Matrix t = random_conjugator(p.domain, spec.dimension(), rng);
    corpus.push_back({std::move(spec), std::move(t)});
  }
  return corpus;
}

}  // namespace revcert
