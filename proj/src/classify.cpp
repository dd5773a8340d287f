#include "revcert/classify.hpp"

#include <array>
#include <map>
#include <tuple>

#include "revcert/oracle.hpp"

namespace revcert {

std::string_view to_string(Level level) { return level == Level::Lie ? "lie" : "group"; }

std::string_view to_string(const Question& q) {
  if (q.level == Level::Lie) return q.strength == Strength::Strong ? "strong-adreal" : "adreal";
  return q.strength == Strength::Strong ? "strong-reversible" : "reversible";
}

Question parse_question(std::string_view text) {
  if (text == "adreal") return {Level::Lie, Strength::Plain};
  if (text == "strong-adreal") return {Level::Lie, Strength::Strong};
  if (text == "reversible") return {Level::Group, Strength::Plain};
  if (text == "strong-reversible") return {Level::Group, Strength::Strong};
  throw Error(ErrorCode::ParseError, "unknown question '" + std::string(text) + "'");
}

std::string_view to_string(Answer a) {
  switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::Unknown: return "unknown";
  }
  return "?";
}

Answer parse_answer(std::string_view text) {
  if (text == "yes") return Answer::Yes;
  if (text == "no") return Answer::No;
  if (text == "unknown") return Answer::Unknown;
  throw Error(ErrorCode::ParseError, "unknown answer '" + std::string(text) + "'");
}

namespace {

constexpr std::array<std::pair<Pattern, std::string_view>, 12> kPatternNames{{
    {Pattern::LieNilpotent, "lie-nilpotent"},
    {Pattern::LieRealImaginaryBlock, "lie-real-imaginary-block"},
    {Pattern::LieQuaternionImaginary, "lie-quaternion-imaginary"},
    {Pattern::LieNegationPair, "lie-negation-pair"},
    {Pattern::LieQuaternionImaginaryPair, "lie-quaternion-imaginary-pair"},
    {Pattern::LieRealComplexPair, "lie-real-complex-pair"},
    {Pattern::GroupUnipotent, "group-unipotent"},
    {Pattern::GroupRealUnitBlock, "group-real-unit-block"},
    {Pattern::GroupQuaternionUnit, "group-quaternion-unit"},
    {Pattern::GroupReciprocalPair, "group-reciprocal-pair"},
    {Pattern::GroupQuaternionUnitPair, "group-quaternion-unit-pair"},
    {Pattern::GroupRealComplexPair, "group-real-complex-pair"},
}};

}  // namespace

std::string_view to_string(Pattern p) {
  for (const auto& [pattern, name] : kPatternNames)
    if (pattern == p) return name;
  return "?";
}

Pattern parse_pattern(std::string_view text) {
  for (const auto& [pattern, name] : kPatternNames)
    if (name == text) return pattern;
  throw Error(ErrorCode::ParseError, "unknown plan pattern '" + std::string(text) + "'");
}

bool has_involutive_reverser(Pattern p) {
  return p != Pattern::LieQuaternionImaginary && p != Pattern::GroupQuaternionUnit;
}

bool PairingPlan::involutive() const {
  for (const auto& e : entries)
    if (!has_involutive_reverser(e.pattern)) return false;
  return true;
}

EigenvalueClass class_involution(Level level, const EigenvalueClass& x) {
  return level == Level::Lie ? class_negate(x) : class_invert(x);
}

namespace {

using BucketKey = std::tuple<Rational, Rational, std::size_t, bool>;

BucketKey key_of(const Gaussian& lambda, std::size_t size, bool pair) {
  return {lambda.re, lambda.im, size, pair};
}

struct KeyLess {
  bool operator()(const BucketKey& x, const BucketKey& y) const {
    if (int c = cmp(std::get<0>(x), std::get<0>(y))) return c < 0;
    if (int c = cmp(std::get<1>(x), std::get<1>(y))) return c < 0;
    if (std::get<2>(x) != std::get<2>(y)) return std::get<2>(x) < std::get<2>(y);
    return std::get<3>(x) < std::get<3>(y);
  }
};

struct FixedPatterns {
  Pattern singleton;
  std::optional<Pattern> pair;  // set when the class needs pairing for an involution
};

FixedPatterns fixed_patterns(Level level, ScalarDomain domain, const JordanBlock& b) {
  const bool nonreal_h = domain == ScalarDomain::H && !b.eigenvalue.is_real();
  if (level == Level::Lie) {
    if (b.real_complex_pair) return {Pattern::LieRealImaginaryBlock, std::nullopt};
    if (nonreal_h) return {Pattern::LieQuaternionImaginary, Pattern::LieQuaternionImaginaryPair};
    return {Pattern::LieNilpotent, std::nullopt};
  }
  if (b.real_complex_pair) return {Pattern::GroupRealUnitBlock, std::nullopt};
  if (nonreal_h) return {Pattern::GroupQuaternionUnit, Pattern::GroupQuaternionUnitPair};
  return {Pattern::GroupUnipotent, std::nullopt};
}

Pattern pair_pattern(Level level, const JordanBlock& b) {
  if (level == Level::Lie) return b.real_complex_pair ? Pattern::LieRealComplexPair : Pattern::LieNegationPair;
  return b.real_complex_pair ? Pattern::GroupRealComplexPair : Pattern::GroupReciprocalPair;
}

}  // namespace

Verdict classify(const JordanSpec& spec, Question q) {
  validate(spec);
  if (q.level == Level::Group)
    for (const auto& b : spec.blocks)
      if (is_zero(b.eigenvalue))
        throw Error(ErrorCode::SingularSpec, "group question on a spec with eigenvalue 0");

  std::map<BucketKey, std::vector<std::size_t>, KeyLess> buckets;
  for (std::size_t i = 0; i < spec.blocks.size(); ++i) {
    const auto& b = spec.blocks[i];
    buckets[key_of(b.eigenvalue, b.size, b.real_complex_pair)].push_back(i);
  }

  PairingPlan plan;
  std::vector<bool> done(spec.blocks.size(), false);
  for (std::size_t i = 0; i < spec.blocks.size(); ++i) {
    if (done[i]) continue;
    const JordanBlock& b = spec.blocks[i];
    const auto& mine = buckets[key_of(b.eigenvalue, b.size, b.real_complex_pair)];
    const EigenvalueClass partner = class_involution(q.level, spec.eigenvalue_class(i));

    if (partner.representative == b.eigenvalue) {
      const FixedPatterns fp = fixed_patterns(q.level, spec.domain, b);
      std::size_t k = 0;
      if (fp.pair)
        for (; k + 1 < mine.size(); k += 2) plan.entries.push_back({{mine[k], mine[k + 1]}, *fp.pair});
      for (; k < mine.size(); ++k) plan.entries.push_back({{mine[k]}, fp.singleton});
      for (auto idx : mine) done[idx] = true;
      continue;
    }

    const auto it = buckets.find(key_of(partner.representative, b.size, b.real_complex_pair));
    if (it == buckets.end() || it->second.size() != mine.size())
      return {Answer::No, std::nullopt, "unmatched-class"};
    for (std::size_t k = 0; k < mine.size(); ++k) {
      plan.entries.push_back({{mine[k], it->second[k]}, pair_pattern(q.level, b)});
      done[mine[k]] = true;
      done[it->second[k]] = true;
    }
  }

  if (q.strength == Strength::Plain) return {Answer::Yes, std::move(plan), "partition"};
  if (spec.domain != ScalarDomain::H) return {Answer::Yes, std::move(plan), "partition"};
  if (plan.involutive()) return {Answer::Yes, std::move(plan), "even-multiplicity"};
  if (spec.dimension() == 1) {
    const Answer a = decide_1x1(Quaternion(spec.blocks.front().eigenvalue), q.level);
    return {a, a == Answer::Yes ? std::optional<PairingPlan>(std::move(plan)) : std::nullopt, "quaternion-1x1"};
  }
  return {Answer::Unknown, std::nullopt, "odd-multiplicity-fixed-class"};
}

}  // namespace revcert
