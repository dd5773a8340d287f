#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "revcert/canonical.hpp"

namespace revcert {

enum class Level { Lie, Group };
enum class Strength { Plain, Strong };

/// lie/plain = Ad-real, lie/strong = strongly Ad-real,
/// group/plain = reversible, group/strong = strongly reversible.
struct Question {
  Level level = Level::Group;
  Strength strength = Strength::Plain;

  friend bool operator==(const Question&, const Question&) = default;
};

std::string_view to_string(Level level);
std::string_view to_string(const Question& q);
/// Accepts the CLI spellings adreal | strong-adreal | reversible | strong-reversible.
Question parse_question(std::string_view text);

enum class Answer { Yes, No, Unknown };
std::string_view to_string(Answer a);
Answer parse_answer(std::string_view text);

/// Block construction used for one plan element.
enum class Pattern {
  LieNilpotent,                  // J(0, m)
  LieRealImaginaryBlock,         // J_R(0 +- i nu, 2l)
  LieQuaternionImaginary,        // J(mu i, m) over H, no involutive reverser alone
  LieNegationPair,               // J(lambda, s) + J(-lambda, s)
  LieQuaternionImaginaryPair,    // J(mu i, s) + J(mu i, s) over H
  LieRealComplexPair,            // J_R(mu +- i nu) + J_R(-mu +- i nu)
  GroupUnipotent,                // J(+-1, m)
  GroupRealUnitBlock,            // J_R(alpha +- i beta), alpha^2 + beta^2 = 1
  GroupQuaternionUnit,           // J(mu, m) over H, |mu| = 1 non-real, no involutive reverser alone
  GroupReciprocalPair,           // J(lambda, s) + J(lambda^-1, s)
  GroupQuaternionUnitPair,       // J(mu, s) + J(mu, s) over H, |mu| = 1 non-real
  GroupRealComplexPair,          // J_R(mu +- i nu) + J_R(reciprocal)
};

std::string_view to_string(Pattern p);
Pattern parse_pattern(std::string_view text);
/// False for the two quaternionic singleton patterns that only admit a
/// non-involutive reverser.
bool has_involutive_reverser(Pattern p);

struct PlanEntry {
  std::vector<std::size_t> blocks;  // one index (singleton) or two (pair)
  Pattern pattern = Pattern::LieNilpotent;

  bool is_pair() const { return blocks.size() == 2; }
  friend bool operator==(const PlanEntry&, const PlanEntry&) = default;
};

/// Partition of the spec's block indices into pairs and singletons.
struct PairingPlan {
  std::vector<PlanEntry> entries;

  bool involutive() const;
  friend bool operator==(const PairingPlan&, const PairingPlan&) = default;
};

struct Verdict {
  Answer answer = Answer::No;
  std::optional<PairingPlan> plan;
  std::string reason;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// The class involution of the question's level: negation (lie) or
/// inversion (group).
EigenvalueClass class_involution(Level level, const EigenvalueClass& x);

Verdict classify(const JordanSpec& spec, Question q);

}  // namespace revcert
