#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "revcert/canonical.hpp"
#include "revcert/classify.hpp"

namespace revcert {

enum class Condition { Satisfy, Violate };
std::string_view to_string(Condition c);
Condition parse_condition(std::string_view text);

struct GenerateParams {
  ScalarDomain domain = ScalarDomain::C;
  std::size_t max_dimension = 4;
  Condition condition = Condition::Satisfy;
  Question question;
  std::uint64_t seed = 0;
  std::size_t count = 1;
};

/// A spec together with a unimodular conjugator T; the matrix form is
/// T * assemble(spec) * T^{-1}.
struct Instance {
  JordanSpec spec;
  Matrix conjugator;

  Matrix matrix() const;
};

/// Satisfy-corpora meet the partition condition of the question (and, for
/// strong questions over H, keep every fixed non-real class at even
/// multiplicity); violate-corpora carry one unmatched non-fixed block.
/// Deterministic in the seed.
std::vector<Instance> generate(const GenerateParams& params);

/// Product L U P of unit triangular factors with small entries and a
/// permutation, so both T and T^{-1} have small exact entries.
Matrix random_conjugator(ScalarDomain domain, std::size_t n, std::mt19937_64& rng);

}  // namespace revcert
