#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "revcert/classify.hpp"
#include "revcert/matrix.hpp"
#include "revcert/witness.hpp"

namespace revcert {

enum class Outcome { Confirmed, Refuted, Inconclusive };
std::string_view to_string(Outcome o);
Outcome parse_outcome(std::string_view text);

struct OracleReport {
  Outcome outcome = Outcome::Inconclusive;
  /// Present exactly when the outcome is confirmed.
  std::optional<Witness> evidence;
  std::size_t attempts = 0;

  friend bool operator==(const OracleReport&, const OracleReport&) = default;
};

/// Similarity by invariant factors of xI - A (of the complex adjoints for H).
/// Needs no eigenvalues, so it also works when the spectrum leaves Q(i).
bool similarity_oracle(const Matrix& a, const Matrix& b);

/// Exact basis of {g : g A = T g} with T = -A (lie) or A^{-1} (group),
/// followed by seeded sampling of rational combinations looking for g with
/// g^2 a positive square multiple of I.  A miss is inconclusive, never a
/// refutation.
OracleReport involution_search(const Matrix& a, Level mode, std::size_t budget, std::uint64_t seed);

/// 1x1 quaternionic question: x^2 = 1 in H forces x = +-1.
Answer decide_1x1(const Quaternion& q, Level mode);

}  // namespace revcert
