#pragma once

#include <string>
#include <vector>

#include "revcert/canonical.hpp"
#include "revcert/classify.hpp"

namespace revcert {

/// An involution g reversing A: g A g^{-1} = -A (lie) or A^{-1} (group).
struct Witness {
  Matrix g;
  Level mode = Level::Group;
  std::vector<Pattern> provenance;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Certificate {
  Witness witness;
  bool identity_checked = false;
  bool involution_checked = false;
};

// Per-block constructions.  Each returns an involution g with
// g X g^{-1} = -X (lie) or X^{-1} (group) for X the block (or the direct sum
// of the two blocks); NotApplicable when the input matches no construction.
Matrix lie_singleton_reverser(const JordanBlock& b, ScalarDomain domain);
Matrix lie_pair_reverser(const JordanBlock& b1, const JordanBlock& b2, ScalarDomain domain);
Matrix group_singleton_reverser(const JordanBlock& b, ScalarDomain domain);
Matrix group_pair_reverser(const JordanBlock& b1, const JordanBlock& b2, ScalarDomain domain);

/// Transports the block-level involutions back through the Jordan conjugator:
/// g = S^{-1} P^{-1} g_arr P S.  The result is certified before returning.
Witness assemble_witness(const Decomposition& dec, const PairingPlan& plan, Level mode);

/// Exact check of g^2 = I and the reversal identity; throws
/// CertificationFailed naming the first identity that fails.
Certificate certify(const Matrix& a, const Witness& w);

}  // namespace revcert
