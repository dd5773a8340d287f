#pragma once

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "revcert/canonical.hpp"
#include "revcert/classify.hpp"
#include "revcert/matrix.hpp"
#include "revcert/oracle.hpp"
#include "revcert/witness.hpp"

namespace revcert {

using Json = nlohmann::ordered_json;

// Scalars travel as strings in the scalar grammar so no value is rounded.
// Every *_from_json throws ParseError naming the offending field.

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// {"domain", "blocks": [{"eigenvalue", "size", "realComplexPair"}]}.  Over H
/// any quaternion eigenvalue is accepted and replaced by its class
/// representative; the result is canonicalized.
Json spec_to_json(const JordanSpec& spec);
JordanSpec spec_from_json(const Json& j);

Json plan_to_json(const PairingPlan& plan);
PairingPlan plan_from_json(const Json& j);

Json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);

Json witness_to_json(const Witness& w);
Witness witness_from_json(const Json& j);

Json report_to_json(const OracleReport& r);
OracleReport report_from_json(const Json& j);

/// Parses JSON text; syntax errors become ParseError with line and column.
Json parse_json(std::string_view text);

using Input = std::variant<Matrix, JordanSpec>;
/// A document with "blocks" is a spec, one with "entries" a matrix.
Input parse_input(std::string_view text);

}  // namespace revcert
