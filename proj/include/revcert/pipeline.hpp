#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "revcert/classify.hpp"
#include "revcert/json_io.hpp"

namespace revcert {

struct RunConfig {
  /// File path, or "-" for standard input; ignored when inline_json is set.
  std::string input = "-";
  std::optional<std::string> inline_json;
  Question question;
  bool emit_witness = false;
  std::size_t oracle_budget = 0;
  std::uint64_t seed = 0;
  std::optional<std::string> output_path;
};

struct RunResult {
  Json report;
  int exit_code = 0;
};

// Exit codes: 0 yes, 1 no, 2 unknown; errors use the values below.
inline constexpr int kExitInputError = 3;
inline constexpr int kExitSpectrumError = 4;
inline constexpr int kExitInternalError = 5;

int exit_code_for(Answer a);
int exit_code_for(ErrorCode code);

/// parse -> jordan_decompose (matrix input) -> classify -> witness (when
/// asked and the verdict is yes) -> oracle escalation (unknown, budget > 0).
/// Never throws for library errors; they are reported in the "error" field.
RunResult run(const RunConfig& config);

}  // namespace revcert
