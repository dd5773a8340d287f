#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace revcert {

enum class ErrorCode {
  ZeroDivision,
  RepresentativeOutsideQi,
  DomainMismatch,
  ShapeMismatch,
  Singular,
  NonSplittingSpectrum,
  NotSimilar,
  SingularSpec,
  NotApplicable,
  PlanMismatch,
  CertificationFailed,
  SingularInput,
  ParseError,
  Internal,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI report) can dispatch on it without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace revcert
