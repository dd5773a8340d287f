#include "revcert/pipeline.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "revcert/oracle.hpp"
#include "revcert/witness.hpp"

namespace revcert {

int exit_code_for(Answer a) {
  switch (a) {
    case Answer::Yes: return 0;
    case Answer::No: return 1;
    case Answer::Unknown: return 2;
  }
  return kExitInternalError;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::DomainMismatch:
    case ErrorCode::ShapeMismatch:
    case ErrorCode::SingularSpec:
    case ErrorCode::SingularInput:
    case ErrorCode::ZeroDivision:
    case ErrorCode::RepresentativeOutsideQi:
      return kExitInputError;
    case ErrorCode::NonSplittingSpectrum:
      return kExitSpectrumError;
    default:
      return kExitInternalError;
  }
}

namespace {

std::string read_input(const RunConfig& config) {
  if (config.inline_json) return *config.inline_json;
  if (config.input == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(config.input);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open input file '" + config.input + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

/// The plan used for the witness: the verdict's own when involutive,
/// otherwise the strong plan if the strong question also answers yes.
std::optional<PairingPlan> involutive_plan(const JordanSpec& spec, const Verdict& v, Level level) {
  if (v.plan && v.plan->involutive()) return v.plan;
  const Verdict strong = classify(spec, {level, Strength::Strong});
  if (strong.answer == Answer::Yes && strong.plan && strong.plan->involutive()) return strong.plan;
  return std::nullopt;
}

}  // namespace

RunResult run(const RunConfig& config) {
  RunResult result;
  Json& report = result.report;
  report = Json{{"question", to_string(config.question)},
                {"answer", nullptr},
                {"inputKind", nullptr},
                {"spec", nullptr},
                {"verdict", nullptr},
                {"witness", nullptr},
                {"certificate", nullptr},
                {"oracle", nullptr},
                {"error", nullptr}};
  try {
    const Input input = parse_input(read_input(config));
    Decomposition dec;
    Matrix a;
    if (const auto* m = std::get_if<Matrix>(&input)) {
      report["inputKind"] = "matrix";
      if (!m->is_square()) throw Error(ErrorCode::ShapeMismatch, "input matrix is not square");
      a = *m;
      dec = jordan_decompose(a);
    } else {
      report["inputKind"] = "spec";
      dec.spec = std::get<JordanSpec>(input);
      a = assemble(dec.spec);
      dec.conjugator = Matrix::identity(a.domain(), a.rows());
    }
    report["spec"] = spec_to_json(dec.spec);

    Verdict verdict = classify(dec.spec, config.question);
    const Level level = config.question.level;

    if (verdict.answer == Answer::Yes && config.emit_witness) {
      if (const auto plan = involutive_plan(dec.spec, verdict, level)) {
        const Witness w = assemble_witness(dec, *plan, level);
        const Certificate cert = certify(a, w);
        report["witness"] = witness_to_json(w);
        report["certificate"] = {{"identityChecked", cert.identity_checked},
                                 {"involutionChecked", cert.involution_checked}};
      }
    }

    if (verdict.answer == Answer::Unknown && config.oracle_budget > 0) {
      const OracleReport oracle = involution_search(a, level, config.oracle_budget, config.seed);
      report["oracle"] = report_to_json(oracle);
      if (oracle.outcome == Outcome::Confirmed) {
        verdict = {Answer::Yes, std::nullopt, "oracle-confirmed"};
        if (config.emit_witness) {
          const Certificate cert = certify(a, *oracle.evidence);
          report["witness"] = witness_to_json(*oracle.evidence);
          report["certificate"] = {{"identityChecked", cert.identity_checked},
                                   {"involutionChecked", cert.involution_checked}};
        }
      }
    }

    report["answer"] = to_string(verdict.answer);
    report["verdict"] = verdict_to_json(verdict);
    result.exit_code = exit_code_for(verdict.answer);
  } catch (const Error& e) {
    report["error"] = {{"code", to_string(e.code())}, {"message", e.what()}};
    result.exit_code = exit_code_for(e.code());
  }
  return result;
}

}  // namespace revcert
