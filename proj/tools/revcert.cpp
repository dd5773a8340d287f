// Command-line front end: classify a matrix or Jordan spec, optionally emit a
// certified involution, or generate test corpora.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "revcert/generate.hpp"
#include "revcert/pipeline.hpp"

namespace {

int emit(const revcert::Json& doc, const std::optional<std::string>& output_path) {
  const std::string text = doc.dump(2) + "\n";
  if (!output_path) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(*output_path);
  if (!out) {
    std::cerr << "revcert: cannot write '" << *output_path << "'\n";
    return revcert::kExitInputError;
  }
  out << text;
  return 0;
}

revcert::Json corpus_to_json(const std::vector<revcert::Instance>& corpus) {
  revcert::Json items = revcert::Json::array();
  for (const auto& inst : corpus)
    items.push_back({{"spec", revcert::spec_to_json(inst.spec)},
                     {"conjugator", revcert::matrix_to_json(inst.conjugator)},
                     {"matrix", revcert::matrix_to_json(inst.matrix())}});
  return revcert::Json{{"corpus", items}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide reality and reversibility of matrices over R, C and H, with certified involutions"};
  app.require_subcommand(0, 1);

  std::string question = "reversible";
  std::string input = "-";
  std::string output;
  bool emit_witness = false;
  std::size_t budget = 0;
  std::uint64_t seed = 0;
  app.add_option("--question", question, "adreal | strong-adreal | reversible | strong-reversible")
      ->check(CLI::IsMember({"adreal", "strong-adreal", "reversible", "strong-reversible"}));
  app.add_option("--input", input, "matrix or Jordan spec JSON file, '-' for stdin");
  app.add_flag("--emit-witness", emit_witness, "construct and certify an involutive reverser");
  app.add_option("--oracle-budget", budget, "involution search attempts for unknown verdicts");
  app.add_option("--seed", seed, "seed for the oracle search");
  app.add_option("--output", output, "write the report here instead of stdout");

  auto* gen = app.add_subcommand("generate", "emit a deterministic corpus of Jordan specs");
  std::string gen_domain = "C";
  std::size_t gen_dim = 4;
  std::string gen_condition = "satisfy";
  std::string gen_question = "reversible";
  std::uint64_t gen_seed = 0;
  std::size_t gen_count = 10;
  gen->add_option("--domain", gen_domain, "R | C | H")->check(CLI::IsMember({"R", "C", "H"}));
  gen->add_option("--max-dim", gen_dim, "dimension bound")->check(CLI::PositiveNumber);
  gen->add_option("--condition", gen_condition, "satisfy | violate")->check(CLI::IsMember({"satisfy", "violate"}));
  gen->add_option("--question", gen_question, "question whose condition is targeted")
      ->check(CLI::IsMember({"adreal", "strong-adreal", "reversible", "strong-reversible"}));
  gen->add_option("--seed", gen_seed, "corpus seed");
  gen->add_option("--count", gen_count, "number of specs");
  gen->add_option("--output", output, "write the corpus here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : revcert::kExitInputError;
  }

  const std::optional<std::string> output_path = output.empty() ? std::nullopt : std::optional(output);

  if (gen->parsed()) {
    revcert::GenerateParams params;
    params.domain = revcert::parse_domain(gen_domain);
    params.max_dimension = gen_dim;
    params.condition = revcert::parse_condition(gen_condition);
    params.question = revcert::parse_question(gen_question);
    params.seed = gen_seed;
    params.count = gen_count;
    return emit(corpus_to_json(revcert::generate(params)), output_path);
  }

  revcert::RunConfig config;
  config.input = input;
  config.question = revcert::parse_question(question);
  config.emit_witness = emit_witness;
  config.oracle_budget = budget;
  config.seed = seed;
  config.output_path = output_path;
  const revcert::RunResult result = revcert::run(config);
  if (const int err = emit(result.report, config.output_path); err != 0) return err;
  return result.exit_code;
}
