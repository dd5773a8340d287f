#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sys/wait.h>

#include "revcert/generate.hpp"
#include "revcert/json_io.hpp"
#include "revcert/pipeline.hpp"
#include "support.hpp"

using namespace revcert;
using namespace revcert::testing;

namespace {

const ScalarDomain R = ScalarDomain::R;
const ScalarDomain C = ScalarDomain::C;
const ScalarDomain H = ScalarDomain::H;

RunResult run_inline(const std::string& json, const char* question, bool witness = true, std::size_t budget = 0) {
  RunConfig cfg;
  cfg.inline_json = json;
  cfg.question = parse_question(question);
  cfg.emit_witness = witness;
  cfg.oracle_budget = budget;
  return run(cfg);
}

const std::string kQuaternionI = R"({"domain":"H","rows":1,"cols":1,"entries":[["i"]]})";

int shell(const std::string& command) {
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("parse input") {
  const Input i = parse_input(kQuaternionI);
  REQUIRE(std::holds_alternative<Matrix>(i));
  CHECK(std::get<Matrix>(i) == Matrix::diagonal(H, {Quaternion::i()}));
  const Input d = parse_input(R"({"domain":"C","rows":2,"cols":2,"entries":[["2","0"],["0","1/2"]]})");
  CHECK(std::get<Matrix>(d) == Matrix::diagonal(C, {2, Quaternion(Rational(1, 2))}));
  try {
    parse_input(R"({"domain":"C","rows":1,"cols":1,"entries":[["j"]]})");
    FAIL("expected DomainMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DomainMismatch);
  }
  try {
    parse_input("{\n \"domain\": \"C\",\n \"rows\": 1,,\n}");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  try {
    parse_input(R"({"domain":"C","rows":1,"cols":1,"entries":[["1+"]]})");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("matrix.entries[0][0]") != std::string::npos);
  }
  const Input spec = parse_input(R"({"domain":"H","blocks":[{"eigenvalue":"k","size":2}]})");
  CHECK(std::get<JordanSpec>(spec) == JordanSpec{H, {{Gaussian(0, 1), 2, false}}});
}

TEST_CASE("json round trips") {
  std::mt19937_64 rng(81);
  for (auto d : {R, C, H})
    for (int t = 0; t < 20; ++t) {
      const Matrix m = random_matrix(rng, d, uniform(rng, 1, 4), uniform(rng, 1, 4));
      CHECK(matrix_from_json(parse_json(matrix_to_json(m).dump())) == m);
      const JordanSpec s = random_spec(rng, d, 6);
      CHECK(spec_from_json(parse_json(spec_to_json(s).dump())) == s);
      const Verdict v = classify(s, {Level::Lie, Strength::Strong});
      CHECK(verdict_from_json(parse_json(verdict_to_json(v).dump())) == v);
      if (v.answer == Answer::Yes) {
        const Witness w = assemble_witness({s, Matrix::identity(d, s.dimension())}, *v.plan, Level::Lie);
        CHECK(witness_from_json(parse_json(witness_to_json(w).dump())) == w);
      }
    }
  const OracleReport r = involution_search(Matrix::identity(C, 2), Level::Group, 3, 0);
  CHECK(report_from_json(parse_json(report_to_json(r).dump())) == r);
}

TEST_CASE("pipeline on the quaternion (i)") {
  RunResult r = run_inline(kQuaternionI, "reversible");
  CHECK(r.report["answer"] == "yes");
  CHECK(r.exit_code == 0);
  r = run_inline(kQuaternionI, "strong-reversible");
  CHECK(r.report["answer"] == "no");
  CHECK(r.exit_code == 1);
  r = run_inline(kQuaternionI, "adreal");
  CHECK(r.report["answer"] == "yes");
  r = run_inline(kQuaternionI, "strong-adreal", true, 40);
  CHECK(r.report["answer"] == "no");
  CHECK(r.report["oracle"].is_null());
}

TEST_CASE("pipeline exit codes and witnesses") {
  RunResult r = run_inline(R"({"domain":"C","rows":1,"cols":1,"entries":[["2"]]})", "reversible");
  CHECK(r.report["answer"] == "no");
  CHECK(r.exit_code == 1);

  r = run_inline(R"({"domain":"R","rows":2,"cols":2,"entries":[["3","-4"],["2","-3"]]})", "strong-reversible");
  CHECK(r.exit_code == 0);
  REQUIRE(r.report["witness"].is_object());
  const Witness w = witness_from_json(r.report["witness"]);
  CHECK_NOTHROW(certify(Matrix::from_rows(R, {{3, -4}, {2, -3}}), w));
  CHECK(r.report["certificate"]["identityChecked"] == true);

  r = run_inline(R"({"domain":"H","blocks":[{"eigenvalue":"i","size":1},{"eigenvalue":"j","size":1},)"
                 R"({"eigenvalue":"k","size":1}]})",
                 "strong-reversible", true, 200);
  CHECK(r.report["spec"]["blocks"].size() == 3);
  CHECK((r.exit_code == 0 || r.exit_code == 2));
  CHECK(r.report["oracle"].is_object());

  r = run_inline(R"({"domain":"C","rows":1,"cols":1,"entries":[["0"]]})", "reversible");
  CHECK(r.exit_code > 2);
  CHECK(r.report["error"]["code"] == "SingularSpec");

  r = run_inline(R"({"domain":"R","rows":2,"cols":2,"entries":[["0","2"],["1","0"]]})", "adreal");
  CHECK(r.exit_code == kExitSpectrumError);
  r = run_inline("not json", "adreal");
  CHECK(r.exit_code == kExitInputError);
}

TEST_CASE("exit code matches the verdict on generated corpora") {
  for (auto d : {R, C, H})
    for (const char* q : {"adreal", "strong-adreal", "reversible", "strong-reversible"})
      for (Condition c : {Condition::Satisfy, Condition::Violate}) {
        GenerateParams p{d, 5, c, parse_question(q), 9, 5};
        for (const auto& inst : generate(p)) {
          const RunResult r = run_inline(matrix_to_json(inst.matrix()).dump(), q);
          const Answer a = parse_answer(r.report["answer"].get<std::string>());
          CHECK(r.exit_code == exit_code_for(a));
          CHECK(r.report["verdict"]["answer"] == r.report["answer"]);
          if (c == Condition::Violate) CHECK(a == Answer::No);
          if (c == Condition::Satisfy) CHECK(a == Answer::Yes);
        }
      }
}

TEST_CASE("generator determinism and corpus properties") {
  GenerateParams p{C, 4, Condition::Satisfy, {Level::Group, Strength::Plain}, 7, 20};
  const auto a = generate(p), b = generate(p);
  REQUIRE(a.size() == 20);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].spec == b[i].spec);
    CHECK(a[i].conjugator == b[i].conjugator);
    CHECK(a[i].spec.dimension() <= 4);
  }
  p = {R, 4, Condition::Violate, {Level::Lie, Strength::Plain}, 7, 20};
  for (const auto& inst : generate(p)) {
    CHECK(classify(inst.spec, p.question).answer == Answer::No);
    CHECK(inst.matrix() * inst.conjugator == inst.conjugator * assemble(inst.spec));
  }
}

TEST_CASE("command-line binary") {
  const std::string bin = REVCERT_CLI_PATH;
  const std::string dir = REVCERT_TEST_TMP;
  {
    std::ofstream(dir + "/qi.json") << kQuaternionI;
  }
  CHECK(shell(bin + " --question reversible --input " + dir + "/qi.json --output " + dir + "/out.json") == 0);
  std::ifstream out(dir + "/out.json");
  const Json report = Json::parse(out);
  CHECK(report["answer"] == "yes");
  CHECK(shell(bin + " --question strong-reversible --input " + dir + "/qi.json > /dev/null") == 1);
  CHECK(shell(bin + " --question nonsense --input " + dir + "/qi.json > /dev/null 2>&1") > 2);
  CHECK(shell(bin + " generate --domain H --max-dim 3 --seed 5 --count 4 --output " + dir + "/c1.json") == 0);
  CHECK(shell(bin + " generate --domain H --max-dim 3 --seed 5 --count 4 --output " + dir + "/c2.json") == 0);
  std::ifstream c1(dir + "/c1.json"), c2(dir + "/c2.json");
  const std::string s1((std::istreambuf_iterator<char>(c1)), std::istreambuf_iterator<char>());
  const std::string s2((std::istreambuf_iterator<char>(c2)), std::istreambuf_iterator<char>());
  CHECK(!s1.empty());
  CHECK(s1 == s2);
}
