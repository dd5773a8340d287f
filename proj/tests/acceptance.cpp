// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <array>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "revcert/generate.hpp"
#include "revcert/json_io.hpp"
#include "revcert/oracle.hpp"
#include "revcert/pipeline.hpp"
#include "revcert/witness.hpp"
#include "support.hpp"

using namespace revcert;
using namespace revcert::testing;

namespace {

constexpr std::array kDomains{ScalarDomain::R, ScalarDomain::C, ScalarDomain::H};
constexpr std::array kQuestions{Question{Level::Lie, Strength::Plain}, Question{Level::Lie, Strength::Strong},
                                Question{Level::Group, Strength::Plain}, Question{Level::Group, Strength::Strong}};

/// Collects the first failure message; a criterion passes when none is set.
struct Check {
  std::string failure;
  void expect(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // 0 for no limit
  std::function<void(Check&)> body;
};

std::string spec_text(const JordanSpec& s) { return spec_to_json(s).dump(); }

bool reverses(const Matrix& g, const Matrix& a, Level mode) {
  const Matrix id = Matrix::identity(a.domain(), a.rows());
  if (g * g != id) return false;
  return mode == Level::Lie ? g * a * g == -a : g * a * g * a == id;
}

void embedding_laws(Check& c) {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = uniform(rng, 1, 6);
    const Matrix a = random_matrix(rng, ScalarDomain::C, n, n), b = random_matrix(rng, ScalarDomain::C, n, n);
    c.expect(psi_embed(a * b) == psi_embed(a) * psi_embed(b), "Psi(AB) != Psi(A)Psi(B)");
    const Matrix p = random_matrix(rng, ScalarDomain::H, n, n), q = random_matrix(rng, ScalarDomain::H, n, n);
    c.expect(complex_adjoint(p * q) == complex_adjoint(p) * complex_adjoint(q), "chi(AB) != chi(A)chi(B)");
  }
  for (int t = 0; t < 50; ++t) {
    const Matrix x = random_nilpotent(rng, ScalarDomain::C, uniform(rng, 1, 6));
    c.expect(psi_embed(exp_nilpotent(x)) == exp_nilpotent(psi_embed(x)), "Psi(exp X) != exp(Psi X)");
  }
}

void jordan_round_trip(Check& c) {
  std::mt19937_64 rng(202);
  for (auto d : kDomains)
    for (int t = 0; t < 200; ++t) {
      const JordanSpec spec = random_spec(rng, d, 8);
      const Matrix tm = random_conjugator(d, spec.dimension(), rng);
      const Matrix a = tm * assemble(spec) * mat_inverse(tm);
      const Decomposition dec = jordan_decompose(a);
      c.expect(dec.spec == spec, "spec not recovered for " + spec_text(spec));
      c.expect(dec.conjugator * a * mat_inverse(dec.conjugator) == assemble(spec),
               "S A S^-1 != assemble(spec) for " + spec_text(spec));
    }
}

void theorem_cross_check(Check& c) {
  for (auto d : kDomains)
    for (Level level : {Level::Lie, Level::Group})
      for (Condition cond : {Condition::Satisfy, Condition::Violate}) {
        const GenerateParams p{d, 6, cond, {level, Strength::Plain}, 303, 100};
        for (const auto& inst : generate(p)) {
          const Matrix a = inst.matrix();
          const bool similar = similarity_oracle(a, level == Level::Lie ? -a : mat_inverse(a));
          const bool yes = classify(inst.spec, p.question).answer == Answer::Yes;
          c.expect(yes == similar, "classify and similarity oracle disagree on " + spec_text(inst.spec));
          c.expect(yes == (cond == Condition::Satisfy), "corpus condition not met by " + spec_text(inst.spec));
        }
      }
}

void certify_strong(Check& c, const JordanSpec& spec, const Matrix& t, Level level) {
  const Verdict v = classify(spec, {level, Strength::Strong});
  if (v.answer != Answer::Yes || !v.plan) {
    c.expect(false, "strong verdict not yes for " + spec_text(spec));
    return;
  }
  const Matrix a = t * assemble(spec) * mat_inverse(t);
  const Witness w = assemble_witness({spec, mat_inverse(t)}, *v.plan, level);
  certify(a, w);
  c.expect(reverses(w.g, a, level), "witness fails independent recheck for " + spec_text(spec));
}

void strong_reality(Check& c) {
  std::mt19937_64 rng(404);
  std::size_t cases = 0;
  for (std::size_t k = 0; cases < 100; ++k) {
    const ScalarDomain d = kDomains[k % 3];
    const GenerateParams p{d, 10, Condition::Satisfy, {Level::Lie, Strength::Strong}, 404 + k, 1};
    for (const auto& inst : generate(p)) {
      certify_strong(c, inst.spec, inst.conjugator, Level::Lie);
      ++cases;
    }
  }
  for (std::size_t n = 1; n <= 8; ++n)
    for (auto d : kDomains)
      certify_strong(c, {d, {{0, n, false}}}, random_conjugator(d, n, rng), Level::Lie);
  const JordanSpec ii{ScalarDomain::H, {{Gaussian(0, 1), 2, false}, {Gaussian(0, 1), 2, false}}};
  certify_strong(c, ii, random_conjugator(ScalarDomain::H, 4, rng), Level::Lie);
  for (std::size_t n = 1; n <= 4; ++n)
    certify_strong(c, {ScalarDomain::R, {{Gaussian(0, 1), n, true}}}, random_conjugator(ScalarDomain::R, 2 * n, rng),
                   Level::Lie);
}

void strong_reversibility(Check& c) {
  std::mt19937_64 rng(505);
  auto run_case = [&](const JordanSpec& s) {
    certify_strong(c, canonicalize(s), Matrix::identity(s.domain, s.dimension()), Level::Group);
    certify_strong(c, canonicalize(s), random_conjugator(s.domain, s.dimension(), rng), Level::Group);
  };
  for (std::size_t n = 1; n <= 8; ++n)
    for (auto d : kDomains) {
      run_case({d, {{1, n, false}}});
      run_case({d, {{-1, n, false}}});
    }
  for (std::size_t n = 1; n <= 4; ++n)
    for (auto d : {ScalarDomain::C, ScalarDomain::H})
      for (const Gaussian& lambda : {Gaussian(2), Gaussian(1, 1)}) {
        const Gaussian partner = class_invert({lambda, d}).representative;
        run_case({d, {{lambda, n, false}, {partner, n, false}}});
      }
  const Gaussian mu(Rational(3, 5), Rational(4, 5));
  for (std::size_t n = 1; n <= 3; ++n) {
    run_case({ScalarDomain::H, {{mu, n, false}, {mu, n, false}}});
    run_case({ScalarDomain::R, {{mu, n, true}}});
  }
  run_case({ScalarDomain::R, {{Gaussian(1, 1), 1, true}, {Gaussian(Rational(1, 2), Rational(1, 2)), 1, true}}});
}

void counterexamples(Check& c) {
  const JordanSpec qi{ScalarDomain::H, {{Gaussian(0, 1), 1, false}}};
  c.expect(classify(qi, kQuestions[0]).answer == Answer::Yes, "lie/plain on (i) is not yes");
  c.expect(classify(qi, kQuestions[1]).answer == Answer::No, "lie/strong on (i) is not no");
  c.expect(classify(qi, kQuestions[2]).answer == Answer::Yes, "group/plain on (i) is not yes");
  c.expect(classify(qi, kQuestions[3]).answer == Answer::No, "group/strong on (i) is not no");
  const Matrix a = Matrix::diagonal(ScalarDomain::H, {Quaternion::i()});
  for (Level level : {Level::Lie, Level::Group}) {
    c.expect(involution_search(a, level, 200, 606).outcome == Outcome::Inconclusive, "search on (i) not inconclusive");
    c.expect(decide_1x1(Quaternion::i(), level) == Answer::No, "decide_1x1 on (i) is not no");
  }
}

/// True when some involution-fixed non-real class of some size has odd count.
bool has_odd_fixed_nonreal(const JordanSpec& spec, Level level) {
  std::map<std::tuple<std::string, std::size_t>, std::size_t> counts;
  for (const auto& b : spec.blocks) {
    if (b.eigenvalue.is_real()) continue;
    if (class_involution(level, {b.eigenvalue, spec.domain}).representative != b.eigenvalue) continue;
    ++counts[{format_scalar(b.eigenvalue), b.size}];
  }
  for (const auto& [key, n] : counts)
    if (n % 2 == 1) return true;
  return false;
}

void verdict_algebra(Check& c) {
  std::size_t unknowns = 0;
  for (auto d : kDomains)
    for (const auto& q : kQuestions)
      for (Condition cond : {Condition::Satisfy, Condition::Violate}) {
        const GenerateParams p{d, 8, cond, q, 707, 60};
        for (const auto& inst : generate(p)) {
          const JordanSpec& s = inst.spec;
          const Verdict plain = classify(s, {q.level, Strength::Plain});
          const Verdict strong = classify(s, {q.level, Strength::Strong});
          c.expect(strong.answer != Answer::Yes || plain.answer == Answer::Yes, "strong yes without plain yes");
          if (d != ScalarDomain::H) c.expect(strong.answer == plain.answer, "R/C strong differs from plain");
          const bool gap = d == ScalarDomain::H && plain.answer == Answer::Yes && s.dimension() > 1 &&
                           has_odd_fixed_nonreal(s, q.level);
          c.expect((strong.answer == Answer::Unknown) == gap, "unknown outside the odd fixed-class gap: " + spec_text(s));
          if (strong.answer == Answer::Unknown) ++unknowns;
        }
      }
  // Make sure the gap itself is exercised.
  const JordanSpec triple{ScalarDomain::H, {{Gaussian(0, 1), 1, false}, {Gaussian(0, 1), 1, false},
                                           {Gaussian(0, 1), 1, false}}};
  c.expect(classify(triple, kQuestions[3]).answer == Answer::Unknown, "odd fixed class of dimension 3 not unknown");
  c.expect(classify(triple, kQuestions[1]).answer == Answer::Unknown, "odd imaginary class of dimension 3 not unknown");
}

std::string corpus_bytes(const GenerateParams& p) {
  std::ostringstream out;
  for (const auto& inst : generate(p))
    out << spec_to_json(inst.spec).dump() << matrix_to_json(inst.conjugator).dump() << "\n";
  return out.str();
}

std::string reports_bytes(const GenerateParams& p) {
  std::ostringstream out;
  for (const auto& inst : generate(p)) {
    RunConfig cfg;
    cfg.inline_json = matrix_to_json(inst.matrix()).dump();
    cfg.question = p.question;
    cfg.emit_witness = true;
    cfg.oracle_budget = 25;
    cfg.seed = 808;
    out << run(cfg).report.dump() << "\n";
  }
  return out.str();
}

void determinism(Check& c) {
  for (auto d : kDomains)
    for (const auto& q : kQuestions) {
      const GenerateParams p{d, 6, Condition::Satisfy, q, 808, 8};
      c.expect(corpus_bytes(p) == corpus_bytes(p), "corpus differs between identical seeds");
      const std::string first = reports_bytes(p);
      c.expect(first == reports_bytes(p), "reports differ between identical seeds");
      c.expect(first.find("\"witness\":{") != std::string::npos || q.strength == Strength::Plain,
               "no witness emitted in a strong satisfy corpus");
    }
  const Matrix a = Matrix::diagonal(ScalarDomain::H, {Quaternion::i(), Quaternion::i(), Quaternion::i()});
  c.expect(report_to_json(involution_search(a, Level::Group, 60, 9)).dump() ==
               report_to_json(involution_search(a, Level::Group, 60, 9)).dump(),
           "oracle reports differ between identical seeds");
  GenerateParams other{ScalarDomain::C, 6, Condition::Satisfy, kQuestions[2], 809, 8};
  c.expect(corpus_bytes(other) != corpus_bytes({ScalarDomain::C, 6, Condition::Satisfy, kQuestions[2], 808, 8}),
           "different seeds gave identical corpora");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "embedding laws for Psi and chi, Psi(exp X) = exp(Psi X)", 10, embedding_laws},
      {2, "Jordan round-trip over R, C, H", 60, jordan_round_trip},
      {3, "plain verdicts agree with the similarity oracle", 60, theorem_cross_check},
      {4, "constructive strong reality", 0, strong_reality},
      {5, "constructive strong reversibility", 60, strong_reversibility},
      {6, "quaternion (i) counterexamples", 0, counterexamples},
      {7, "verdict algebra", 0, verdict_algebra},
      {8, "determinism", 0, determinism},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (check.failure.empty() && cr.limit_seconds > 0 && seconds > cr.limit_seconds)
      check.failure = "runtime " + std::to_string(seconds) + " s exceeds " + std::to_string(cr.limit_seconds) + " s";
    const bool ok = check.failure.empty();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.title;
    std::cout << " (" << std::fixed << std::setprecision(2) << seconds << " s)";
    if (!ok) std::cout << " -- " << check.failure;
    std::cout << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
