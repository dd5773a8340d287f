#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "revcert/oracle.hpp"
#include "support.hpp"

using namespace revcert;
using namespace revcert::testing;

namespace {

const ScalarDomain R = ScalarDomain::R;
const ScalarDomain C = ScalarDomain::C;
const ScalarDomain H = ScalarDomain::H;

}  // namespace

TEST_CASE("similarity oracle") {
  const Matrix n2 = build_block({0, 2, false}, R);
  CHECK(similarity_oracle(n2, n2));
  const Matrix d = Matrix::diagonal(C, {2, Quaternion(Rational(1, 2))});
  CHECK(similarity_oracle(d, mat_inverse(d)));
  CHECK_FALSE(similarity_oracle(n2, Matrix(R, 2, 2)));
  // Spectrum outside Q(i) is no obstacle.
  const Matrix sqrt2 = Matrix::from_rows(R, {{0, 2}, {1, 0}});
  CHECK(similarity_oracle(sqrt2, -sqrt2));
  CHECK_THROWS_AS(similarity_oracle(n2, Matrix::identity(R, 3)), Error);
  CHECK(similarity_oracle(Matrix::diagonal(H, {Quaternion::i()}), Matrix::diagonal(H, {Quaternion::k()})));
  CHECK_FALSE(similarity_oracle(Matrix::diagonal(H, {Quaternion::i()}), Matrix::diagonal(H, {1})));
}

TEST_CASE("involution search") {
  const OracleReport unipotent = involution_search(build_block({1, 2, false}, R), Level::Group, 20, 1);
  CHECK(unipotent.outcome == Outcome::Confirmed);
  REQUIRE(unipotent.evidence);
  CHECK_NOTHROW(certify(build_block({1, 2, false}, R), *unipotent.evidence));

  const OracleReport identity = involution_search(Matrix::identity(C, 3), Level::Group, 5, 1);
  CHECK(identity.outcome == Outcome::Confirmed);
  CHECK(identity.evidence->g == Matrix::identity(C, 3));

  const OracleReport quaternion_i = involution_search(Matrix::diagonal(H, {Quaternion::i()}), Level::Lie, 50, 1);
  CHECK(quaternion_i.outcome == Outcome::Inconclusive);
  CHECK(quaternion_i.attempts == 50);
  CHECK_FALSE(quaternion_i.evidence);

  try {
    involution_search(build_block({0, 2, false}, C), Level::Group, 5, 1);
    FAIL("expected SingularInput");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularInput);
  }
}

TEST_CASE("search results are sound and reproducible") {
  std::mt19937_64 rng(71);
  for (auto d : {R, C, H})
    for (int t = 0; t < 8; ++t) {
      const JordanSpec spec = random_spec(rng, d, 4, true);
      const Matrix s = random_invertible(rng, d, spec.dimension());
      const Matrix a = s * assemble(spec) * mat_inverse(s);
      const std::uint64_t seed = rng();
      const OracleReport first = involution_search(a, Level::Group, 30, seed);
      CHECK(first == involution_search(a, Level::Group, 30, seed));
      CHECK(first.outcome != Outcome::Refuted);
      if (first.outcome == Outcome::Confirmed) CHECK_NOTHROW(certify(a, *first.evidence));
    }
}

TEST_CASE("search can settle a quaternionic gap case") {
  // J(i,1)^3: no plan from the classification, but g = diag-free involutions exist.
  const Matrix a = Matrix::diagonal(H, {Quaternion::i(), Quaternion::i(), Quaternion::i()});
  const OracleReport r = involution_search(a, Level::Group, 200, 3);
  CHECK(r.outcome != Outcome::Refuted);
  if (r.outcome == Outcome::Confirmed) CHECK_NOTHROW(certify(a, *r.evidence));
}

TEST_CASE("1x1 quaternionic decisions") {
  CHECK(decide_1x1(Quaternion::i(), Level::Lie) == Answer::No);
  CHECK(decide_1x1(Quaternion(1), Level::Group) == Answer::Yes);
  CHECK(decide_1x1(Quaternion(-1), Level::Group) == Answer::Yes);
  CHECK(decide_1x1(Quaternion(), Level::Lie) == Answer::Yes);
  CHECK(decide_1x1(Quaternion::i(), Level::Group) == Answer::No);
  CHECK_THROWS_AS(decide_1x1(Quaternion(), Level::Group), Error);
  for (int s : {1, -1}) {
    const JordanSpec spec{H, {{s, 1, false}}};
    CHECK(classify(spec, {Level::Group, Strength::Strong}).answer == Answer::Yes);
  }
}
