#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quasiprob/bayes.hpp"
#include "quasiprob/oracle.hpp"

#include "test_support.hpp"

#include <algorithm>
#include <random>

using namespace quasiprob;
using quasiprob::testing::random_unit_rational;

namespace {

const SampleSpace& xyz() {
  static const SampleSpace space = make_space({"X", "Y", "Z"});
  return space;
}

std::vector<ExpertJudgment> canonical_judgments() {
  return {make_judgment(xyz(), "alice", "X", "Y", 0),
          make_judgment(xyz(), "bob", "X", "Z", -1),
          make_judgment(xyz(), "carlos", "Y", "Z", Rational(-1, 2))};
}

}  // namespace

TEST_CASE("uniform priors") {
  CHECK(uniform_prior(xyz()).weight(0) == Rational(1, 8));
  CHECK(uniform_prior(make_space({"X"})).weight(1) == Rational(1, 2));
  CHECK(uniform_prior(make_space({"X", "Y"})).weight(3) == Rational(1, 4));
}

TEST_CASE("quadratic likelihood values") {
  const LikelihoodModel model = LikelihoodModel::quadratic();
  CHECK(likelihood(model, 0, +1) == Rational(3, 4));
  CHECK(likelihood(model, 0, -1) == Rational(1, 4));
  CHECK(likelihood(model, -1, -1) == 1);
  CHECK(likelihood(model, -1, +1) == 0);
  CHECK(likelihood(model, 1, -1) == 0);
  CHECK(likelihood(model, 1, +1) == 1);
  CHECK_THROWS_AS(likelihood(model, Rational(3, 2), 1), std::invalid_argument);
  CHECK_THROWS_AS(likelihood(model, 0, 2), std::invalid_argument);
}

TEST_CASE("table likelihoods ignore epsilon") {
  const LikelihoodModel model = LikelihoodModel::table(Rational(2, 3), Rational(1, 3));
  CHECK(likelihood(model, 0, +1) == Rational(2, 3));
  CHECK(likelihood(model, Rational(1, 2), -1) == Rational(1, 3));
  CHECK_THROWS_AS(LikelihoodModel::table(Rational(3, 2), 0), std::invalid_argument);
}

TEST_CASE("single update: eps = 0 on (X,Y) gives the 3/16 / 1/16 split") {
  const PosteriorReport report =
      update(uniform_prior(xyz()), make_judgment(xyz(), "alice", "X", "Y", 0),
             LikelihoodModel::quadratic());
  CHECK(report.normalization == Rational(1, 2));
  for (std::int64_t a = 0; a < 8; ++a) {
    const Atom atom(xyz(), a);
    const Rational expected =
        atom.value("X") == atom.value("Y") ? Rational(3, 16) : Rational(1, 16);
    CHECK(report.posterior.weight(a) == expected);
  }
}

TEST_CASE("single update: eps = -1 concentrates on disagreeing atoms") {
  const PosteriorReport report =
      update(uniform_prior(xyz()), make_judgment(xyz(), "alice", "X", "Y", -1),
             LikelihoodModel::quadratic());
  for (std::int64_t a = 0; a < 8; ++a) {
    const Atom atom(xyz(), a);
    const Rational expected =
        atom.value("X") != atom.value("Y") ? Rational(1, 4) : Rational(0);
    CHECK(report.posterior.weight(a) == expected);
  }
}

TEST_CASE("point-mass prior with nonzero likelihood is unchanged") {
  RationalVector point = RationalVector::Zero(8);
  point(2) = 1;  // +-+ : X and Y disagree
  const QuasiDistribution prior(xyz(), point);
  const PosteriorReport report = update(
      prior, make_judgment(xyz(), "alice", "X", "Y", Rational(-1, 2)), LikelihoodModel::quadratic());
  CHECK(report.posterior.weights() == prior.weights());
}

TEST_CASE("annihilating judgment reports zero likelihood") {
  RationalVector point = RationalVector::Zero(8);
  point(2) = 1;  // +-+ : X,Y disagree, so eps = 1 gives likelihood 0
  const QuasiDistribution prior(xyz(), point);
  CHECK_THROWS_AS(update(prior, make_judgment(xyz(), "alice", "X", "Y", 1),
                         LikelihoodModel::quadratic()),
                  ZeroLikelihoodError);
}

TEST_CASE("improper priors are rejected") {
  RationalVector w(8);
  w << Rational(-1, 8), Rational(2, 8), Rational(1, 8), Rational(1, 8), Rational(1, 8),
      Rational(1, 8), Rational(1, 8), Rational(2, 8);
  const QuasiDistribution signed_prior(xyz(), w);
  CHECK_THROWS_AS(update(signed_prior, make_judgment(xyz(), "alice", "X", "Y", 0),
                         LikelihoodModel::quadratic()),
                  std::invalid_argument);
}

TEST_CASE("pooling the canonical judgments reproduces the published table") {
  const PosteriorReport report =
      pool(uniform_prior(xyz()), canonical_judgments(), LikelihoodModel::quadratic());

  CHECK(report.posterior.weight(1) == Rational(27, 68));  // ++-
  CHECK(report.posterior.weight(6) == Rational(27, 68));  // --+
  CHECK(report.posterior.weight(4) == Rational(7, 68));   // -++
  CHECK(report.posterior.weight(3) == Rational(7, 68));   // +--
  for (const std::int64_t a : {0, 2, 5, 7}) CHECK(report.posterior.weight(a) == 0);

  // Triple moment unchanged from the uniform prior.
  CHECK(evaluate_moment(report.posterior, {"X", "Y", "Z"}) == 0);

  // Normalization bookkeeping: product of stepwise constants equals the
  // single-pass total.
  CHECK(report.normalization == Rational(17, 128));
}

TEST_CASE("empty judgment list returns the prior with k = 1") {
  const PosteriorReport report =
      pool(uniform_prior(xyz()), {}, LikelihoodModel::quadratic());
  CHECK(report.posterior.weights() == uniform_prior(xyz()).weights());
  CHECK(report.normalization == 1);
}

TEST_CASE("pooling is order invariant") {
  std::vector<ExpertJudgment> judgments = canonical_judgments();
  std::sort(judgments.begin(), judgments.end(),
            [](const ExpertJudgment& a, const ExpertJudgment& b) { return a.expert < b.expert; });
  const PosteriorReport reference =
      pool(uniform_prior(xyz()), judgments, LikelihoodModel::quadratic());

  int permutation = 0;
  do {
    const PosteriorReport report =
        pool(uniform_prior(xyz()), judgments, LikelihoodModel::quadratic());
    CHECK(report.posterior.weights() == reference.posterior.weights());
    CHECK(report.normalization == reference.normalization);
    ++permutation;
  } while (std::next_permutation(
      judgments.begin(), judgments.end(),
      [](const ExpertJudgment& a, const ExpertJudgment& b) { return a.expert < b.expert; }));
  CHECK(permutation == 6);
}

TEST_CASE("sequential pooling equals the single-pass product oracle") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<ExpertJudgment> judgments = {
        make_judgment(xyz(), "a", "X", "Y", random_unit_rational(rng)),
        make_judgment(xyz(), "b", "X", "Z", random_unit_rational(rng)),
        make_judgment(xyz(), "c", "Y", "Z", random_unit_rational(rng))};
    const PosteriorReport sequential =
        pool(uniform_prior(xyz()), judgments, LikelihoodModel::quadratic());
    const QuasiDistribution product =
        oracle_posterior(uniform_prior(xyz()), judgments, LikelihoodModel::quadratic());
    CHECK(sequential.posterior.weights() == product.weights());
  }
}

TEST_CASE("pairwise updates never move the triple moment") {
  std::mt19937 rng(59);
  const std::pair<const char*, const char*> pairs[] = {{"X", "Y"}, {"X", "Z"}, {"Y", "Z"}};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ExpertJudgment> judgments;
    std::uniform_int_distribution<int> count_dist(1, 5);
    std::uniform_int_distribution<int> pair_dist(0, 2);
    const int count = count_dist(rng);
    for (int i = 0; i < count; ++i) {
      const auto& [a, b] = pairs[pair_dist(rng)];
      judgments.push_back(
          make_judgment(xyz(), "expert" + std::to_string(i), a, b, random_unit_rational(rng)));
    }
    try {
      const PosteriorReport report =
          pool(uniform_prior(xyz()), judgments, LikelihoodModel::quadratic());
      CHECK(evaluate_moment(report.posterior, {"X", "Y", "Z"}) == 0);
      CHECK(negative_mass(report.posterior) == 0);
      CHECK(report.posterior.weights().sum() == 1);
    } catch (const ZeroLikelihoodError&) {
      // Possible only when opposing extreme judgments annihilate everything.
    }
  }
}

TEST_CASE("posterior reports list pairwise and full moments") {
  const PosteriorReport report =
      pool(uniform_prior(xyz()), canonical_judgments(), LikelihoodModel::quadratic());
  REQUIRE(report.moments.size() == 4);  // XY, XZ, YZ, XYZ
  CHECK(report.moments.back().first == xyz().full_mask());
  CHECK(report.moments.back().second == 0);
}
