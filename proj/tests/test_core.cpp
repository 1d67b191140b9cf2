#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quasiprob/canonical.hpp"
#include "quasiprob/distribution.hpp"
#include "quasiprob/sample_space.hpp"

#include "test_support.hpp"

#include <map>

using namespace quasiprob;
using quasiprob::testing::random_proper_distribution;
using quasiprob::testing::random_unit_rational;

TEST_CASE("make_space sizes and canonical atom order") {
  const SampleSpace xyz = make_space({"X", "Y", "Z"});
  CHECK(xyz.atom_count() == 8);
  CHECK(make_space({"X"}).atom_count() == 2);

  // First variable varies slowest, + before -.
  const char* expected[] = {"+++", "++-", "+-+", "+--", "-++", "-+-", "--+", "---"};
  for (std::int64_t a = 0; a < 8; ++a) CHECK(xyz.atom_label(a) == expected[a]);
  CHECK(xyz.value_at(0, 0) == 1);
  CHECK(xyz.value_at(7, 2) == -1);
  CHECK(xyz.value_at(1, 2) == -1);  // ++-: Z flips first
}

TEST_CASE("make_space rejects bad inputs") {
  CHECK_THROWS_AS(make_space({"X", "X"}), std::invalid_argument);
  CHECK_THROWS_AS(make_space({}), std::invalid_argument);
  CHECK_THROWS_AS(make_space({""}), std::invalid_argument);
  std::vector<std::string> too_many;
  for (int i = 0; i < 17; ++i) too_many.push_back("v" + std::to_string(i));
  CHECK_THROWS_AS(make_space(too_many), std::invalid_argument);
}

TEST_CASE("evaluate_moment on known distributions") {
  const SampleSpace space = make_space({"X", "Y", "Z"});
  const QuasiDistribution uniform(space, RationalVector::Constant(8, Rational(1, 8)));
  CHECK(evaluate_moment(uniform, {"X", "Y"}) == 0);

  // Pooled-posterior table: 27/68 on ++- and --+, 7/68 on -++ and +--.
  RationalVector posterior = RationalVector::Zero(8);
  posterior(1) = Rational(27, 68);
  posterior(6) = Rational(27, 68);
  posterior(4) = Rational(7, 68);
  posterior(3) = Rational(7, 68);
  CHECK(evaluate_moment(QuasiDistribution(space, posterior), {"X", "Y", "Z"}) == 0);

  CHECK(evaluate_moment(published_family(0), {"X", "Z"}) == Rational(-1, 2));

  CHECK_THROWS_AS(evaluate_moment(uniform, {"X", "W"}), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_moment(uniform, SubsetMask{0}), std::invalid_argument);
}

TEST_CASE("from_full_moments identity cases") {
  const SampleSpace space = make_space({"X", "Y", "Z"});

  std::map<SubsetMask, Rational> zero;
  for (SubsetMask s = 1; s < 8; ++s) zero[s] = 0;
  CHECK(from_full_moments(space, zero).weights() ==
        RationalVector::Constant(8, Rational(1, 8)));

  std::map<SubsetMask, Rational> ones;
  for (SubsetMask s = 1; s < 8; ++s) ones[s] = 1;
  const QuasiDistribution point = from_full_moments(space, ones);
  CHECK(point.weight(0) == 1);
  for (std::int64_t a = 1; a < 8; ++a) CHECK(point.weight(a) == 0);
}

TEST_CASE("from_full_moments reproduces the frozen canonical solution") {
  const SampleSpace space = make_space({"X", "Y", "Z"});
  std::map<SubsetMask, Rational> moments;
  for (SubsetMask s = 1; s < 8; ++s) moments[s] = 0;
  moments[make_subset(space, {"X", "Z"})] = Rational(-1, 2);
  moments[make_subset(space, {"Y", "Z"})] = -1;

  const QuasiDistribution dist = from_full_moments(space, moments);
  const RationalVector expected =
      (RationalVector(8) << Rational(-1, 16), Rational(5, 16), Rational(3, 16), Rational(1, 16),
       Rational(1, 16), Rational(3, 16), Rational(5, 16), Rational(-1, 16))
          .finished();
  CHECK(dist.weights() == expected);

  // Brute-force confirmation: every prescribed moment comes back exactly.
  for (const auto& [mask, value] : moments) CHECK(evaluate_moment(dist, mask) == value);
  CHECK(negative_mass(dist) == Rational(1, 8));
}

TEST_CASE("from_full_moments input validation") {
  const SampleSpace space = make_space({"X", "Y"});
  std::map<SubsetMask, Rational> missing{{1, Rational(0)}};
  CHECK_THROWS_AS(from_full_moments(space, missing), std::invalid_argument);

  std::map<SubsetMask, Rational> out_of_range{{1, Rational(3, 2)}, {2, 0}, {3, 0}};
  CHECK_THROWS_AS(from_full_moments(space, out_of_range), std::invalid_argument);
}

TEST_CASE("round trip: moments -> distribution -> moments is the identity") {
  std::mt19937 rng(7);
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    const SampleSpace space = make_space(names);
    for (int trial = 0; trial < 25; ++trial) {
      std::map<SubsetMask, Rational> moments;
      for (SubsetMask s = 1; s < (SubsetMask{1} << n); ++s)
        moments[s] = random_unit_rational(rng);
      const QuasiDistribution dist = from_full_moments(space, moments);
      for (const auto& [mask, value] : moments) CHECK(evaluate_moment(dist, mask) == value);
    }
  }
}

TEST_CASE("round trip: proper weights -> moments -> weights") {
  std::mt19937 rng(11);
  const SampleSpace space = make_space({"A", "B", "C"});
  for (int trial = 0; trial < 25; ++trial) {
    const QuasiDistribution dist = random_proper_distribution(space, rng);
    std::map<SubsetMask, Rational> moments;
    for (SubsetMask s = 1; s < 8; ++s) moments[s] = evaluate_moment(dist, s);
    CHECK(from_full_moments(space, moments).weights() == dist.weights());
  }
}

TEST_CASE("event probabilities") {
  const SampleSpace space = make_space({"X", "Y", "Z"});
  const QuasiDistribution uniform(space, RationalVector::Constant(8, Rational(1, 8)));
  CHECK(event_probability(uniform, [](const Atom&) { return true; }) == 1);
  CHECK(event_probability(uniform, [](const Atom& a) { return a.value("X") == 1; }) ==
        Rational(1, 2));
  CHECK(event_probability(published_family(0), [](const Atom& a) { return a.value("X") == 1; }) ==
        Rational(3, 8));
}

TEST_CASE("event additivity and normalization on signed distributions") {
  std::mt19937 rng(13);
  const SampleSpace space = make_space({"X", "Y", "Z"});
  for (int trial = 0; trial < 20; ++trial) {
    std::map<SubsetMask, Rational> moments;
    for (SubsetMask s = 1; s < 8; ++s) moments[s] = random_unit_rational(rng);
    const QuasiDistribution dist = from_full_moments(space, moments);

    CHECK(event_probability(dist, [](const Atom&) { return true; }) == 1);

    // Split atoms by an arbitrary predicate; the two halves must add up.
    auto in_a = [](const Atom& a) { return a.index() % 3 == 0; };
    auto in_b = [&](const Atom& a) { return !in_a(a); };
    CHECK(event_probability(dist, in_a) + event_probability(dist, in_b) == 1);
  }
}

TEST_CASE("negative mass and l1 norm") {
  const SampleSpace space = make_space({"X", "Y", "Z"});
  std::mt19937 rng(17);
  CHECK(negative_mass(random_proper_distribution(space, rng)) == 0);
  CHECK(negative_mass(published_family(0)) == Rational(1, 8));

  for (int trial = 0; trial < 30; ++trial) {
    std::map<SubsetMask, Rational> moments;
    for (SubsetMask s = 1; s < 8; ++s) moments[s] = random_unit_rational(rng);
    const QuasiDistribution dist = from_full_moments(space, moments);
    CHECK(l1_norm(dist) == 1 + 2 * negative_mass(dist));
  }
}

TEST_CASE("weights must sum to one") {
  const SampleSpace space = make_space({"X"});
  RationalVector bad(2);
  bad << Rational(1, 2), Rational(1, 3);
  CHECK_THROWS_AS(QuasiDistribution(space, bad), std::invalid_argument);
}

TEST_CASE("rational parse/print round trip is exact") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational q = random_unit_rational(rng, 997);
    CHECK(parse_rational(to_string(q)) == q);
    CHECK(to_string(parse_rational(to_string(q))) == to_string(q));
  }
  CHECK(to_string(parse_rational("6/8")) == "3/4");
  CHECK(to_string(parse_rational("-10/4")) == "-5/2");
  CHECK(parse_rational("7") == 7);
  CHECK(!try_parse_rational("1.5").has_value());
  CHECK(!try_parse_rational("x").has_value());
  CHECK(!try_parse_rational("1/0").has_value());
  CHECK(rational_from_decimal("-0.125") == Rational(-1, 8));
  CHECK(rational_from_decimal("0.25") == Rational(1, 4));
}
