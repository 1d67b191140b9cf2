#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quasiprob/canonical.hpp"
#include "quasiprob/feasibility.hpp"
#include "quasiprob/oracle.hpp"
#include "quasiprob/solver.hpp"

#include "test_support.hpp"

#include <random>

using namespace quasiprob;
using quasiprob::testing::random_unit_rational;
using quasiprob::testing::random_zero_mean_system;

TEST_CASE("canonical system: minimal mass 1/8, l1 = 5/4") {
  const MinimalSolution s = minimize_negative_mass(canonical_system());
  CHECK(s.mass == Rational(1, 8));
  CHECK(s.l1 == Rational(5, 4));
  CHECK(canonical_system().satisfied_by(s.distribution));
  CHECK(!s.certificate.empty());
  CHECK(oracle_minimal_mass(canonical_system()) == Rational(1, 8));
}

TEST_CASE("unfrustrated system has zero minimal mass") {
  MomentSystem independent(make_space({"X", "Y", "Z"}));
  independent.add({"X"}, 0).add({"Y"}, 0).add({"Z"}, 0);
  independent.add({"X", "Y"}, 0).add({"X", "Z"}, 0).add({"Y", "Z"}, 0);
  const MinimalSolution s = minimize_negative_mass(independent);
  CHECK(s.mass == 0);
  CHECK(negative_mass(s.distribution) == 0);
}

TEST_CASE("fully anticorrelated pairs cost mass 1/2") {
  MomentSystem frustrated(make_space({"X", "Y", "Z"}));
  frustrated.add({"X"}, 0).add({"Y"}, 0).add({"Z"}, 0);
  frustrated.add({"X", "Y"}, -1).add({"X", "Z"}, -1).add({"Y", "Z"}, -1);

  // Parity oracle: weights (1/8)(1 - chi_xy - chi_yz - chi_xz + t*chi_xyz)
  // put mass (2-t)/8 + (2+t)/8 = 1/2 in the negative atoms for all |t| <= 1.
  const MinimalSolution s = minimize_negative_mass(frustrated);
  CHECK(s.mass == Rational(1, 2));
  CHECK(oracle_minimal_mass(frustrated) == Rational(1, 2));
  CHECK(frustrated.satisfied_by(s.distribution));
}

TEST_CASE("canonical triple-moment range at minimal mass is [-1/2, 1/2]") {
  const MomentSystem system = canonical_system();
  const SubsetMask xyz = system.space().full_mask();
  const MomentInterval interval = moment_range(system, xyz);

  CHECK(interval.low == Rational(-1, 2));
  CHECK(interval.high == Rational(1, 2));
  CHECK(interval.mass_budget == Rational(1, 8));

  CHECK(evaluate_moment(interval.witness_low, xyz) == interval.low);
  CHECK(evaluate_moment(interval.witness_high, xyz) == interval.high);
  CHECK(negative_mass(interval.witness_low) <= interval.mass_budget);
  CHECK(negative_mass(interval.witness_high) <= interval.mass_budget);
  CHECK(system.satisfied_by(interval.witness_low));
  CHECK(system.satisfied_by(interval.witness_high));

  const auto [lo, hi] = oracle_moment_range(system, xyz, interval.mass_budget);
  CHECK(lo == interval.low);
  CHECK(hi == interval.high);
}

TEST_CASE("unconstrained triple moment spans [-1, 1] at zero mass") {
  MomentSystem independent(make_space({"X", "Y", "Z"}));
  independent.add({"X"}, 0).add({"Y"}, 0).add({"Z"}, 0);
  independent.add({"X", "Y"}, 0).add({"X", "Z"}, 0).add({"Y", "Z"}, 0);
  const MomentInterval interval = moment_range(independent, 0b111);
  CHECK(interval.mass_budget == 0);
  CHECK(interval.low == -1);
  CHECK(interval.high == 1);
}

TEST_CASE("looser budgets widen the canonical range to [-11/6, 11/6]") {
  const MomentSystem system = canonical_system();
  const SubsetMask xyz = system.space().full_mask();
  const MomentInterval wide = moment_range(system, xyz, Rational(1, 2));

  CHECK(wide.low <= Rational(-1, 2));
  CHECK(wide.high >= Rational(1, 2));
  CHECK(wide.low == Rational(-11, 6));
  CHECK(wide.high == Rational(11, 6));

  const auto [lo, hi] = oracle_moment_range(system, xyz, Rational(1, 2));
  CHECK(lo == wide.low);
  CHECK(hi == wide.high);
}

TEST_CASE("budget monotonicity: intervals nest as the budget grows") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    const MomentSystem system = random_zero_mean_system(rng);
    const SubsetMask xyz = system.space().full_mask();
    const MomentInterval base = moment_range(system, xyz);
    const MomentInterval mid = moment_range(system, xyz, base.mass_budget + Rational(1, 8));
    const MomentInterval wide = moment_range(system, xyz, base.mass_budget + Rational(1, 4));
    CHECK(mid.low <= base.low);
    CHECK(mid.high >= base.high);
    CHECK(wide.low <= mid.low);
    CHECK(wide.high >= mid.high);
  }
}

TEST_CASE("moment_range input validation") {
  const MomentSystem system = canonical_system();
  CHECK_THROWS_AS(moment_range(system, make_subset(system.space(), {"X", "Y"})),
                  std::invalid_argument);  // already constrained
  CHECK_THROWS_AS(moment_range(system, system.space().full_mask(), Rational(1, 16)),
                  BudgetBelowMinimumError);
  try {
    moment_range(system, system.space().full_mask(), Rational(1, 16));
  } catch (const BudgetBelowMinimumError& e) {
    CHECK(e.minimum() == Rational(1, 8));
  }
}

TEST_CASE("published family: frozen atoms at delta = 0") {
  const QuasiDistribution member = published_family(0);
  const RationalVector expected =
      (RationalVector(8) << Rational(-1, 8), Rational(5, 16), Rational(3, 16), Rational(0),
       Rational(1, 8), Rational(3, 16), Rational(5, 16), Rational(0))
          .finished();
  CHECK(member.weights() == expected);
  CHECK(negative_mass(member) == Rational(1, 8));
}

TEST_CASE("published family: delta = -1/16 is the fully consistent member") {
  const QuasiDistribution member = published_family(Rational(-1, 16));
  CHECK(canonical_system().satisfied_by(member));
  CHECK(negative_mass(member) == Rational(1, 8));

  // It equals the parity solution with free triple moment set to zero.
  std::map<SubsetMask, Rational> moments;
  for (SubsetMask s = 1; s < 8; ++s) moments[s] = 0;
  moments[0b101] = Rational(-1, 2);
  moments[0b110] = -1;
  CHECK(member.weights() == from_full_moments(member.space(), moments).weights());
}

TEST_CASE("published family: constraint scorecard pattern") {
  std::mt19937 rng(41);
  const MomentSystem system = canonical_system();
  for (int trial = 0; trial < 20; ++trial) {
    const Rational delta = random_unit_rational(rng, 24);
    const QuasiDistribution member = published_family(delta);

    CHECK(evaluate_moment(member, system.space().full_mask()) == Rational(-1, 4) - 4 * delta);
    for (const auto& check : constraint_scorecard(member, system)) {
      if (check.label == "E(X)")
        CHECK(check.satisfied == (delta == Rational(-1, 16)));
      else
        CHECK(check.satisfied);
    }
  }
  // Mass stays at the minimum exactly on the published minimizing interval.
  CHECK(negative_mass(published_family(Rational(-1, 8))) == Rational(1, 8));
  CHECK(negative_mass(published_family(Rational(-1, 16))) == Rational(1, 8));
  CHECK(negative_mass(published_family(Rational(1, 8))) > Rational(1, 8));
}

TEST_CASE("upper probability clamps negatives and totals 1 + mass") {
  const QuasiDistribution member = published_family(0);
  const UpperMeasure upper = upper_probability(member);
  CHECK(upper.total == Rational(9, 8));
  for (std::int64_t a = 0; a < 8; ++a) {
    CHECK(upper.weights(a) >= 0);
    if (member.weight(a) > 0) CHECK(upper.weights(a) == member.weight(a));
  }

  std::mt19937 rng(43);
  const QuasiDistribution proper = quasiprob::testing::random_proper_distribution(
      make_space({"X", "Y", "Z"}), rng);
  const UpperMeasure unchanged = upper_probability(proper);
  CHECK(unchanged.total == 1);
  CHECK(unchanged.weights == proper.weights());

  std::map<SubsetMask, Rational> moments;
  for (SubsetMask s = 1; s < 8; ++s) moments[s] = 0;
  moments[0b101] = Rational(-1, 2);
  moments[0b110] = -1;
  const QuasiDistribution slice = from_full_moments(make_space({"X", "Y", "Z"}), moments);
  CHECK(upper_probability(slice).total == Rational(9, 8));  // two -1/16 atoms clamped
}

TEST_CASE("minimality certified against enumeration on random systems") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    const MomentSystem system = random_zero_mean_system(rng);
    const MinimalSolution s = minimize_negative_mass(system);
    CHECK(s.mass == oracle_minimal_mass(system));
    CHECK(s.l1 == 1 + 2 * s.mass);
    CHECK(system.satisfied_by(s.distribution));
    CHECK((s.mass == 0) == joint_exists(system).exists);
  }
}
