#pragma once

#include "quasiprob/distribution.hpp"
#include "quasiprob/moment_system.hpp"
#include "quasiprob/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace quasiprob {

/// The constrained moments admit no signed measure at all. Cannot happen for
/// a well-formed MomentSystem (each subset constrained once, |target| <= 1);
/// kept distinct from "no proper joint exists".
class AffinelyInconsistentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested mass budget lies below the attainable minimum.
class BudgetBelowMinimumError : public std::invalid_argument {
 public:
  BudgetBelowMinimumError(const std::string& what, Rational minimum)
      : std::invalid_argument(what), minimum_(std::move(minimum)) {}
  const Rational& minimum() const { return minimum_; }

 private:
  Rational minimum_;
};

/// A signed distribution of smallest possible negative mass among all signed
/// measures matching the system. l1 == 1 + 2*mass exactly; `certificate`
/// names the optimal simplex basis. Minimizers need not be unique.
struct MinimalSolution {
  QuasiDistribution distribution;
  Rational mass;
  Rational l1;
  std::vector<std::string> certificate;
};

/// Exact range of an unconstrained moment over all signed measures that
/// match the system and keep negative mass within `mass_budget`. Both
/// endpoints are attained by the stored witnesses.
struct MomentInterval {
  SubsetMask target = 0;
  Rational low;
  Rational high;
  Rational mass_budget;
  QuasiDistribution witness_low;
  QuasiDistribution witness_high;
};

/// Nonnegative measure obtained by clamping negative atoms to zero. Totals
/// 1 + negative_mass of the source, so normalization fails exactly when the
/// source had negative mass.
struct UpperMeasure {
  SampleSpace space;
  RationalVector weights;
  Rational total;
};

/**
 * Minimizes negative mass (equivalently the l1 norm) over all signed
 * measures matching the system, via the split formulation
 * w = pos - neg, pos, neg >= 0, minimizing sum(pos + neg). The minimum mass
 * is 0 exactly when a proper joint distribution exists.
 */
MinimalSolution minimize_negative_mass(const MomentSystem& system);

/**
 * Exact bounds on an unconstrained target moment subject to the system and a
 * negative-mass budget. Omitting the budget uses the minimal attainable
 * mass. Intervals are nested as the budget grows. Throws
 * std::invalid_argument when the target is already constrained and
 * BudgetBelowMinimumError when the budget is unattainably small.
 */
MomentInterval moment_range(const MomentSystem& system, SubsetMask target,
                            const std::optional<Rational>& mass_budget = std::nullopt);

UpperMeasure upper_probability(const QuasiDistribution& dist);

}  // namespace quasiprob
