#pragma once

#include "quasiprob/distribution.hpp"
#include "quasiprob/moment_system.hpp"
#include "quasiprob/rational.hpp"

#include <optional>

namespace quasiprob {

/// Closed-form test detail: the sum of the three pairwise correlations and
/// the data-dependent upper bound 1 + 2*min.
struct SuppesZanottiDetail {
  Rational sum;
  Rational upper;
};

struct FeasibilityVerdict {
  bool exists = false;
  std::optional<QuasiDistribution> witness;  // nonnegative, reproduces all constraints
  std::optional<SuppesZanottiDetail> sz;
};

/**
 * Suppes-Zanotti criterion for three +1/-1 variables with zero means: a
 * proper joint distribution matching the pairwise correlations exists iff
 *
 *   -1 <= e_xy + e_yz + e_xz <= 1 + 2*min(e_xy, e_yz, e_xz).
 *
 * Only valid in the zero-mean three-variable setting; for anything else use
 * joint_exists. Inputs outside [-1, 1] throw.
 */
FeasibilityVerdict suppes_zanotti(const Rational& e_xy, const Rational& e_yz,
                                  const Rational& e_xz);

/**
 * General existence test: is there a proper (nonnegative) distribution
 * matching every constrained moment? Decided exactly by linear-programming
 * feasibility; unconstrained moments are free. Returns a witness when one
 * exists.
 */
FeasibilityVerdict joint_exists(const MomentSystem& system);

/// Runs the closed form when the system matches its setting exactly (three
/// variables, all means constrained to zero, all three pairwise correlations
/// constrained, triple moment free); nullopt otherwise.
std::optional<FeasibilityVerdict> suppes_zanotti_if_applicable(const MomentSystem& system);

}  // namespace quasiprob
