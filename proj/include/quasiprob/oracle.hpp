#pragma once

#include "quasiprob/bayes.hpp"
#include "quasiprob/distribution.hpp"
#include "quasiprob/moment_system.hpp"
#include "quasiprob/rational.hpp"

#include <span>
#include <utility>

namespace quasiprob {

// Exhaustive cross-checks that avoid the simplex path entirely. The mass
// region {w : negative_mass(w) <= beta} is written with one inequality per
// atom subset (sum of -w over the subset <= beta), which is exponential in
// the atom count, so these run only on spaces of up to 8 atoms. They back
// the `oracle` CLI command and the test suites.

/// True when the enumeration oracles can handle the system: at most 8 atoms
/// and at most 4 free dimensions once the constraints are eliminated.
bool oracle_applicable(const MomentSystem& system);

/// Minimal negative mass by enumeration: the mass function is convex
/// piecewise linear with kinks on the {w_a = 0} hyperplanes, so its minimum
/// over the box-bounded solution set sits at a vertex of that arrangement.
Rational oracle_minimal_mass(const MomentSystem& system);

/// Exact target-moment range over {w : moment rows, negative_mass <= budget}
/// by evaluating the moment at every vertex of the slice.
std::pair<Rational, Rational> oracle_moment_range(const MomentSystem& system, SubsetMask target,
                                                  const Rational& budget);

/// Proper-joint existence by enumerating the vertices of
/// {w >= 0, sum w = 1, moment rows}: feasible iff any vertex exists.
bool oracle_joint_exists(const MomentSystem& system);

/// Single-pass posterior: prior times the product of all judgment
/// likelihoods, normalized once. Order-free by construction.
QuasiDistribution oracle_posterior(const QuasiDistribution& prior,
                                   std::span<const ExpertJudgment> judgments,
                                   const LikelihoodModel& model);

}  // namespace quasiprob
