#pragma once

#include "quasiprob/distribution.hpp"
#include "quasiprob/moment_system.hpp"
#include "quasiprob/rational.hpp"

#include <string>
#include <vector>

namespace quasiprob {

/// Three-variable space X, Y, Z in canonical order.
SampleSpace canonical_space();

/**
 * The canonical bundled instance: zero means with pairwise correlations
 * E(XY) = 0, E(XZ) = -1/2, E(YZ) = -1. The correlation sum is -3/2, so no
 * proper joint distribution exists; the minimal negative mass is 1/8.
 */
MomentSystem canonical_system();

/**
 * The one-parameter family of signed measures quoted in published analyses
 * of the canonical instance:
 *
 *   w(+++) = -1/8 - delta   w(-++) = 1/8 + delta
 *   w(+-+) = w(-+-) = 3/16  w(++-) = w(--+) = 5/16
 *   w(+--) = -delta         w(---) = delta
 *
 * It reproduces the normalization, E(Y) = E(Z) = 0 and all three pairwise
 * targets, but E(X) = E(XYZ) = -1/4 - 4*delta, so the zero-mean constraint
 * on X fails except at delta = -1/16. Kept as a regression fixture because
 * published conclusions drawn from it inherit the defect.
 */
QuasiDistribution published_family(const Rational& delta);

/// One row of a constraint scorecard: the asserted moment against the value
/// an actual distribution delivers.
struct ConstraintCheck {
  std::string label;
  Rational expected;
  Rational actual;
  bool satisfied = false;
};

/// Evaluates every constraint of `system` against `dist`, exactly.
std::vector<ConstraintCheck> constraint_scorecard(const QuasiDistribution& dist,
                                                  const MomentSystem& system);

/// True when `system` is exactly the canonical instance (same variable
/// names, same six constraints). Reports attach published-value notes only
/// in that case.
bool is_canonical_system(const MomentSystem& system);

// Published values for the canonical instance that disagree with the
// oracle-verified results; reports must surface both sides.
inline constexpr const char* kPublishedTripleRangeText = "-1/4 <= E(XYZ) <= 1/2";
Rational published_triple_low();        // -1/4
Rational published_triple_high();       // 1/2
Rational published_minimal_mass();      // 1/8, agrees with the oracle
Rational family_triple_low();           // -1/4: published family over its minimizing range
Rational family_triple_high();          // 1/4

}  // namespace quasiprob
