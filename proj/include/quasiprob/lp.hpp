#pragma once

#include "quasiprob/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace quasiprob {

enum class Relation { LessEq, Equal, GreaterEq };
enum class Sense { Minimize, Maximize };
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpConstraint {
  RationalVector coeffs;
  Relation relation = Relation::LessEq;
  Rational rhs;
};

struct VariableBounds {
  std::optional<Rational> lower;
  std::optional<Rational> upper;
};

/**
 * Linear program over exact rationals. `bounds` is either empty (all
 * variables free) or one entry per variable. Coefficient vectors must match
 * the variable count; violations throw std::invalid_argument, which is
 * distinct from an Infeasible verdict.
 */
struct LpProblem {
  std::vector<std::string> variables;
  RationalVector objective;
  Sense sense = Sense::Minimize;
  std::vector<LpConstraint> constraints;
  std::vector<VariableBounds> bounds;
};

/**
 * Exact solve result. When status == Optimal, `point` satisfies every
 * constraint with zero residual and `value` is the exact optimum; `basis`
 * names the basic columns of the final simplex dictionary and serves as the
 * optimality certificate.
 */
struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  RationalVector point;
  std::vector<std::string> basis;
};

/**
 * Two-phase primal simplex with Bland's anti-cycling rule, entirely in
 * rational arithmetic: statuses are decided exactly, with no tolerances.
 * Deterministic: identical problems produce identical dictionaries.
 */
LpSolution solve(const LpProblem& problem);

/// Exact residuals (lhs - rhs per constraint) of a candidate point.
RationalVector lp_residuals(const LpProblem& problem, const RationalVector& point);

/**
 * All vertices of the polytope {x : constraints, bounds}, exactly and
 * without duplicates. Equality rows are eliminated first, so only the
 * dimension of the residual affine set drives the combinatorial search.
 *
 * Throws std::invalid_argument when the dimension exceeds 12 and
 * std::domain_error when the region is unbounded. An empty (infeasible)
 * region yields an empty list. Independent of solve(); used as its oracle.
 */
std::vector<RationalVector> enumerate_vertices(const std::vector<LpConstraint>& constraints,
                                               const std::vector<VariableBounds>& bounds,
                                               int dimension);

}  // namespace quasiprob
