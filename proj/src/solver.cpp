#include "quasiprob/solver.hpp"

#include "quasiprob/lp.hpp"

#include <utility>

namespace quasiprob {

namespace {

// Split formulation shared by the mass minimizer and the range optimizer:
// variables pos_a then neg_a per atom, moment rows acting on pos - neg.
LpProblem split_problem(const MomentSystem& system) {
  const SampleSpace& space = system.space();
  const auto atoms = space.atom_count();

  LpProblem lp;
  lp.variables.reserve(2 * atoms);
  for (std::int64_t a = 0; a < atoms; ++a) lp.variables.push_back("pos" + space.atom_label(a));
  for (std::int64_t a = 0; a < atoms; ++a) lp.variables.push_back("neg" + space.atom_label(a));
  lp.bounds.assign(2 * atoms, VariableBounds{Rational(0), std::nullopt});
  lp.sense = Sense::Minimize;
  lp.objective = RationalVector::Zero(2 * atoms);

  {
    LpConstraint normalization{RationalVector(2 * atoms), Relation::Equal, Rational(1)};
    normalization.coeffs.head(atoms).setConstant(1);
    normalization.coeffs.tail(atoms).setConstant(-1);
    lp.constraints.push_back(std::move(normalization));
  }
  for (const auto& c : system.constraints()) {
    LpConstraint row{RationalVector(2 * atoms), Relation::Equal, c.target};
    for (std::int64_t a = 0; a < atoms; ++a) {
      const Rational chi(character(space, a, c.subset));
      row.coeffs(a) = chi;
      row.coeffs(atoms + a) = -chi;
    }
    lp.constraints.push_back(std::move(row));
  }
  return lp;
}

QuasiDistribution recombine(const SampleSpace& space, const RationalVector& point) {
  const auto atoms = space.atom_count();
  RationalVector weights(atoms);
  for (std::int64_t a = 0; a < atoms; ++a) weights(a) = point(a) - point(atoms + a);
  return QuasiDistribution(space, std::move(weights));
}

}  // namespace

MinimalSolution minimize_negative_mass(const MomentSystem& system) {
  LpProblem lp = split_problem(system);
  lp.objective.setConstant(1);  // sum(pos) + sum(neg) = l1 norm

  const LpSolution solution = solve(lp);
  if (solution.status != LpStatus::Optimal)
    throw AffinelyInconsistentError("moment system admits no signed measure");

  QuasiDistribution dist = recombine(system.space(), solution.point);
  MinimalSolution result{std::move(dist), (solution.value - 1) / 2, solution.value,
                         solution.basis};
  // At an optimal vertex no atom carries both a positive and a negative
  // part, so the split objective equals the actual l1 norm.
  if (negative_mass(result.distribution) != result.mass || l1_norm(result.distribution) != result.l1)
    throw std::logic_error("split optimum is not complementary");
  return result;
}

MomentInterval moment_range(const MomentSystem& system, SubsetMask target,
                            const std::optional<Rational>& mass_budget) {
  const SampleSpace& space = system.space();
  if (!space.valid_subset(target))
    throw std::invalid_argument("target must be a nonempty set of space variables");
  if (system.find(target) != nullptr)
    throw std::invalid_argument("target moment is already constrained");

  const Rational minimal = minimize_negative_mass(system).mass;
  const Rational budget = mass_budget.value_or(minimal);
  if (budget < minimal)
    throw BudgetBelowMinimumError("mass budget " + to_string(budget) +
                                      " below attainable minimum " + to_string(minimal),
                                  minimal);

  LpProblem lp = split_problem(system);
  const auto atoms = space.atom_count();
  {
    // Fix the negative part's total to the budget: padding the split keeps
    // this reachable for every measure whose actual mass is within budget.
    LpConstraint mass_row{RationalVector(2 * atoms), Relation::Equal, budget};
    mass_row.coeffs.head(atoms).setConstant(0);
    mass_row.coeffs.tail(atoms).setConstant(1);
    lp.constraints.push_back(std::move(mass_row));
  }
  for (std::int64_t a = 0; a < atoms; ++a) {
    const Rational chi(character(space, a, target));
    lp.objective(a) = chi;
    lp.objective(atoms + a) = -chi;
  }

  lp.sense = Sense::Minimize;
  const LpSolution lo = solve(lp);
  lp.sense = Sense::Maximize;
  const LpSolution hi = solve(lp);
  if (lo.status != LpStatus::Optimal || hi.status != LpStatus::Optimal)
    throw std::logic_error("budgeted moment range must be a bounded feasible program");

  MomentInterval interval{target, lo.value, hi.value, budget, recombine(space, lo.point),
                          recombine(space, hi.point)};
  if (negative_mass(interval.witness_low) > budget || negative_mass(interval.witness_high) > budget)
    throw std::logic_error("range witness exceeds the mass budget");
  return interval;
}

UpperMeasure upper_probability(const QuasiDistribution& dist) {
  const auto atoms = dist.space().atom_count();
  RationalVector clamped(atoms);
  for (std::int64_t a = 0; a < atoms; ++a)
    clamped(a) = dist.weight(a) > 0 ? dist.weight(a) : Rational(0);
  Rational total = clamped.sum();
  return UpperMeasure{dist.space(), std::move(clamped), std::move(total)};
}

}  // namespace quasiprob
