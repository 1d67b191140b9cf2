#include "quasiprob/feasibility.hpp"

#include "quasiprob/lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace quasiprob {

FeasibilityVerdict suppes_zanotti(const Rational& e_xy, const Rational& e_yz,
                                  const Rational& e_xz) {
  for (const Rational* e : {&e_xy, &e_yz, &e_xz})
    if (abs(*e) > 1) throw std::invalid_argument("correlation outside [-1, 1]");

  SuppesZanottiDetail detail;
  detail.sum = e_xy + e_yz + e_xz;
  detail.upper = 1 + 2 * std::min({e_xy, e_yz, e_xz});

  FeasibilityVerdict verdict;
  verdict.exists = detail.sum >= -1 && detail.sum <= detail.upper;
  verdict.sz = detail;
  return verdict;
}

FeasibilityVerdict joint_exists(const MomentSystem& system) {
  const SampleSpace& space = system.space();
  const auto atoms = space.atom_count();

  LpProblem lp;
  lp.variables.reserve(atoms);
  for (std::int64_t a = 0; a < atoms; ++a) lp.variables.push_back("p" + space.atom_label(a));
  lp.objective = RationalVector::Zero(atoms);
  lp.sense = Sense::Minimize;
  lp.bounds.assign(atoms, VariableBounds{Rational(0), std::nullopt});

  LpConstraint normalization{RationalVector::Constant(atoms, 1), Relation::Equal, Rational(1)};
  lp.constraints.push_back(std::move(normalization));
  for (const auto& c : system.constraints()) {
    LpConstraint row{RationalVector(atoms), Relation::Equal, c.target};
    for (std::int64_t a = 0; a < atoms; ++a) row.coeffs(a) = character(space, a, c.subset);
    lp.constraints.push_back(std::move(row));
  }

  FeasibilityVerdict verdict;
  const LpSolution solution = solve(lp);
  if (solution.status == LpStatus::Optimal) {
    verdict.exists = true;
    verdict.witness = QuasiDistribution(space, solution.point);
  }
  return verdict;
}

std::optional<FeasibilityVerdict> suppes_zanotti_if_applicable(const MomentSystem& system) {
  const SampleSpace& space = system.space();
  if (space.variable_count() != 3) return std::nullopt;
  if (system.constraints().size() != 6) return std::nullopt;
  for (int v = 0; v < 3; ++v) {
    const MomentConstraint* mean = system.find(SubsetMask{1} << v);
    if (mean == nullptr || mean->target != 0) return std::nullopt;
  }
  const MomentConstraint* e_xy = system.find(0b011);
  const MomentConstraint* e_yz = system.find(0b110);
  const MomentConstraint* e_xz = system.find(0b101);
  if (e_xy == nullptr || e_yz == nullptr || e_xz == nullptr) return std::nullopt;
  return suppes_zanotti(e_xy->target, e_yz->target, e_xz->target);
}

}  // namespace quasiprob
