#include "quasiprob/oracle.hpp"

#include "quasiprob/lp.hpp"

#include <stdexcept>
#include <vector>

namespace quasiprob {

namespace {

constexpr std::int64_t kMaxOracleAtoms = 8;

void guard_size(const SampleSpace& space) {
  if (space.atom_count() > kMaxOracleAtoms)
    throw std::invalid_argument("oracle enumeration limited to spaces of at most 8 atoms");
}

// Equality rows of the system over the atom weights.
std::vector<LpConstraint> moment_rows(const MomentSystem& system) {
  const SampleSpace& space = system.space();
  const auto atoms = space.atom_count();
  std::vector<LpConstraint> rows;

  LpConstraint normalization{RationalVector::Constant(atoms, 1), Relation::Equal, Rational(1)};
  rows.push_back(std::move(normalization));

  for (const auto& c : system.constraints()) {
    LpConstraint row{RationalVector(atoms), Relation::Equal, c.target};
    for (std::int64_t a = 0; a < atoms; ++a) row.coeffs(a) = character(space, a, c.subset);
    rows.push_back(std::move(row));
  }
  return rows;
}

// One inequality per atom subset S: sum over S of -w_a <= budget. Together
// these say exactly negative_mass(w) <= budget.
void add_mass_rows(std::vector<LpConstraint>& rows, std::int64_t atoms, const Rational& budget) {
  const std::int64_t subsets = std::int64_t{1} << atoms;
  for (std::int64_t s = 1; s < subsets; ++s) {
    LpConstraint row{RationalVector::Zero(atoms), Relation::LessEq, budget};
    for (std::int64_t a = 0; a < atoms; ++a)
      if (s & (std::int64_t{1} << a)) row.coeffs(a) = -1;
    rows.push_back(std::move(row));
  }
}

Rational vector_mass(const RationalVector& w) {
  Rational mass = 0;
  for (Eigen::Index a = 0; a < w.size(); ++a)
    if (w(a) < 0) mass -= w(a);
  return mass;
}

int affine_dimension(const std::vector<LpConstraint>& equalities, std::int64_t atoms) {
  RationalMatrix a_eq(equalities.size(), atoms);
  for (std::size_t i = 0; i < equalities.size(); ++i) a_eq.row(i) = equalities[i].coeffs.transpose();
  Eigen::FullPivLU<RationalMatrix> lu(a_eq);
  return static_cast<int>(atoms - lu.rank());
}

constexpr int kMaxFreeDimension = 4;

}  // namespace

bool oracle_applicable(const MomentSystem& system) {
  if (system.space().atom_count() > kMaxOracleAtoms) return false;
  return affine_dimension(moment_rows(system), system.space().atom_count()) <= kMaxFreeDimension;
}

Rational oracle_minimal_mass(const MomentSystem& system) {
  const SampleSpace& space = system.space();
  guard_size(space);
  const auto atoms = space.atom_count();

  // Negative mass is convex piecewise linear with kinks on the hyperplanes
  // {w_a = 0}, so over a polytope its minimum sits at a vertex of the
  // arrangement: a vertex of the box-bounded solution set with up to k
  // coordinates pinned to zero, k the dimension of the affine solution set.
  const std::vector<LpConstraint> equalities = moment_rows(system);
  const int k = affine_dimension(equalities, atoms);
  if (k > kMaxFreeDimension)
    throw std::invalid_argument("mass oracle needs a mostly constrained system (free dim <= 4)");

  // Any minimizer satisfies mass <= (cap-1)/2 coordinatewise within this box:
  // the parity solution with free moments zeroed already has l1 <= cap.
  Rational cap = 1;
  for (const auto& c : system.constraints()) cap += abs(c.target);
  const std::vector<VariableBounds> box(atoms, VariableBounds{-cap, 1 + cap});

  Rational best;
  bool found = false;
  std::vector<std::int64_t> zero_set;
  auto scan = [&](const std::vector<LpConstraint>& rows) {
    for (const auto& v : enumerate_vertices(rows, box, static_cast<int>(atoms))) {
      const Rational mass = vector_mass(v);
      if (!found || mass < best) {
        best = mass;
        found = true;
      }
    }
  };

  // All zero-sets of size <= k, depth-first.
  auto recurse = [&](auto&& self, std::int64_t next) -> void {
    std::vector<LpConstraint> rows = equalities;
    for (const auto a : zero_set) {
      LpConstraint pin{RationalVector::Zero(atoms), Relation::Equal, Rational(0)};
      pin.coeffs(a) = 1;
      rows.push_back(std::move(pin));
    }
    scan(rows);
    if (static_cast<int>(zero_set.size()) == k) return;
    for (std::int64_t a = next; a < atoms; ++a) {
      zero_set.push_back(a);
      self(self, a + 1);
      zero_set.pop_back();
    }
  };
  recurse(recurse, 0);

  if (!found) throw std::logic_error("bounded solution set cannot be empty");
  return best;
}

std::pair<Rational, Rational> oracle_moment_range(const MomentSystem& system, SubsetMask target,
                                                  const Rational& budget) {
  const SampleSpace& space = system.space();
  guard_size(space);
  const auto atoms = space.atom_count();

  // The subset rows survive into the reduced space, so the combinatorial
  // search blows up faster here than in the mass oracle.
  std::vector<LpConstraint> rows = moment_rows(system);
  if (affine_dimension(rows, atoms) > 2)
    throw std::invalid_argument("range oracle needs a mostly constrained system (free dim <= 2)");
  add_mass_rows(rows, atoms, budget);

  const auto vertices = enumerate_vertices(rows, {}, static_cast<int>(atoms));
  if (vertices.empty()) throw std::invalid_argument("mass budget admits no signed measure");

  auto target_moment = [&](const RationalVector& w) {
    Rational total = 0;
    for (std::int64_t a = 0; a < atoms; ++a)
      total += character(space, a, target) > 0 ? w(a) : -w(a);
    return total;
  };
  Rational low = target_moment(vertices.front());
  Rational high = low;
  for (const auto& v : vertices) {
    const Rational value = target_moment(v);
    if (value < low) low = value;
    if (value > high) high = value;
  }
  return {low, high};
}

bool oracle_joint_exists(const MomentSystem& system) {
  guard_size(system.space());
  const auto atoms = system.space().atom_count();
  const std::vector<LpConstraint> rows = moment_rows(system);
  const std::vector<VariableBounds> bounds(atoms, VariableBounds{Rational(0), std::nullopt});
  return !enumerate_vertices(rows, bounds, static_cast<int>(atoms)).empty();
}

QuasiDistribution oracle_posterior(const QuasiDistribution& prior,
                                   std::span<const ExpertJudgment> judgments,
                                   const LikelihoodModel& model) {
  const SampleSpace& space = prior.space();
  RationalVector scaled(space.atom_count());
  for (std::int64_t a = 0; a < space.atom_count(); ++a) {
    Rational product = prior.weight(a);
    for (const auto& judgment : judgments)
      product *= likelihood(model, judgment, Atom(space, a));
    scaled(a) = product;
  }
  const Rational total = scaled.sum();
  if (total == 0) throw ZeroLikelihoodError("all atoms annihilated");
  scaled /= total;
  return QuasiDistribution(space, std::move(scaled));
}

}  // namespace quasiprob
