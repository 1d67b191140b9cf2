#include "quasiprob/canonical.hpp"

namespace quasiprob {

SampleSpace canonical_space() { return make_space({"X", "Y", "Z"}); }

MomentSystem canonical_system() {
  MomentSystem system(canonical_space());
  system.add({"X"}, 0);
  system.add({"Y"}, 0);
  system.add({"Z"}, 0);
  system.add({"X", "Y"}, 0, "alice");
  system.add({"X", "Z"}, Rational(-1, 2), "bob");
  system.add({"Y", "Z"}, -1, "carlos");
  return system;
}

QuasiDistribution published_family(const Rational& delta) {
  RationalVector w(8);
  w(0) = Rational(-1, 8) - delta;  // +++
  w(1) = Rational(5, 16);          // ++-
  w(2) = Rational(3, 16);          // +-+
  w(3) = -delta;                   // +--
  w(4) = Rational(1, 8) + delta;   // -++
  w(5) = Rational(3, 16);          // -+-
  w(6) = Rational(5, 16);          // --+
  w(7) = delta;                    // ---
  return QuasiDistribution(canonical_space(), std::move(w));
}

std::vector<ConstraintCheck> constraint_scorecard(const QuasiDistribution& dist,
                                                  const MomentSystem& system) {
  std::vector<ConstraintCheck> rows;
  rows.reserve(system.constraints().size());
  for (const auto& c : system.constraints()) {
    ConstraintCheck row;
    row.label = "E(" + subset_label(system.space(), c.subset) + ")";
    row.expected = c.target;
    row.actual = evaluate_moment(dist, c.subset);
    row.satisfied = row.actual == row.expected;
    rows.push_back(std::move(row));
  }
  return rows;
}

bool is_canonical_system(const MomentSystem& system) {
  const MomentSystem reference = canonical_system();
  if (!(system.space() == reference.space())) return false;
  if (system.constraints().size() != reference.constraints().size()) return false;
  for (const auto& c : reference.constraints()) {
    const MomentConstraint* match = system.find(c.subset);
    if (match == nullptr || match->target != c.target) return false;
  }
  return true;
}

Rational published_triple_low() { return Rational(-1, 4); }
Rational published_triple_high() { return Rational(1, 2); }
Rational published_minimal_mass() { return Rational(1, 8); }
Rational family_triple_low() { return Rational(-1, 4); }
Rational family_triple_high() { return Rational(1, 4); }

}  // namespace quasiprob
