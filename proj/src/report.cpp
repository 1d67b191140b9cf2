#include "quasiprob/report.hpp"

#include "quasiprob/canonical.hpp"

#include <sstream>

namespace quasiprob {

namespace {

std::string constraint_label(const MomentSystem& system, const MomentConstraint& c) {
  return "E(" + subset_label(system.space(), c.subset) + ")";
}

void append_instance(std::ostringstream& out, const MomentSystem& system) {
  out << "variables:";
  for (const auto& v : system.space().variable_names()) out << " " << v;
  out << "\n";
  for (const auto& c : system.constraints()) {
    out << "  " << constraint_label(system, c) << " = " << to_string(c.target);
    if (!c.provenance.empty()) out << " (from " << c.provenance << ")";
    out << "\n";
  }
}

Json instance_json(const MomentSystem& system) {
  Json instance;
  instance["variables"] = system.space().variable_names();
  Json constraints = Json::array();
  for (const auto& c : system.constraints()) {
    Json row;
    row["subset"] = subset_label(system.space(), c.subset);
    row["value"] = to_string(c.target);
    if (!c.provenance.empty()) row["expert"] = c.provenance;
    constraints.push_back(std::move(row));
  }
  instance["constraints"] = std::move(constraints);
  return instance;
}

Json atoms_json(const SampleSpace& space, const RationalVector& weights) {
  Json rows = Json::array();
  for (std::int64_t a = 0; a < space.atom_count(); ++a) {
    Json row;
    row["atom"] = space.atom_label(a);
    row["weight"] = to_string(weights(a));
    row["weight_decimal"] = to_double(weights(a));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string atoms_line(const SampleSpace& space, const RationalVector& weights) {
  std::ostringstream out;
  for (std::int64_t a = 0; a < space.atom_count(); ++a) {
    if (a > 0) out << ", ";
    out << space.atom_label(a) << "=" << to_string(weights(a));
  }
  return out.str();
}

// The one instance whose published analysis we can compare against.
struct PublishedNotes {
  std::vector<std::string> notes;
  Json discrepancies = Json::array();
};

PublishedNotes bounds_notes(const MomentSystem& system, const BoundsAnalysis& analysis) {
  PublishedNotes out;
  const bool canonical_triple = is_canonical_system(system) &&
                                analysis.interval.target == system.space().full_mask() &&
                                analysis.interval.mass_budget == published_minimal_mass();
  if (!canonical_triple) return out;

  const std::string computed = "[" + to_string(analysis.interval.low) + ", " +
                               to_string(analysis.interval.high) + "]";
  const std::string family = "[" + to_string(family_triple_low()) + ", " +
                             to_string(family_triple_high()) + "]";
  out.notes.push_back(std::string("discrepancy: published range \"") + kPublishedTripleRangeText +
                      "\" differs from the enumeration-verified range " + computed);
  out.notes.push_back(
      "the published one-parameter family behind that range violates E(X)=0 except at "
      "delta = -1/16; over its own minimizing interval it would give " + family +
      "; the enumeration-verified range is authoritative");

  Json d;
  d["quantity"] = "E(XYZ) range at minimal negative mass";
  d["computed"] = computed;
  d["published"] = kPublishedTripleRangeText;
  d["published_family_implied"] = family;
  d["cause"] = "published family violates E(X)=0 except at delta = -1/16";
  out.discrepancies.push_back(std::move(d));
  return out;
}

std::vector<std::string> solve_notes(const MomentSystem& system, const SolveAnalysis& analysis) {
  std::vector<std::string> notes;
  if (is_canonical_system(system)) {
    notes.push_back("published minimal negative mass magnitude for this instance: " +
                    to_string(published_minimal_mass()) +
                    (analysis.minimal.mass == published_minimal_mass() ? " (matches)"
                                                                       : " (DIFFERS)"));
  }
  return notes;
}

}  // namespace

std::string rational_cell(const Rational& q) {
  return to_string(q) + " (~" + decimal_string(q) + ")";
}

CheckAnalysis analyze_check(const MomentSystem& system) {
  return CheckAnalysis{joint_exists(system), suppes_zanotti_if_applicable(system)};
}

SolveAnalysis analyze_solve(const MomentSystem& system) {
  MinimalSolution minimal = minimize_negative_mass(system);
  UpperMeasure upper = upper_probability(minimal.distribution);
  return SolveAnalysis{std::move(minimal), std::move(upper)};
}

BoundsAnalysis analyze_bounds(const MomentSystem& system, SubsetMask target,
                              const std::optional<Rational>& budget) {
  BoundsAnalysis analysis{moment_range(system, target, budget),
                          minimize_negative_mass(system).mass, !budget.has_value()};
  return analysis;
}

std::string render_check_text(const MomentSystem& system, const CheckAnalysis& analysis) {
  std::ostringstream out;
  append_instance(out, system);
  if (analysis.sz) {
    const auto& detail = *analysis.sz->sz;
    out << "suppes-zanotti sum: " << to_string(detail.sum) << "\n";
    out << "suppes-zanotti condition: -1 <= sum <= " << to_string(detail.upper) << "\n";
    out << "suppes-zanotti verdict: " << (analysis.sz->exists ? "proper joint exists"
                                                              : "no proper joint")
        << "\n";
  }
  out << "verdict: " << (analysis.lp.exists ? "a proper joint distribution exists"
                                            : "no proper joint distribution exists")
      << "\n";
  if (analysis.lp.witness) {
    out << "witness: " << atoms_line(system.space(), analysis.lp.witness->weights()) << "\n";
  }
  return out.str();
}

Json render_check_json(const MomentSystem& system, const CheckAnalysis& analysis) {
  Json j;
  j["command"] = "check";
  j["instance"] = instance_json(system);
  if (analysis.sz) {
    Json sz;
    sz["applicable"] = true;
    sz["sum"] = to_string(analysis.sz->sz->sum);
    sz["sum_decimal"] = to_double(analysis.sz->sz->sum);
    sz["upper"] = to_string(analysis.sz->sz->upper);
    sz["exists"] = analysis.sz->exists;
    j["suppes_zanotti"] = std::move(sz);
  } else {
    j["suppes_zanotti"] = Json{{"applicable", false}};
  }
  j["exists"] = analysis.lp.exists;
  j["witness"] =
      analysis.lp.witness ? atoms_json(system.space(), analysis.lp.witness->weights()) : Json();
  return j;
}

std::string render_solve_text(const MomentSystem& system, const SolveAnalysis& analysis) {
  std::ostringstream out;
  append_instance(out, system);
  out << "minimal negative mass: " << rational_cell(analysis.minimal.mass) << "\n";
  out << "l1 norm: " << rational_cell(analysis.minimal.l1) << "\n";
  out << "proper joint exists: " << (analysis.minimal.mass == 0 ? "yes" : "no") << "\n";
  out << "atom  weight  upper\n";
  const SampleSpace& space = system.space();
  for (std::int64_t a = 0; a < space.atom_count(); ++a) {
    out << space.atom_label(a) << "  " << rational_cell(analysis.minimal.distribution.weight(a))
        << "  " << to_string(analysis.upper.weights(a)) << "\n";
  }
  out << "upper probability total: " << rational_cell(analysis.upper.total) << "\n";
  for (const auto& note : solve_notes(system, analysis)) out << "note: " << note << "\n";
  return out.str();
}

Json render_solve_json(const MomentSystem& system, const SolveAnalysis& analysis) {
  Json j;
  j["command"] = "solve";
  j["instance"] = instance_json(system);
  j["minimal_negative_mass"] = to_string(analysis.minimal.mass);
  j["minimal_negative_mass_decimal"] = to_double(analysis.minimal.mass);
  j["l1_norm"] = to_string(analysis.minimal.l1);
  j["proper_joint_exists"] = analysis.minimal.mass == 0;
  j["distribution"] = atoms_json(system.space(), analysis.minimal.distribution.weights());
  Json upper;
  upper["atoms"] = atoms_json(system.space(), analysis.upper.weights);
  upper["total"] = to_string(analysis.upper.total);
  upper["total_decimal"] = to_double(analysis.upper.total);
  j["upper_probability"] = std::move(upper);
  j["certificate"] = analysis.minimal.certificate;
  j["notes"] = solve_notes(system, analysis);
  return j;
}

std::string render_bounds_text(const MomentSystem& system, const BoundsAnalysis& analysis) {
  std::ostringstream out;
  append_instance(out, system);
  const SampleSpace& space = system.space();
  out << "target: E(" << subset_label(space, analysis.interval.target) << ")\n";
  out << "minimal negative mass: " << rational_cell(analysis.minimal_mass) << "\n";
  out << "mass budget: " << rational_cell(analysis.interval.mass_budget)
      << (analysis.minimal_budget ? " (minimal)" : "") << "\n";
  out << "range: [" << to_string(analysis.interval.low) << ", "
      << to_string(analysis.interval.high) << "]\n";
  out << "a-priori range for a product of +/-1 variables: [-1, 1]\n";
  out << "witness low: " << atoms_line(space, analysis.interval.witness_low.weights()) << "\n";
  out << "witness high: " << atoms_line(space, analysis.interval.witness_high.weights()) << "\n";
  for (const auto& note : bounds_notes(system, analysis).notes) out << "note: " << note << "\n";
  return out.str();
}

Json render_bounds_json(const MomentSystem& system, const BoundsAnalysis& analysis) {
  Json j;
  j["command"] = "bounds";
  j["instance"] = instance_json(system);
  j["target"] = subset_label(system.space(), analysis.interval.target);
  j["minimal_negative_mass"] = to_string(analysis.minimal_mass);
  j["budget"] = to_string(analysis.interval.mass_budget);
  j["budget_is_minimal"] = analysis.minimal_budget;
  j["low"] = to_string(analysis.interval.low);
  j["low_decimal"] = to_double(analysis.interval.low);
  j["high"] = to_string(analysis.interval.high);
  j["high_decimal"] = to_double(analysis.interval.high);
  j["apriori_range"] = Json::array({"-1", "1"});
  j["witness_low"] = atoms_json(system.space(), analysis.interval.witness_low.weights());
  j["witness_high"] = atoms_json(system.space(), analysis.interval.witness_high.weights());
  PublishedNotes notes = bounds_notes(system, analysis);
  j["notes"] = notes.notes;
  j["discrepancies"] = std::move(notes.discrepancies);
  return j;
}

std::string render_bayes_text(const MomentSystem& system, const BayesAnalysis& analysis) {
  std::ostringstream out;
  const SampleSpace& space = system.space();
  out << "variables:";
  for (const auto& v : space.variable_names()) out << " " << v;
  out << "\n";
  out << "prior: " << atoms_line(space, analysis.prior.weights()) << "\n";
  out << "judgments:\n";
  for (const auto& j : analysis.judgments)
    out << "  " << j.expert << " (" << space.variable_names()[j.var_a] << ","
        << space.variable_names()[j.var_b] << ") eps = " << to_string(j.epsilon) << "\n";
  out << "normalization k: " << rational_cell(analysis.posterior.normalization) << "\n";
  out << "posterior:\n";
  for (std::int64_t a = 0; a < space.atom_count(); ++a)
    out << "  " << space.atom_label(a) << "  "
        << rational_cell(analysis.posterior.posterior.weight(a)) << "\n";
  for (const auto& [mask, value] : analysis.posterior.moments)
    out << "E(" << subset_label(space, mask) << ") = " << to_string(value) << "\n";
  return out.str();
}

Json render_bayes_json(const MomentSystem& system, const BayesAnalysis& analysis) {
  const SampleSpace& space = system.space();
  Json j;
  j["command"] = "bayes";
  j["instance"] = instance_json(system);
  j["prior"] = atoms_json(space, analysis.prior.weights());
  Json judgments = Json::array();
  for (const auto& judgment : analysis.judgments) {
    Json row;
    row["expert"] = judgment.expert;
    row["pair"] = Json::array({space.variable_names()[judgment.var_a],
                               space.variable_names()[judgment.var_b]});
    row["eps"] = to_string(judgment.epsilon);
    judgments.push_back(std::move(row));
  }
  j["judgments"] = std::move(judgments);
  j["normalization"] = to_string(analysis.posterior.normalization);
  j["posterior"] = atoms_json(space, analysis.posterior.posterior.weights());
  Json moments = Json::array();
  for (const auto& [mask, value] : analysis.posterior.moments) {
    Json row;
    row["subset"] = subset_label(space, mask);
    row["value"] = to_string(value);
    row["value_decimal"] = to_double(value);
    moments.push_back(std::move(row));
  }
  j["moments"] = std::move(moments);
  return j;
}

std::string render_oracle_text(const std::vector<OracleCheck>& checks) {
  std::ostringstream out;
  bool all = true;
  for (const auto& c : checks) {
    out << (c.match ? "MATCH    " : "MISMATCH ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
    all = all && c.match;
  }
  out << (all ? "all oracle checks passed" : "ORACLE MISMATCH DETECTED") << "\n";
  return out.str();
}

Json render_oracle_json(const std::vector<OracleCheck>& checks) {
  Json j;
  j["command"] = "oracle";
  Json rows = Json::array();
  bool all = true;
  for (const auto& c : checks) {
    Json row;
    row["name"] = c.name;
    row["match"] = c.match;
    row["detail"] = c.detail;
    rows.push_back(std::move(row));
    all = all && c.match;
  }
  j["checks"] = std::move(rows);
  j["all_match"] = all;
  return j;
}

}  // namespace quasiprob
