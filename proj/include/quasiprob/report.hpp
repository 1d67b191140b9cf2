#pragma once

#include "quasiprob/bayes.hpp"
#include "quasiprob/feasibility.hpp"
#include "quasiprob/moment_system.hpp"
#include "quasiprob/solver.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace quasiprob {

using Json = nlohmann::ordered_json;

/// "1/8 (~0.125)" — exact value first, advisory decimal second.
std::string rational_cell(const Rational& q);

struct CheckAnalysis {
  FeasibilityVerdict lp;
  std::optional<FeasibilityVerdict> sz;
};

struct SolveAnalysis {
  MinimalSolution minimal;
  UpperMeasure upper;
};

struct BoundsAnalysis {
  MomentInterval interval;
  Rational minimal_mass;
  bool minimal_budget = false;
};

struct BayesAnalysis {
  QuasiDistribution prior;
  std::vector<ExpertJudgment> judgments;
  PosteriorReport posterior;
};

struct OracleCheck {
  std::string name;
  bool match = false;
  std::string detail;
};

CheckAnalysis analyze_check(const MomentSystem& system);
SolveAnalysis analyze_solve(const MomentSystem& system);
BoundsAnalysis analyze_bounds(const MomentSystem& system, SubsetMask target,
                              const std::optional<Rational>& budget);

std::string render_check_text(const MomentSystem& system, const CheckAnalysis& analysis);
Json render_check_json(const MomentSystem& system, const CheckAnalysis& analysis);

std::string render_solve_text(const MomentSystem& system, const SolveAnalysis& analysis);
Json render_solve_json(const MomentSystem& system, const SolveAnalysis& analysis);

std::string render_bounds_text(const MomentSystem& system, const BoundsAnalysis& analysis);
Json render_bounds_json(const MomentSystem& system, const BoundsAnalysis& analysis);

std::string render_bayes_text(const MomentSystem& system, const BayesAnalysis& analysis);
Json render_bayes_json(const MomentSystem& system, const BayesAnalysis& analysis);

std::string render_oracle_text(const std::vector<OracleCheck>& checks);
Json render_oracle_json(const std::vector<OracleCheck>& checks);

}  // namespace quasiprob
