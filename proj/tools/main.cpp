// Command-line front end: check | solve | bounds | bayes | oracle over
// declarative problem files. Exit codes: 0 success, 1 check found no proper
// joint, 2 input error, 3 internal oracle mismatch.

#include "quasiprob/canonical.hpp"
#include "quasiprob/feasibility.hpp"
#include "quasiprob/lp.hpp"
#include "quasiprob/oracle.hpp"
#include "quasiprob/problem_file.hpp"
#include "quasiprob/report.hpp"
#include "quasiprob/solver.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

namespace {

using namespace quasiprob;

constexpr int kExitNoJoint = 1;
constexpr int kExitInputError = 2;
constexpr int kExitOracleMismatch = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct CommonOptions {
  std::string file;
  bool json = false;
  bool decimal_as_ratio = false;
};

struct LoadedProblem {
  ProblemFile file;
  MomentSystem system;
};

LoadedProblem load(const CommonOptions& options) {
  const std::string text = read_file(options.file);
  ParseOptions parse_options;
  parse_options.decimal_as_ratio = options.decimal_as_ratio;
  ProblemFile problem = parse_problem(text, parse_options);
  MomentSystem system = to_moment_system(problem);
  return LoadedProblem{std::move(problem), std::move(system)};
}

void emit(const CommonOptions& options, const std::string& text, const Json& json) {
  if (options.json)
    std::cout << json.dump(2) << "\n";
  else
    std::cout << text;
}

std::optional<Rational> parse_budget_flag(const std::string& budget) {
  if (budget == "minimal") return std::nullopt;
  Rational value = parse_rational(budget);
  if (value < 0) throw std::invalid_argument("mass budget must be nonnegative");
  return value;
}

LikelihoodModel parse_likelihood_flag(const std::string& spec) {
  if (spec == "quadratic") return LikelihoodModel::quadratic();
  const std::string prefix = "table:";
  if (spec.rfind(prefix, 0) != 0)
    throw std::invalid_argument("likelihood must be 'quadratic' or 'table:<file>'");
  const std::string text = read_file(spec.substr(prefix.size()));
  std::optional<Rational> agree, disagree;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string key, value;
    if (!(row >> key) || key[0] == '#') continue;
    if (!(row >> value)) throw std::invalid_argument("likelihood table: missing value for " + key);
    if (key == "agree")
      agree = parse_rational(value);
    else if (key == "disagree")
      disagree = parse_rational(value);
    else
      throw std::invalid_argument("likelihood table: unknown key '" + key + "'");
  }
  if (!agree || !disagree)
    throw std::invalid_argument("likelihood table needs both 'agree' and 'disagree' entries");
  return LikelihoodModel::table(*agree, *disagree);
}

std::vector<std::string> split_commas(const std::string& csv) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t comma = csv.find(',', start);
    parts.push_back(csv.substr(start, comma == std::string::npos ? csv.size() - start
                                                                 : comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return parts;
}

std::vector<ExpertJudgment> ordered_judgments(const LoadedProblem& loaded,
                                              const SampleSpace& space,
                                              const std::string& order_csv) {
  std::vector<ExpertJudgment> judgments = to_judgments(loaded.file, space);
  if (order_csv.empty()) return judgments;

  const std::vector<std::string> order = split_commas(order_csv);
  std::vector<ExpertJudgment> sorted;
  std::vector<bool> used(judgments.size(), false);
  for (const auto& expert : order) {
    bool any = false;
    for (std::size_t i = 0; i < judgments.size(); ++i) {
      if (!used[i] && judgments[i].expert == expert) {
        sorted.push_back(judgments[i]);
        used[i] = true;
        any = true;
      }
    }
    if (!any) throw std::invalid_argument("--order lists unknown expert '" + expert + "'");
  }
  for (std::size_t i = 0; i < judgments.size(); ++i)
    if (!used[i])
      throw std::invalid_argument("--order omits expert '" + judgments[i].expert + "'");
  return sorted;
}

int run_check(const CommonOptions& options) {
  const LoadedProblem loaded = load(options);
  const CheckAnalysis analysis = analyze_check(loaded.system);
  if (analysis.sz && analysis.sz->exists != analysis.lp.exists) {
    std::cerr << "internal mismatch: closed-form and LP existence verdicts disagree\n";
    return kExitOracleMismatch;
  }
  emit(options, render_check_text(loaded.system, analysis),
       render_check_json(loaded.system, analysis));
  return analysis.lp.exists ? 0 : kExitNoJoint;
}

int run_solve(const CommonOptions& options) {
  const LoadedProblem loaded = load(options);
  const SolveAnalysis analysis = analyze_solve(loaded.system);
  emit(options, render_solve_text(loaded.system, analysis),
       render_solve_json(loaded.system, analysis));
  return 0;
}

int run_bounds(const CommonOptions& options, const std::string& target_csv,
               const std::string& budget) {
  const LoadedProblem loaded = load(options);
  const SubsetMask target = make_subset(
      loaded.system.space(), std::span<const std::string>(split_commas(target_csv)));
  const BoundsAnalysis analysis =
      analyze_bounds(loaded.system, target, parse_budget_flag(budget));
  emit(options, render_bounds_text(loaded.system, analysis),
       render_bounds_json(loaded.system, analysis));
  return 0;
}

int run_bayes(const CommonOptions& options, const std::string& order,
              const std::string& likelihood) {
  const LoadedProblem loaded = load(options);
  if (loaded.file.judgments.empty())
    throw std::invalid_argument("bayes: the problem file contains no judgment lines");
  const SampleSpace& space = loaded.system.space();
  const std::vector<ExpertJudgment> judgments = ordered_judgments(loaded, space, order);
  const LikelihoodModel model = parse_likelihood_flag(likelihood);

  BayesAnalysis analysis{uniform_prior(space), judgments,
                         pool(uniform_prior(space), judgments, model)};
  emit(options, render_bayes_text(loaded.system, analysis),
       render_bayes_json(loaded.system, analysis));
  return 0;
}

// Re-derives every analysis with the enumeration/parity oracles and reports
// exact-match status per check; any mismatch exits with code 3.
int run_oracle(const CommonOptions& options, const std::string& likelihood) {
  const LoadedProblem loaded = load(options);
  const MomentSystem& system = loaded.system;
  const SampleSpace& space = system.space();
  std::vector<OracleCheck> checks;

  {
    const ProblemFile reparsed = parse_problem(serialize(loaded.file));
    checks.push_back({"parse round-trip", reparsed == loaded.file, ""});
  }

  const bool oracle_capable = space.atom_count() <= 8;
  const FeasibilityVerdict lp_verdict = joint_exists(system);
  const MinimalSolution minimal = minimize_negative_mass(system);

  if (oracle_capable) {
    const bool enum_exists = oracle_joint_exists(system);
    checks.push_back({"existence: lp vs vertex enumeration", lp_verdict.exists == enum_exists,
                      lp_verdict.exists ? "proper joint exists" : "no proper joint"});
  } else {
    checks.push_back({"existence: lp vs vertex enumeration", true, "skipped: space > 8 atoms"});
  }

  if (const auto sz = suppes_zanotti_if_applicable(system))
    checks.push_back({"existence: lp vs suppes-zanotti", sz->exists == lp_verdict.exists,
                      "sum = " + to_string(sz->sz->sum)});

  checks.push_back({"existence: lp vs minimal mass", (minimal.mass == 0) == lp_verdict.exists,
                    "mass = " + to_string(minimal.mass)});

  if (oracle_capable) {
    try {
      const Rational enum_mass = oracle_minimal_mass(system);
      checks.push_back({"minimal mass: simplex vs vertex enumeration", minimal.mass == enum_mass,
                        to_string(minimal.mass) + " vs " + to_string(enum_mass)});
    } catch (const std::invalid_argument& e) {
      checks.push_back({"minimal mass: simplex vs vertex enumeration", true,
                        std::string("skipped: ") + e.what()});
    }
  }

  checks.push_back({"minimal solution satisfies all constraints",
                    system.satisfied_by(minimal.distribution), ""});
  checks.push_back({"l1 = 1 + 2 * mass", minimal.l1 == 1 + 2 * minimal.mass, ""});
  {
    const UpperMeasure upper = upper_probability(minimal.distribution);
    checks.push_back({"upper probability total = 1 + mass",
                      upper.total == 1 + negative_mass(minimal.distribution),
                      "total = " + to_string(upper.total)});
  }

  if (system.find(space.full_mask()) == nullptr && space.variable_count() >= 2) {
    const MomentInterval interval = moment_range(system, space.full_mask(), std::nullopt);
    bool ok = evaluate_moment(interval.witness_low, interval.target) == interval.low &&
              evaluate_moment(interval.witness_high, interval.target) == interval.high &&
              negative_mass(interval.witness_low) <= interval.mass_budget &&
              negative_mass(interval.witness_high) <= interval.mass_budget;
    std::string detail = "[" + to_string(interval.low) + ", " + to_string(interval.high) + "]";
    if (oracle_capable) {
      try {
        const auto [lo, hi] = oracle_moment_range(system, interval.target, interval.mass_budget);
        ok = ok && lo == interval.low && hi == interval.high;
        detail += " vs enumeration [" + to_string(lo) + ", " + to_string(hi) + "]";
      } catch (const std::invalid_argument& e) {
        detail += std::string("; enumeration skipped: ") + e.what();
      }
    }
    checks.push_back({"moment range: simplex vs vertex enumeration", ok, detail});
  }

  if (is_canonical_system(system)) {
    bool ok = true;
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> num(-16, 16);
    std::vector<Rational> deltas = {Rational(0), Rational(-1, 16), Rational(-1, 8)};
    for (int i = 0; i < 5; ++i) deltas.emplace_back(num(rng), 16);
    for (const auto& delta : deltas) {
      const QuasiDistribution member = published_family(delta);
      ok = ok && evaluate_moment(member, space.full_mask()) == Rational(-1, 4) - 4 * delta;
      const auto scorecard = constraint_scorecard(member, system);
      for (const auto& row : scorecard) {
        const bool expect_ok = row.label != "E(X)" || delta == Rational(-1, 16);
        ok = ok && row.satisfied == expect_ok;
      }
      if (delta >= Rational(-1, 8) && delta <= 0)
        ok = ok && negative_mass(member) == Rational(1, 8);
    }
    const QuasiDistribution at_zero = published_family(0);
    const RationalVector expected =
        (RationalVector(8) << Rational(-1, 8), Rational(5, 16), Rational(3, 16), Rational(0),
         Rational(1, 8), Rational(3, 16), Rational(5, 16), Rational(0))
            .finished();
    ok = ok && at_zero.weights() == expected;
    checks.push_back({"published family regression", ok,
                      "E(XYZ) = -1/4 - 4*delta; E(X) holds only at delta = -1/16"});
  }

  if (!loaded.file.judgments.empty()) {
    const LikelihoodModel model = parse_likelihood_flag(likelihood);
    const std::vector<ExpertJudgment> judgments = to_judgments(loaded.file, space);
    const QuasiDistribution prior = uniform_prior(space);
    const PosteriorReport sequential = pool(prior, judgments, model);
    const QuasiDistribution product = oracle_posterior(prior, judgments, model);
    checks.push_back({"posterior: sequential vs single-pass product",
                      sequential.posterior == product, ""});

    std::vector<ExpertJudgment> reversed(judgments.rbegin(), judgments.rend());
    checks.push_back({"posterior order invariance",
                      pool(prior, reversed, model).posterior == sequential.posterior, ""});

    if (space.variable_count() >= 3) {
      const SubsetMask full = space.full_mask();
      checks.push_back({"posterior full product moment matches prior",
                        evaluate_moment(sequential.posterior, full) ==
                            evaluate_moment(prior, full),
                        "E = " + to_string(evaluate_moment(sequential.posterior, full))});
    }
  }

  emit(options, render_oracle_text(checks), render_oracle_json(checks));
  for (const auto& c : checks)
    if (!c.match) return kExitOracleMismatch;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decision support for inconsistent pairwise expert judgments"};
  app.require_subcommand(1);

  CommonOptions options;
  std::string target_csv;
  std::string budget = "minimal";
  std::string order;
  std::string likelihood = "quadratic";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", options.file, "problem file")->required();
    cmd->add_flag("--json", options.json, "machine-readable report");
    cmd->add_flag("--decimal-as-ratio", options.decimal_as_ratio,
                  "accept decimal literals and convert them exactly");
  };

  CLI::App* check = app.add_subcommand("check", "does a proper joint distribution exist?");
  add_common(check);
  CLI::App* solve = app.add_subcommand("solve", "minimal-negative-mass signed distribution");
  add_common(solve);
  CLI::App* bounds = app.add_subcommand("bounds", "range of an unconstrained moment");
  add_common(bounds);
  bounds->add_option("--target", target_csv, "comma-separated variables, e.g. X,Y,Z")->required();
  bounds->add_option("--budget", budget, "negative-mass budget: 'minimal' or a rational");
  CLI::App* bayes = app.add_subcommand("bayes", "pooled posterior from judgment lines");
  add_common(bayes);
  bayes->add_option("--order", order, "comma-separated expert application order");
  bayes->add_option("--likelihood", likelihood, "quadratic | table:<file>");
  CLI::App* oracle = app.add_subcommand("oracle", "re-derive all results with enumeration oracles");
  add_common(oracle);
  oracle->add_option("--likelihood", likelihood, "quadratic | table:<file>");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (app.got_subcommand(check)) return run_check(options);
    if (app.got_subcommand(solve)) return run_solve(options);
    if (app.got_subcommand(bounds)) return run_bounds(options, target_csv, budget);
    if (app.got_subcommand(bayes)) return run_bayes(options, order, likelihood);
    if (app.got_subcommand(oracle)) return run_oracle(options, likelihood);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
