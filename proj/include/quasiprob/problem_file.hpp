#pragma once

#include "quasiprob/bayes.hpp"
#include "quasiprob/moment_system.hpp"
#include "quasiprob/rational.hpp"
#include "quasiprob/sample_space.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace quasiprob {

/// Parse failure with 1-based line/column of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

enum class ConstraintKind { Mean, Correlation, Moment };

struct ProblemConstraint {
  ConstraintKind kind = ConstraintKind::Mean;
  std::vector<std::string> variables;
  Rational value;
  std::string expert;  // optional attribution ("corr A B = v from expert")
  int line = 0;

  bool operator==(const ProblemConstraint& o) const {
    return kind == o.kind && variables == o.variables && value == o.value && expert == o.expert;
  }
};

struct ProblemJudgment {
  std::string expert;
  std::string var_a;
  std::string var_b;
  Rational epsilon;
  int line = 0;

  bool operator==(const ProblemJudgment& o) const {
    return expert == o.expert && var_a == o.var_a && var_b == o.var_b && epsilon == o.epsilon;
  }
};

struct ParseOptions {
  bool decimal_as_ratio = false;  // allow "0.25" and convert exactly
};

/**
 * Declarative problem description, line oriented:
 *
 *   # comment
 *   var X
 *   mean X = 0
 *   corr X Y = -1/2 from bob
 *   moment X Y Z = 1/4
 *   judgment alice X Y eps 0
 *
 * Rationals are integers or "a/b"; decimals are rejected unless
 * ParseOptions::decimal_as_ratio is set. Variables must be declared before
 * use; moment targets must lie in [-1, 1]; a subset may be constrained once.
 */
struct ProblemFile {
  std::vector<std::string> variables;
  std::vector<ProblemConstraint> constraints;
  std::vector<ProblemJudgment> judgments;

  bool operator==(const ProblemFile& o) const {
    return variables == o.variables && constraints == o.constraints && judgments == o.judgments;
  }
};

ProblemFile parse_problem(std::string_view text, const ParseOptions& options = {});

/// Canonical rendering; parse(serialize(p)) == p.
std::string serialize(const ProblemFile& problem);

SampleSpace space_of(const ProblemFile& problem);
MomentSystem to_moment_system(const ProblemFile& problem);
std::vector<ExpertJudgment> to_judgments(const ProblemFile& problem, const SampleSpace& space);

}  // namespace quasiprob
