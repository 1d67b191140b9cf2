#include "quasiprob/problem_file.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace quasiprob {

namespace {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#')
      ++i;
    tokens.push_back(Token{std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
  }
  return tokens;
}

bool valid_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

class LineParser {
 public:
  LineParser(int line, std::vector<Token> tokens) : line_(line), tokens_(std::move(tokens)) {}

  bool done() const { return pos_ >= tokens_.size(); }

  const Token& peek() const {
    if (done()) throw ParseError(line_, last_column(), "unexpected end of line");
    return tokens_[pos_];
  }

  Token take() {
    const Token t = peek();
    ++pos_;
    return t;
  }

  void expect_keyword(const std::string& word) {
    const Token t = take();
    if (t.text != word) throw ParseError(line_, t.column, "expected '" + word + "'");
  }

  void expect_end() const {
    if (!done())
      throw ParseError(line_, tokens_[pos_].column, "unexpected trailing token '" +
                                                        tokens_[pos_].text + "'");
  }

  [[noreturn]] void fail(const Token& t, const std::string& message) const {
    throw ParseError(line_, t.column, message);
  }

  int line() const { return line_; }
  int last_column() const { return tokens_.empty() ? 1 : tokens_.back().column; }

 private:
  int line_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

class ProblemBuilder {
 public:
  explicit ProblemBuilder(const ParseOptions& options) : options_(options) {}

  void feed(LineParser& p) {
    const Token keyword = p.take();
    if (keyword.text == "var")
      parse_var(p);
    else if (keyword.text == "mean")
      parse_mean(p);
    else if (keyword.text == "corr")
      parse_corr(p);
    else if (keyword.text == "moment")
      parse_moment(p);
    else if (keyword.text == "judgment")
      parse_judgment(p);
    else
      p.fail(keyword, "unknown directive '" + keyword.text + "'");
  }

  ProblemFile finish() && { return std::move(problem_); }

 private:
  void parse_var(LineParser& p) {
    const Token name = p.take();
    if (!valid_identifier(name.text)) p.fail(name, "invalid variable name '" + name.text + "'");
    if (std::find(problem_.variables.begin(), problem_.variables.end(), name.text) !=
        problem_.variables.end())
      p.fail(name, "duplicate variable '" + name.text + "'");
    if (problem_.variables.size() >= 16) p.fail(name, "at most 16 variables supported");
    p.expect_end();
    problem_.variables.push_back(name.text);
  }

  std::string parse_known_variable(LineParser& p) {
    const Token name = p.take();
    if (std::find(problem_.variables.begin(), problem_.variables.end(), name.text) ==
        problem_.variables.end())
      p.fail(name, "unknown variable '" + name.text + "'");
    return name.text;
  }

  Rational parse_value(LineParser& p, bool bounded) {
    const Token t = p.take();
    auto value = try_parse_rational(t.text);
    if (!value && options_.decimal_as_ratio && t.text.find('.') != std::string::npos) {
      try {
        value = rational_from_decimal(t.text);
      } catch (const std::invalid_argument&) {
        value.reset();
      }
    }
    if (!value) {
      if (t.text.find('.') != std::string::npos)
        p.fail(t, "decimal values need the decimal-as-ratio option; use an exact fraction");
      p.fail(t, "expected a rational number, got '" + t.text + "'");
    }
    if (bounded && abs(*value) > 1) p.fail(t, "value " + to_string(*value) + " outside [-1, 1]");
    return *value;
  }

  void check_duplicate_subset(LineParser& p, const std::vector<std::string>& vars) {
    std::vector<std::string> key = vars;
    std::sort(key.begin(), key.end());
    for (const auto& c : problem_.constraints) {
      std::vector<std::string> other = c.variables;
      std::sort(other.begin(), other.end());
      if (other == key)
        throw ParseError(p.line(), 1, "duplicate constraint for the same variable subset");
    }
  }

  void parse_mean(LineParser& p) {
    std::vector<std::string> vars{parse_known_variable(p)};
    p.expect_keyword("=");
    const Rational value = parse_value(p, true);
    p.expect_end();
    check_duplicate_subset(p, vars);
    problem_.constraints.push_back(
        ProblemConstraint{ConstraintKind::Mean, std::move(vars), value, "", p.line()});
  }

  void parse_corr(LineParser& p) {
    std::vector<std::string> vars;
    vars.push_back(parse_known_variable(p));
    vars.push_back(parse_known_variable(p));
    if (vars[0] == vars[1]) throw ParseError(p.line(), 1, "correlation needs two distinct variables");
    p.expect_keyword("=");
    const Rational value = parse_value(p, true);
    std::string expert;
    if (!p.done()) {
      p.expect_keyword("from");
      const Token who = p.take();
      if (!valid_identifier(who.text)) p.fail(who, "invalid expert name '" + who.text + "'");
      expert = who.text;
    }
    p.expect_end();
    check_duplicate_subset(p, vars);
    problem_.constraints.push_back(
        ProblemConstraint{ConstraintKind::Correlation, std::move(vars), value, std::move(expert),
                          p.line()});
  }

  void parse_moment(LineParser& p) {
    std::vector<std::string> vars;
    while (!p.done() && p.peek().text != "=") vars.push_back(parse_known_variable(p));
    if (vars.size() < 2) throw ParseError(p.line(), 1, "moment needs at least two variables");
    for (std::size_t i = 0; i < vars.size(); ++i)
      for (std::size_t j = i + 1; j < vars.size(); ++j)
        if (vars[i] == vars[j]) throw ParseError(p.line(), 1, "repeated variable in moment subset");
    p.expect_keyword("=");
    const Rational value = parse_value(p, true);
    p.expect_end();
    check_duplicate_subset(p, vars);
    problem_.constraints.push_back(
        ProblemConstraint{ConstraintKind::Moment, std::move(vars), value, "", p.line()});
  }

  void parse_judgment(LineParser& p) {
    const Token who = p.take();
    if (!valid_identifier(who.text)) p.fail(who, "invalid expert name '" + who.text + "'");
    const std::string a = parse_known_variable(p);
    const std::string b = parse_known_variable(p);
    if (a == b) throw ParseError(p.line(), 1, "judgment needs two distinct variables");
    p.expect_keyword("eps");
    const Rational eps = parse_value(p, true);
    p.expect_end();
    problem_.judgments.push_back(ProblemJudgment{who.text, a, b, eps, p.line()});
  }

  ParseOptions options_;
  ProblemFile problem_;
};

}  // namespace

ProblemFile parse_problem(std::string_view text, const ParseOptions& options) {
  ProblemBuilder builder(options);
  int line_number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    std::string_view line = text.substr(
        start, end == std::string_view::npos ? text.size() - start : end - start);
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::vector<Token> tokens = tokenize(line);
    if (!tokens.empty()) {
      LineParser parser(line_number, std::move(tokens));
      builder.feed(parser);
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return std::move(builder).finish();
}

std::string serialize(const ProblemFile& problem) {
  std::ostringstream out;
  for (const auto& v : problem.variables) out << "var " << v << "\n";
  for (const auto& c : problem.constraints) {
    switch (c.kind) {
      case ConstraintKind::Mean:
        out << "mean " << c.variables[0] << " = " << to_string(c.value) << "\n";
        break;
      case ConstraintKind::Correlation:
        out << "corr " << c.variables[0] << " " << c.variables[1] << " = " << to_string(c.value);
        if (!c.expert.empty()) out << " from " << c.expert;
        out << "\n";
        break;
      case ConstraintKind::Moment:
        out << "moment";
        for (const auto& v : c.variables) out << " " << v;
        out << " = " << to_string(c.value) << "\n";
        break;
    }
  }
  for (const auto& j : problem.judgments)
    out << "judgment " << j.expert << " " << j.var_a << " " << j.var_b << " eps "
        << to_string(j.epsilon) << "\n";
  return out.str();
}

SampleSpace space_of(const ProblemFile& problem) { return make_space(problem.variables); }

MomentSystem to_moment_system(const ProblemFile& problem) {
  MomentSystem system(space_of(problem));
  for (const auto& c : problem.constraints) {
    const SubsetMask mask =
        make_subset(system.space(), std::span<const std::string>(c.variables));
    system.add(mask, c.value, c.expert);
  }
  return system;
}

std::vector<ExpertJudgment> to_judgments(const ProblemFile& problem, const SampleSpace& space) {
  std::vector<ExpertJudgment> out;
  out.reserve(problem.judgments.size());
  for (const auto& j : problem.judgments)
    out.push_back(make_judgment(space, j.expert, j.var_a, j.var_b, j.epsilon));
  return out;
}

}  // namespace quasiprob
