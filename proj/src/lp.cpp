#include "quasiprob/lp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quasiprob {

namespace {

void validate(const LpProblem& p) {
  const auto n = static_cast<Eigen::Index>(p.variables.size());
  if (n == 0) throw std::invalid_argument("lp: at least one variable required");
  if (p.objective.size() != n) throw std::invalid_argument("lp: objective dimension mismatch");
  if (!p.bounds.empty() && static_cast<Eigen::Index>(p.bounds.size()) != n)
    throw std::invalid_argument("lp: bounds dimension mismatch");
  for (const auto& c : p.constraints)
    if (c.coeffs.size() != n) throw std::invalid_argument("lp: constraint dimension mismatch");
}

// Standard equality form min c.s, A s = b, s >= 0, together with the affine
// map back to the original variables: x_j = offset_j + sum of signed columns.
struct StandardForm {
  RationalMatrix A;
  RationalVector b;
  RationalVector c;
  std::vector<std::string> labels;
  std::vector<int> col_var;   // original variable index, -1 for slack columns
  std::vector<int> col_sign;  // +1 or -1 contribution of the column
  RationalVector offsets;     // per original variable
  bool bound_conflict = false;
};

struct RawRow {
  RationalVector coeffs;  // over standard columns (pre-slack)
  Relation relation;
  Rational rhs;
};

StandardForm build_standard_form(const LpProblem& p) {
  const int n = static_cast<int>(p.variables.size());
  StandardForm sf;
  sf.offsets = RationalVector::Zero(n);

  struct ColRef {
    int col;
    int sign;
  };
  std::vector<std::vector<ColRef>> var_cols(n);
  std::vector<std::pair<int, Rational>> range_rows;  // shifted column <= span

  for (int j = 0; j < n; ++j) {
    const VariableBounds vb = p.bounds.empty() ? VariableBounds{} : p.bounds[j];
    if (vb.lower && vb.upper && *vb.upper < *vb.lower) sf.bound_conflict = true;
    if (vb.lower) {
      // x = L + s, s >= 0; a finite upper bound becomes the row s <= U - L.
      sf.offsets(j) = *vb.lower;
      var_cols[j].push_back({static_cast<int>(sf.labels.size()), +1});
      sf.labels.push_back(p.variables[j]);
      sf.col_var.push_back(j);
      sf.col_sign.push_back(+1);
      if (vb.upper) range_rows.emplace_back(static_cast<int>(sf.labels.size()) - 1,
                                            *vb.upper - *vb.lower);
    } else if (vb.upper) {
      // x = U - s, s >= 0.
      sf.offsets(j) = *vb.upper;
      var_cols[j].push_back({static_cast<int>(sf.labels.size()), -1});
      sf.labels.push_back(p.variables[j]);
      sf.col_var.push_back(j);
      sf.col_sign.push_back(-1);
    } else {
      // Free variable: x = s+ - s-.
      var_cols[j].push_back({static_cast<int>(sf.labels.size()), +1});
      sf.labels.push_back(p.variables[j] + "+");
      sf.col_var.push_back(j);
      sf.col_sign.push_back(+1);
      var_cols[j].push_back({static_cast<int>(sf.labels.size()), -1});
      sf.labels.push_back(p.variables[j] + "-");
      sf.col_var.push_back(j);
      sf.col_sign.push_back(-1);
    }
  }

  const int n_struct = static_cast<int>(sf.labels.size());

  std::vector<RawRow> rows;
  rows.reserve(p.constraints.size() + range_rows.size());
  for (const auto& c : p.constraints) {
    RawRow row{RationalVector::Zero(n_struct), c.relation, c.rhs};
    for (int j = 0; j < n; ++j) {
      if (c.coeffs(j) == 0) continue;
      row.rhs -= c.coeffs(j) * sf.offsets(j);
      for (const auto& ref : var_cols[j]) row.coeffs(ref.col) += c.coeffs(j) * ref.sign;
    }
    rows.push_back(std::move(row));
  }
  for (const auto& [col, span] : range_rows) {
    RawRow row{RationalVector::Zero(n_struct), Relation::LessEq, span};
    row.coeffs(col) = 1;
    rows.push_back(std::move(row));
  }

  // Normalize to equalities (slack per inequality), then flip rows to b >= 0.
  const int m = static_cast<int>(rows.size());
  int n_slack = 0;
  for (const auto& row : rows)
    if (row.relation != Relation::Equal) ++n_slack;

  sf.A = RationalMatrix::Zero(m, n_struct + n_slack);
  sf.b = RationalVector::Zero(m);
  int slack = 0;
  for (int i = 0; i < m; ++i) {
    RationalVector coeffs = rows[i].coeffs;
    Rational rhs = rows[i].rhs;
    Rational slack_coeff = 0;
    if (rows[i].relation == Relation::LessEq) slack_coeff = 1;
    if (rows[i].relation == Relation::GreaterEq) slack_coeff = -1;
    if (rhs < 0) {
      coeffs = -coeffs;
      rhs = -rhs;
      slack_coeff = -slack_coeff;
    }
    sf.A.row(i).head(n_struct) = coeffs.transpose();
    if (rows[i].relation != Relation::Equal) {
      sf.A(i, n_struct + slack) = slack_coeff;
      ++slack;
    }
    sf.b(i) = rhs;
  }
  for (int s = 0; s < n_slack; ++s) {
    sf.labels.push_back("slack" + std::to_string(s));
    sf.col_var.push_back(-1);
    sf.col_sign.push_back(0);
  }

  // Phase-2 objective over columns (minimization).
  sf.c = RationalVector::Zero(n_struct + n_slack);
  const Rational flip = p.sense == Sense::Maximize ? Rational(-1) : Rational(1);
  for (int j = 0; j < n; ++j)
    for (const auto& ref : var_cols[j]) sf.c(ref.col) += flip * p.objective(j) * ref.sign;

  return sf;
}

// Dense rational simplex dictionary. Bland's rule: entering column of
// smallest index with negative reduced cost; leaving row with the smallest
// basic column index among the minimum-ratio rows.
class Tableau {
 public:
  Tableau(RationalMatrix a, RationalVector b) : t_(a.rows(), a.cols() + 1) {
    t_.leftCols(a.cols()) = a;
    t_.col(a.cols()) = b;
    basic_.assign(a.rows(), -1);
  }

  Eigen::Index rows() const { return t_.rows(); }
  Eigen::Index cols() const { return t_.cols() - 1; }
  const Rational& rhs(Eigen::Index i) const { return t_(i, t_.cols() - 1); }
  const Rational& at(Eigen::Index i, Eigen::Index j) const { return t_(i, j); }
  int basic(Eigen::Index i) const { return basic_[i]; }
  void set_basic(Eigen::Index i, int col) { basic_[i] = col; }

  void set_cost(const RationalVector& c) {
    cost_ = RationalVector::Zero(t_.cols());
    cost_.head(c.size()) = c;
    for (Eigen::Index i = 0; i < rows(); ++i)
      if (basic_[i] >= 0 && cost_(basic_[i]) != 0) cost_ -= cost_(basic_[i]) * t_.row(i).transpose();
  }

  const Rational& reduced_cost(Eigen::Index j) const { return cost_(j); }
  Rational objective() const { return -cost_(t_.cols() - 1); }

  void pivot(Eigen::Index row, Eigen::Index col) {
    t_.row(row) /= t_(row, col);
    for (Eigen::Index k = 0; k < rows(); ++k)
      if (k != row && t_(k, col) != 0) t_.row(k) -= t_(k, col) * t_.row(row);
    if (cost_(col) != 0) cost_ -= cost_(col) * t_.row(row).transpose();
    basic_[row] = static_cast<int>(col);
  }

  // Returns Optimal or Unbounded for the current cost row, restricted to
  // columns below `col_limit`.
  LpStatus iterate(Eigen::Index col_limit) {
    for (long guard = 0;; ++guard) {
      if (guard > 1000000) throw std::logic_error("simplex failed to terminate");
      Eigen::Index entering = -1;
      for (Eigen::Index j = 0; j < col_limit; ++j)
        if (cost_(j) < 0) {
          entering = j;
          break;
        }
      if (entering < 0) return LpStatus::Optimal;

      Eigen::Index leaving = -1;
      Rational best_ratio;
      for (Eigen::Index i = 0; i < rows(); ++i) {
        if (t_(i, entering) <= 0) continue;
        const Rational ratio = rhs(i) / t_(i, entering);
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basic_[i] < basic_[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving < 0) return LpStatus::Unbounded;
      pivot(leaving, entering);
    }
  }

  void drop_row(Eigen::Index row) {
    const Eigen::Index m = rows();
    RationalMatrix next(m - 1, t_.cols());
    Eigen::Index out = 0;
    for (Eigen::Index i = 0; i < m; ++i)
      if (i != row) next.row(out++) = t_.row(i);
    t_ = std::move(next);
    basic_.erase(basic_.begin() + row);
  }

  void drop_columns_from(Eigen::Index first) {
    RationalMatrix next(t_.rows(), first + 1);
    next.leftCols(first) = t_.leftCols(first);
    next.col(first) = t_.col(t_.cols() - 1);
    t_ = std::move(next);
  }

 private:
  RationalMatrix t_;
  RationalVector cost_;
  std::vector<int> basic_;
};

}  // namespace

LpSolution solve(const LpProblem& problem) {
  validate(problem);
  StandardForm sf = build_standard_form(problem);
  if (sf.bound_conflict) return LpSolution{LpStatus::Infeasible, {}, {}, {}};

  const Eigen::Index n_cols = sf.A.cols();
  const Eigen::Index m = sf.A.rows();

  // Phase 1: try to seat slack columns as the initial basis, add artificial
  // columns elsewhere, and minimize the artificial total.
  std::vector<Eigen::Index> artificial_rows;
  for (Eigen::Index i = 0; i < m; ++i) {
    bool has_unit_slack = false;
    for (Eigen::Index j = n_cols - 1; j >= 0 && sf.col_var[j] == -1; --j)
      if (sf.A(i, j) == 1) {
        bool clean = true;
        for (Eigen::Index k = 0; k < m; ++k)
          if (k != i && sf.A(k, j) != 0) clean = false;
        if (clean) {
          has_unit_slack = true;
          break;
        }
      }
    if (!has_unit_slack) artificial_rows.push_back(i);
  }

  const Eigen::Index n_art = static_cast<Eigen::Index>(artificial_rows.size());
  RationalMatrix a_full = RationalMatrix::Zero(m, n_cols + n_art);
  a_full.leftCols(n_cols) = sf.A;
  for (Eigen::Index k = 0; k < n_art; ++k) a_full(artificial_rows[k], n_cols + k) = 1;

  Tableau tab(std::move(a_full), sf.b);
  {
    Eigen::Index art = 0;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (art < n_art && artificial_rows[art] == i) {
        tab.set_basic(i, static_cast<int>(n_cols + art));
        ++art;
        continue;
      }
      for (Eigen::Index j = n_cols - 1; j >= 0; --j)
        if (sf.col_var[j] == -1 && tab.at(i, j) == 1) {
          bool clean = true;
          for (Eigen::Index k = 0; k < m; ++k)
            if (k != i && tab.at(k, j) != 0) clean = false;
          if (clean) {
            tab.set_basic(i, static_cast<int>(j));
            break;
          }
        }
    }
  }

  if (n_art > 0) {
    RationalVector phase1 = RationalVector::Zero(n_cols + n_art);
    phase1.tail(n_art).setConstant(1);
    tab.set_cost(phase1);
    const LpStatus st = tab.iterate(n_cols + n_art);
    if (st != LpStatus::Optimal) throw std::logic_error("phase-1 objective cannot be unbounded");
    if (tab.objective() != 0) return LpSolution{LpStatus::Infeasible, {}, {}, {}};

    // Pivot artificial columns out of the basis; a row that offers no other
    // pivot is linearly dependent and gets dropped.
    for (Eigen::Index i = 0; i < tab.rows();) {
      if (tab.basic(i) < n_cols) {
        ++i;
        continue;
      }
      Eigen::Index pivot_col = -1;
      for (Eigen::Index j = 0; j < n_cols; ++j)
        if (tab.at(i, j) != 0) {
          pivot_col = j;
          break;
        }
      if (pivot_col >= 0) {
        tab.pivot(i, pivot_col);
        ++i;
      } else {
        tab.drop_row(i);
      }
    }
    tab.drop_columns_from(n_cols);
  }

  tab.set_cost(sf.c);
  const LpStatus st = tab.iterate(n_cols);
  if (st == LpStatus::Unbounded) return LpSolution{LpStatus::Unbounded, {}, {}, {}};

  RationalVector s = RationalVector::Zero(n_cols);
  for (Eigen::Index i = 0; i < tab.rows(); ++i) s(tab.basic(i)) = tab.rhs(i);

  const int n = static_cast<int>(problem.variables.size());
  RationalVector x = sf.offsets;
  for (Eigen::Index j = 0; j < n_cols; ++j)
    if (sf.col_var[j] >= 0 && s(j) != 0) x(sf.col_var[j]) += Rational(sf.col_sign[j]) * s(j);

  LpSolution solution;
  solution.status = LpStatus::Optimal;
  solution.point = x;
  solution.value = problem.objective.dot(x);
  for (Eigen::Index i = 0; i < tab.rows(); ++i) solution.basis.push_back(sf.labels[tab.basic(i)]);
  return solution;
}

RationalVector lp_residuals(const LpProblem& problem, const RationalVector& point) {
  validate(problem);
  if (point.size() != static_cast<Eigen::Index>(problem.variables.size()))
    throw std::invalid_argument("lp: point dimension mismatch");
  RationalVector res(problem.constraints.size());
  for (std::size_t i = 0; i < problem.constraints.size(); ++i)
    res(i) = problem.constraints[i].coeffs.dot(point) - problem.constraints[i].rhs;
  return res;
}

namespace {

struct ReducedRow {
  RationalVector coeffs;
  Rational rhs;
};

// Scale by the positive inverse of the first nonzero coefficient, so that
// parallel same-direction rows collide; keep only the tightest rhs.
std::optional<std::vector<ReducedRow>> clean_rows(std::vector<ReducedRow> rows) {
  std::map<std::vector<Rational>, Rational> tightest;
  for (auto& row : rows) {
    Eigen::Index first = -1;
    for (Eigen::Index j = 0; j < row.coeffs.size(); ++j)
      if (row.coeffs(j) != 0) {
        first = j;
        break;
      }
    if (first < 0) {
      if (row.rhs < 0) return std::nullopt;  // 0 <= negative: infeasible
      continue;
    }
    const Rational scale = 1 / abs(row.coeffs(first));
    row.coeffs *= scale;
    row.rhs *= scale;
    std::vector<Rational> key(row.coeffs.data(), row.coeffs.data() + row.coeffs.size());
    auto [it, inserted] = tightest.emplace(std::move(key), row.rhs);
    if (!inserted && row.rhs < it->second) it->second = row.rhs;
  }
  // Opposite directions with an empty gap make the region infeasible.
  for (const auto& [key, rhs] : tightest) {
    std::vector<Rational> opposite(key.size());
    for (std::size_t i = 0; i < key.size(); ++i) opposite[i] = -key[i];
    auto it = tightest.find(opposite);
    if (it != tightest.end() && rhs + it->second < 0) return std::nullopt;
  }
  std::vector<ReducedRow> out;
  out.reserve(tightest.size());
  for (const auto& [key, rhs] : tightest) {
    ReducedRow row;
    row.coeffs = RationalVector(key.size());
    for (std::size_t i = 0; i < key.size(); ++i) row.coeffs(i) = key[i];
    row.rhs = rhs;
    out.push_back(std::move(row));
  }
  return out;
}

// Brute-force vertex enumeration of {y : rows}, assuming boundedness was
// already established: every vertex is the unique solution of some k
// linearly independent active rows.
std::vector<RationalVector> enumerate_core(const std::vector<ReducedRow>& rows, int k) {
  std::vector<RationalVector> vertices;
  std::set<std::vector<Rational>> seen;
  const int m = static_cast<int>(rows.size());
  if (m < k) return vertices;

  std::vector<int> combo(k);
  for (int i = 0; i < k; ++i) combo[i] = i;
  while (true) {
    RationalMatrix mat(k, k);
    RationalVector rhs(k);
    for (int i = 0; i < k; ++i) {
      mat.row(i) = rows[combo[i]].coeffs.transpose();
      rhs(i) = rows[combo[i]].rhs;
    }
    Eigen::FullPivLU<RationalMatrix> lu(mat);
    if (lu.rank() == k) {
      RationalVector y = lu.solve(rhs);
      bool feasible = true;
      for (const auto& row : rows)
        if (row.coeffs.dot(y) > row.rhs) {
          feasible = false;
          break;
        }
      if (feasible) {
        std::vector<Rational> key(y.data(), y.data() + y.size());
        if (seen.insert(key).second) vertices.push_back(std::move(y));
      }
    }

    int pos = k - 1;
    while (pos >= 0 && combo[pos] == m - k + pos) --pos;
    if (pos < 0) break;
    ++combo[pos];
    for (int i = pos + 1; i < k; ++i) combo[i] = combo[i - 1] + 1;
  }
  return vertices;
}

}  // namespace

std::vector<RationalVector> enumerate_vertices(const std::vector<LpConstraint>& constraints,
                                               const std::vector<VariableBounds>& bounds,
                                               int dimension) {
  if (dimension <= 0) throw std::invalid_argument("vertex enumeration: dimension must be positive");
  if (dimension > 12)
    throw std::invalid_argument("vertex enumeration: dimension capped at 12");
  if (!bounds.empty() && static_cast<int>(bounds.size()) != dimension)
    throw std::invalid_argument("vertex enumeration: bounds dimension mismatch");

  std::vector<std::pair<RationalVector, Rational>> equalities;
  std::vector<ReducedRow> inequalities;  // a.x <= b form
  for (const auto& c : constraints) {
    if (c.coeffs.size() != dimension)
      throw std::invalid_argument("vertex enumeration: constraint dimension mismatch");
    switch (c.relation) {
      case Relation::Equal:
        equalities.emplace_back(c.coeffs, c.rhs);
        break;
      case Relation::LessEq:
        inequalities.push_back({c.coeffs, c.rhs});
        break;
      case Relation::GreaterEq:
        inequalities.push_back({-c.coeffs, -c.rhs});
        break;
    }
  }
  for (int j = 0; j < static_cast<int>(bounds.size()); ++j) {
    if (bounds[j].lower) {
      ReducedRow row{RationalVector::Zero(dimension), -*bounds[j].lower};
      row.coeffs(j) = -1;
      inequalities.push_back(std::move(row));
    }
    if (bounds[j].upper) {
      ReducedRow row{RationalVector::Zero(dimension), *bounds[j].upper};
      row.coeffs(j) = 1;
      inequalities.push_back(std::move(row));
    }
  }

  // Eliminate equality rows: parameterize their affine solution set as
  // x = x0 + N y and restate every inequality over y.
  RationalVector x0 = RationalVector::Zero(dimension);
  RationalMatrix kernel;
  int k = dimension;
  if (!equalities.empty()) {
    RationalMatrix a_eq(equalities.size(), dimension);
    RationalVector b_eq(equalities.size());
    for (std::size_t i = 0; i < equalities.size(); ++i) {
      a_eq.row(i) = equalities[i].first.transpose();
      b_eq(i) = equalities[i].second;
    }
    Eigen::FullPivLU<RationalMatrix> lu(a_eq);
    x0 = lu.solve(b_eq);
    if (a_eq * x0 != b_eq) return {};  // inconsistent equalities: empty region
    k = dimension - static_cast<int>(lu.rank());
    if (k > 0) kernel = lu.kernel();
  } else {
    kernel = RationalMatrix::Identity(dimension, dimension);
  }

  if (k == 0) {
    for (const auto& row : inequalities)
      if (row.coeffs.dot(x0) > row.rhs) return {};
    return {x0};
  }

  std::vector<ReducedRow> reduced;
  reduced.reserve(inequalities.size());
  for (const auto& row : inequalities)
    reduced.push_back({kernel.transpose() * row.coeffs, row.rhs - row.coeffs.dot(x0)});

  auto cleaned = clean_rows(std::move(reduced));
  if (!cleaned) return {};

  // Boundedness: the recession cone {A y <= 0} must be trivial. Intersect it
  // with the unit box; any nonzero vertex exposes an unbounded direction.
  {
    std::vector<ReducedRow> cone;
    cone.reserve(cleaned->size() + 2 * k);
    for (const auto& row : *cleaned) cone.push_back({row.coeffs, Rational(0)});
    for (int j = 0; j < k; ++j) {
      ReducedRow lo{RationalVector::Zero(k), Rational(1)};
      lo.coeffs(j) = -1;
      cone.push_back(std::move(lo));
      ReducedRow hi{RationalVector::Zero(k), Rational(1)};
      hi.coeffs(j) = 1;
      cone.push_back(std::move(hi));
    }
    auto cone_cleaned = clean_rows(std::move(cone));
    if (cone_cleaned) {
      for (const auto& v : enumerate_core(*cone_cleaned, k))
        if (v != RationalVector::Zero(k))
          throw std::domain_error("vertex enumeration: unbounded region");
    }
  }

  std::vector<RationalVector> vertices;
  for (const auto& y : enumerate_core(*cleaned, k)) {
    RationalVector x = x0 + kernel * y;
    vertices.push_back(std::move(x));
  }
  std::sort(vertices.begin(), vertices.end(),
            [](const RationalVector& a, const RationalVector& b) {
              for (Eigen::Index i = 0; i < a.size(); ++i) {
                if (a(i) < b(i)) return true;
                if (a(i) > b(i)) return false;
              }
              return false;
            });
  return vertices;
}

}  // namespace quasiprob
