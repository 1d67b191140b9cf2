#pragma once

#include "quasiprob/distribution.hpp"
#include "quasiprob/rational.hpp"
#include "quasiprob/sample_space.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quasiprob {

/// Every atom was assigned zero likelihood, so no posterior exists.
class ZeroLikelihoodError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One expert's reported pairwise correlation.
struct ExpertJudgment {
  std::string expert;
  int var_a = 0;
  int var_b = 0;
  Rational epsilon;  // in [-1, 1]
};

ExpertJudgment make_judgment(const SampleSpace& space, std::string expert,
                             std::string_view first, std::string_view second, Rational epsilon);

/**
 * Decision maker's model of an expert: the probability of hearing report
 * `epsilon` given the judged pair's product at an atom. The default
 * quadratic family assigns (1-eps)^2/4 to disagreeing pairs (product -1)
 * and the complement to agreeing pairs. A two-entry table may replace it
 * for sensitivity studies; either way the value depends on an atom only
 * through the pair's product.
 */
struct LikelihoodModel {
  enum class Family { Quadratic, Table };
  Family family = Family::Quadratic;
  Rational table_agree;     // product +1 (Table family only)
  Rational table_disagree;  // product -1

  static LikelihoodModel quadratic() { return LikelihoodModel{}; }
  static LikelihoodModel table(Rational agree, Rational disagree);
};

/// Likelihood of report `epsilon` at an atom where the judged pair has the
/// given product (+1 or -1). Throws when |epsilon| > 1.
Rational likelihood(const LikelihoodModel& model, const Rational& epsilon, int pair_product);

/// Convenience overload reading the pair product off an atom.
Rational likelihood(const LikelihoodModel& model, const ExpertJudgment& judgment,
                    const Atom& atom);

/// Proper posterior together with its normalization constant
/// k = sum over atoms of likelihood * prior (posterior = L * prior / k) and
/// the moments a decision maker reads off: every pairwise moment plus the
/// product moment of all variables.
struct PosteriorReport {
  QuasiDistribution posterior;
  Rational normalization;
  std::vector<std::pair<SubsetMask, Rational>> moments;
};

/// Equal weight 2^-n on every atom.
QuasiDistribution uniform_prior(const SampleSpace& space);

/// One Bayes step. The prior must be proper; throws ZeroLikelihoodError when
/// the judgment annihilates every atom of positive prior weight.
PosteriorReport update(const QuasiDistribution& prior, const ExpertJudgment& judgment,
                       const LikelihoodModel& model);

/**
 * Sequential Bayes over a list of judgments. The reported normalization is
 * the product of the stepwise constants, which equals the single-pass total
 * sum(prior * product of likelihoods); the posterior is therefore
 * independent of the judgment order. An empty list returns the prior with
 * normalization 1.
 */
PosteriorReport pool(const QuasiDistribution& prior, std::span<const ExpertJudgment> judgments,
                     const LikelihoodModel& model);

}  // namespace quasiprob
