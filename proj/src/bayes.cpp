#include "quasiprob/bayes.hpp"

namespace quasiprob {

ExpertJudgment make_judgment(const SampleSpace& space, std::string expert,
                             std::string_view first, std::string_view second, Rational epsilon) {
  ExpertJudgment j;
  j.expert = std::move(expert);
  j.var_a = space.index_of(first);
  j.var_b = space.index_of(second);
  if (j.var_a == j.var_b) throw std::invalid_argument("judgment pair must be two distinct variables");
  if (abs(epsilon) > 1) throw std::invalid_argument("judgment correlation outside [-1, 1]");
  j.epsilon = std::move(epsilon);
  return j;
}

LikelihoodModel LikelihoodModel::table(Rational agree, Rational disagree) {
  if (agree < 0 || agree > 1 || disagree < 0 || disagree > 1)
    throw std::invalid_argument("likelihood table values must lie in [0, 1]");
  LikelihoodModel m;
  m.family = Family::Table;
  m.table_agree = std::move(agree);
  m.table_disagree = std::move(disagree);
  return m;
}

Rational likelihood(const LikelihoodModel& model, const Rational& epsilon, int pair_product) {
  if (pair_product != 1 && pair_product != -1)
    throw std::invalid_argument("pair product must be +1 or -1");
  if (model.family == LikelihoodModel::Family::Table)
    return pair_product > 0 ? model.table_agree : model.table_disagree;
  if (abs(epsilon) > 1) throw std::invalid_argument("correlation outside [-1, 1]");
  const Rational disagree = (1 - epsilon) * (1 - epsilon) / 4;
  return pair_product > 0 ? 1 - disagree : disagree;
}

Rational likelihood(const LikelihoodModel& model, const ExpertJudgment& judgment,
                    const Atom& atom) {
  return likelihood(model, judgment.epsilon, atom.value(judgment.var_a) * atom.value(judgment.var_b));
}

QuasiDistribution uniform_prior(const SampleSpace& space) {
  RationalVector w = RationalVector::Constant(space.atom_count(), Rational(1, space.atom_count()));
  return QuasiDistribution(space, std::move(w));
}

namespace {

std::vector<std::pair<SubsetMask, Rational>> report_moments(const QuasiDistribution& dist) {
  const SampleSpace& space = dist.space();
  std::vector<std::pair<SubsetMask, Rational>> moments;
  const int n = space.variable_count();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const SubsetMask mask = (SubsetMask{1} << i) | (SubsetMask{1} << j);
      moments.emplace_back(mask, evaluate_moment(dist, mask));
    }
  if (n > 2) moments.emplace_back(space.full_mask(), evaluate_moment(dist, space.full_mask()));
  return moments;
}

void require_proper(const QuasiDistribution& prior) {
  for (std::int64_t a = 0; a < prior.space().atom_count(); ++a)
    if (prior.weight(a) < 0) throw std::invalid_argument("prior must be a proper distribution");
}

}  // namespace

PosteriorReport update(const QuasiDistribution& prior, const ExpertJudgment& judgment,
                       const LikelihoodModel& model) {
  require_proper(prior);
  const SampleSpace& space = prior.space();
  const int n = space.variable_count();
  if (judgment.var_a < 0 || judgment.var_a >= n || judgment.var_b < 0 || judgment.var_b >= n ||
      judgment.var_a == judgment.var_b)
    throw std::invalid_argument("judgment pair must be two distinct space variables");

  RationalVector scaled(space.atom_count());
  for (std::int64_t a = 0; a < space.atom_count(); ++a)
    scaled(a) = likelihood(model, judgment, Atom(space, a)) * prior.weight(a);
  const Rational k = scaled.sum();
  if (k == 0)
    throw ZeroLikelihoodError("judgment by " + judgment.expert +
                              " assigns zero likelihood to every atom of positive prior weight");
  scaled /= k;

  QuasiDistribution posterior(space, std::move(scaled));
  auto moments = report_moments(posterior);
  return PosteriorReport{std::move(posterior), k, std::move(moments)};
}

PosteriorReport pool(const QuasiDistribution& prior, std::span<const ExpertJudgment> judgments,
                     const LikelihoodModel& model) {
  require_proper(prior);
  QuasiDistribution current = prior;
  Rational k_total = 1;
  for (const auto& judgment : judgments) {
    PosteriorReport step = update(current, judgment, model);
    current = std::move(step.posterior);
    k_total *= step.normalization;
  }
  auto moments = report_moments(current);
  return PosteriorReport{std::move(current), std::move(k_total), std::move(moments)};
}

}  // namespace quasiprob
