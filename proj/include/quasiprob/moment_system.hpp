#pragma once

#include "quasiprob/distribution.hpp"
#include "quasiprob/rational.hpp"
#include "quasiprob/sample_space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace quasiprob {

/// One asserted moment: E(prod of subset) = target, optionally attributed
/// to the expert who claimed it.
struct MomentConstraint {
  SubsetMask subset = 0;
  Rational target;
  std::string provenance;
};

/**
 * A partially specified moment problem: the collective claim that a handful
 * of moments take given values, each in [-1, 1], at most one constraint per
 * subset. Unconstrained moments are free.
 */
class MomentSystem {
 public:
  explicit MomentSystem(SampleSpace space) : space_(std::move(space)) {}

  MomentSystem& add(SubsetMask subset, Rational target, std::string provenance = {}) {
    if (!space_.valid_subset(subset))
      throw std::invalid_argument("constraint subset must be a nonempty set of space variables");
    if (abs(target) > 1) throw std::invalid_argument("moment target outside [-1, 1]");
    if (find(subset) != nullptr)
      throw std::invalid_argument("duplicate constraint for subset " +
                                  subset_label(space_, subset));
    constraints_.push_back(MomentConstraint{subset, std::move(target), std::move(provenance)});
    return *this;
  }

  MomentSystem& add(std::initializer_list<std::string> names, Rational target,
                    std::string provenance = {}) {
    return add(make_subset(space_, names), std::move(target), std::move(provenance));
  }

  const SampleSpace& space() const { return space_; }
  const std::vector<MomentConstraint>& constraints() const { return constraints_; }

  const MomentConstraint* find(SubsetMask subset) const {
    for (const auto& c : constraints_)
      if (c.subset == subset) return &c;
    return nullptr;
  }

  /// Exact residual check: does `dist` reproduce every constrained moment?
  bool satisfied_by(const QuasiDistribution& dist) const {
    for (const auto& c : constraints_)
      if (evaluate_moment(dist, c.subset) != c.target) return false;
    return true;
  }

 private:
  SampleSpace space_;
  std::vector<MomentConstraint> constraints_;
};

}  // namespace quasiprob
