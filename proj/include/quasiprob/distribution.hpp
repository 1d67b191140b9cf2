#pragma once

#include "quasiprob/rational.hpp"
#include "quasiprob/sample_space.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace quasiprob {

/**
 * Signed measure over the atoms of a sample space whose weights sum to
 * exactly 1. Weights may be negative; event measures are sums of atom
 * weights, so finite additivity holds by construction. Immutable.
 */
class QuasiDistribution {
 public:
  QuasiDistribution(SampleSpace space, RationalVector weights)
      : space_(std::move(space)), weights_(std::move(weights)) {
    if (weights_.size() != space_.atom_count())
      throw std::invalid_argument("weight vector size does not match atom count");
    if (weights_.sum() != 1) throw std::invalid_argument("weights must sum to exactly 1");
  }

  const SampleSpace& space() const { return space_; }
  const RationalVector& weights() const { return weights_; }
  const Rational& weight(std::int64_t atom) const { return weights_(atom); }

  bool operator==(const QuasiDistribution& other) const {
    return space_ == other.space_ && weights_ == other.weights_;
  }

 private:
  SampleSpace space_;
  RationalVector weights_;
};

/// E(prod of subset) = sum over atoms of weight * chi_subset.
inline Rational evaluate_moment(const QuasiDistribution& dist, SubsetMask subset) {
  const SampleSpace& space = dist.space();
  if (!space.valid_subset(subset))
    throw std::invalid_argument("moment subset must be a nonempty set of space variables");
  Rational total = 0;
  for (std::int64_t a = 0; a < space.atom_count(); ++a) {
    const int chi = character(space, a, subset);
    total += chi > 0 ? dist.weight(a) : -dist.weight(a);
  }
  return total;
}

inline Rational evaluate_moment(const QuasiDistribution& dist,
                                std::initializer_list<std::string> names) {
  return evaluate_moment(dist, make_subset(dist.space(), names));
}

/**
 * Unique signed measure with a prescribed full moment vector, via the parity
 * (Fourier) expansion over the +1/-1 characters:
 *
 *   weight(atom) = 2^-n * (1 + sum_S m_S * chi_S(atom)),  S nonempty.
 *
 * `moments` must contain every nonempty subset (2^n - 1 entries), each value
 * in [-1, 1]. Round-trips exactly with evaluate_moment. This is the
 * engine-independent reconstruction used to cross-check the optimizers.
 */
inline QuasiDistribution from_full_moments(const SampleSpace& space,
                                           const std::map<SubsetMask, Rational>& moments) {
  const SubsetMask full = space.full_mask();
  for (SubsetMask s = 1; s <= full; ++s) {
    auto it = moments.find(s);
    if (it == moments.end())
      throw std::invalid_argument("missing moment for subset " + subset_label(space, s));
    if (abs(it->second) > 1)
      throw std::invalid_argument("moment for subset " + subset_label(space, s) +
                                  " outside [-1, 1]");
  }
  if (moments.size() != static_cast<std::size_t>(full))
    throw std::invalid_argument("moment map contains subsets outside the space");

  const Rational scale(1, space.atom_count());
  RationalVector weights(space.atom_count());
  for (std::int64_t a = 0; a < space.atom_count(); ++a) {
    Rational acc = 1;
    for (const auto& [mask, value] : moments)
      acc += character(space, a, mask) > 0 ? value : -value;
    weights(a) = scale * acc;
  }
  return QuasiDistribution(space, std::move(weights));
}

/// Measure of the event {atom : pred(Atom)} — the sum of its atom weights.
template <class Pred>
Rational event_probability(const QuasiDistribution& dist, Pred&& pred) {
  Rational total = 0;
  for (std::int64_t a = 0; a < dist.space().atom_count(); ++a)
    if (pred(Atom(dist.space(), a))) total += dist.weight(a);
  return total;
}

/// Total absolute weight of the negative atoms; 0 exactly when the
/// distribution is a proper probability distribution.
inline Rational negative_mass(const QuasiDistribution& dist) {
  Rational mass = 0;
  for (std::int64_t a = 0; a < dist.space().atom_count(); ++a)
    if (dist.weight(a) < 0) mass -= dist.weight(a);
  return mass;
}

/// Sum of absolute atom weights; equals 1 + 2 * negative_mass for any
/// distribution normalized to 1.
inline Rational l1_norm(const QuasiDistribution& dist) {
  Rational total = 0;
  for (std::int64_t a = 0; a < dist.space().atom_count(); ++a) total += abs(dist.weight(a));
  return total;
}

}  // namespace quasiprob
