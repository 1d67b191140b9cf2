#pragma once

#include "quasiprob/rational.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace quasiprob {

/// Subset of variables encoded as a bit mask; bit i selects variable i.
using SubsetMask = std::uint32_t;

/**
 * Sample space of n two-valued (+1/-1) variables, n <= 16.
 *
 * Atoms (complete assignments) are indexed 0 .. 2^n-1 in a fixed canonical
 * order: the first variable varies slowest, +1 sorts before -1. Equivalently,
 * variable i contributes the bit of weight 2^(n-1-i) to the atom index, with
 * bit 0 meaning +1 and bit 1 meaning -1. Atom 0 is all-plus, atom 2^n-1 is
 * all-minus. Reports and golden values depend on this order being stable.
 */
class SampleSpace {
 public:
  explicit SampleSpace(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw std::invalid_argument("sample space needs at least one variable");
    if (names_.size() > 16)
      throw std::invalid_argument("sample space limited to 16 variables (dense atom storage)");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw std::invalid_argument("variable name must be nonempty");
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j])
          throw std::invalid_argument("duplicate variable name: " + names_[i]);
    }
  }

  int variable_count() const { return static_cast<int>(names_.size()); }
  std::int64_t atom_count() const { return std::int64_t{1} << names_.size(); }
  const std::vector<std::string>& variable_names() const { return names_; }

  /// Index of a named variable; throws if unknown.
  int index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("unknown variable: " + std::string(name));
  }

  bool contains(std::string_view name) const {
    for (const auto& n : names_)
      if (n == name) return true;
    return false;
  }

  /// Value (+1 or -1) of variable `var` in atom `atom`.
  int value_at(std::int64_t atom, int var) const {
    const int shift = variable_count() - 1 - var;
    return ((atom >> shift) & 1) ? -1 : +1;
  }

  /// Atom rendered as one sign per variable, e.g. "++-".
  std::string atom_label(std::int64_t atom) const {
    std::string s;
    s.reserve(names_.size());
    for (int v = 0; v < variable_count(); ++v) s.push_back(value_at(atom, v) > 0 ? '+' : '-');
    return s;
  }

  SubsetMask full_mask() const { return static_cast<SubsetMask>(atom_count() - 1); }

  bool valid_subset(SubsetMask mask) const { return mask != 0 && mask <= full_mask(); }

  bool operator==(const SampleSpace& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

/// Lightweight view of one atom; satisfies predicates in event queries.
class Atom {
 public:
  Atom(const SampleSpace& space, std::int64_t index) : space_(&space), index_(index) {}

  std::int64_t index() const { return index_; }
  int value(int var) const { return space_->value_at(index_, var); }
  int value(std::string_view name) const { return space_->value_at(index_, space_->index_of(name)); }
  std::string label() const { return space_->atom_label(index_); }

 private:
  const SampleSpace* space_;
  std::int64_t index_;
};

inline SampleSpace make_space(std::vector<std::string> names) {
  return SampleSpace(std::move(names));
}

/// Mask for a set of named variables; duplicates and unknown names throw.
inline SubsetMask make_subset(const SampleSpace& space, std::span<const std::string> names) {
  SubsetMask mask = 0;
  for (const auto& name : names) {
    const SubsetMask bit = SubsetMask{1} << space.index_of(name);
    if (mask & bit) throw std::invalid_argument("duplicate variable in subset: " + name);
    mask |= bit;
  }
  return mask;
}

inline SubsetMask make_subset(const SampleSpace& space, std::initializer_list<std::string> names) {
  return make_subset(space, std::span<const std::string>(names.begin(), names.size()));
}

/// Variable names of a subset joined in declaration order, e.g. "XYZ".
inline std::string subset_label(const SampleSpace& space, SubsetMask mask) {
  std::string s;
  for (int v = 0; v < space.variable_count(); ++v)
    if (mask & (SubsetMask{1} << v)) s += space.variable_names()[v];
  return s;
}

inline int popcount_mask(SubsetMask mask) {
  int c = 0;
  for (; mask; mask &= mask - 1) ++c;
  return c;
}

/// Character chi_S(atom) = product over the subset of the atom's values; +1 or -1.
inline int character(const SampleSpace& space, std::int64_t atom, SubsetMask subset) {
  int sign = 1;
  for (int v = 0; v < space.variable_count(); ++v)
    if (subset & (SubsetMask{1} << v)) sign *= space.value_at(atom, v);
  return sign;
}

}  // namespace quasiprob
