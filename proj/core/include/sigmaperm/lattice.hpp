#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "sigmaperm/errors.hpp"
#include "sigmaperm/subgroup.hpp"

namespace sigmaperm {

/**
 * Every subgroup of a finite group.
 *
 * Subgroups are sorted by (order, lexicographically least member list), so
 * index 0 is the trivial subgroup and the last index is the whole group.
 * The lattice is immutable after construction.
 */
class SubgroupLattice {
 public:
  const GroupPtr& group_ptr() const noexcept { return group_; }
  const FiniteGroup& group() const noexcept { return *group_; }

  std::size_t size() const noexcept { return subgroups_.size(); }
  const Subgroup& at(std::size_t i) const { return subgroups_.at(i); }
  const std::vector<Subgroup>& subgroups() const noexcept { return subgroups_; }

  std::size_t trivial_index() const noexcept { return 0; }
  std::size_t whole_index() const noexcept { return subgroups_.size() - 1; }

  bool is_normal(std::size_t i) const { return normal_.at(i); }
  std::vector<std::size_t> normal_indices() const;

  /// Conjugacy classes of subgroups as lists of indices, sorted.
  const std::vector<std::vector<std::size_t>>& conjugacy_classes() const noexcept {
    return classes_;
  }
  std::size_t class_of(std::size_t i) const { return class_of_.at(i); }

  std::optional<std::size_t> find(const ElementSet& members) const;

  /// Index of a subgroup known to be in the lattice; throws otherwise.
  std::size_t index_of(const Subgroup& h) const;
  std::size_t index_of(const ElementSet& members) const;

  /// A ≤ B by index.
  bool contains(std::size_t outer, std::size_t inner) const {
    return subgroups_[inner].members().is_subset_of(subgroups_[outer].members());
  }

  /// Assembles a lattice from an externally supplied subgroup list (used by
  /// the cache loader). Sorts, checks closure and recomputes normality and
  /// conjugacy classes.
  static SubgroupLattice from_subgroups(GroupPtr group,
                                        std::vector<Subgroup> subgroups);

 private:
  friend SubgroupLattice all_subgroups(GroupPtr group, std::size_t limit);

  SubgroupLattice() = default;
  void finalize();

  GroupPtr group_;
  std::vector<Subgroup> subgroups_;
  std::vector<bool> normal_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> class_of_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
};

/**
 * Enumerates all subgroups: start from the cyclic subgroups and join each
 * subgroup found with each cyclic subgroup until nothing new appears.
 *
 * Throws LimitExceeded once more than `limit` subgroups have been found.
 */
SubgroupLattice all_subgroups(GroupPtr group,
                              std::size_t limit = kDefaultSubgroupLimit);

/// Normal subgroups, by lattice index.
std::vector<std::size_t> normal_subgroups(const SubgroupLattice& lattice);

}  // namespace sigmaperm
