#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sigmaperm/element_set.hpp"
#include "sigmaperm/finite_group.hpp"

namespace sigmaperm {

/**
 * A subgroup of a parent FiniteGroup, stored as a member bitset together with
 * a small generating set.
 *
 * Construction through the named factories guarantees closure; the raw
 * constructor trusts its caller.
 */
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(GroupPtr parent, ElementSet members,
           std::vector<element_index> generators);

  /// <gens>, computed by closure.
  static Subgroup generated_by(GroupPtr parent,
                               std::span<const element_index> gens);

  /// Wraps a set already known to be a subgroup; a generating set is derived.
  /// Throws InvalidArgument if `members` is not closed.
  static Subgroup from_members(GroupPtr parent, ElementSet members);

  static Subgroup trivial(GroupPtr parent);
  static Subgroup whole(GroupPtr parent);

  const FiniteGroup& parent() const noexcept { return *parent_; }
  const GroupPtr& parent_ptr() const noexcept { return parent_; }
  const ElementSet& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return order_; }
  std::span<const element_index> generators() const noexcept {
    return generators_;
  }

  bool contains(element_index g) const noexcept { return members_.test(g); }
  bool is_subgroup_of(const Subgroup& other) const noexcept {
    return members_.is_subset_of(other.members_);
  }
  bool is_trivial() const noexcept { return order_ == 1; }
  bool is_whole() const noexcept { return order_ == parent_->order(); }

  /// "<(1 2), (1 2 3)>"; the trivial subgroup prints as "<()>".
  std::string describe() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  GroupPtr parent_;
  ElementSet members_;
  std::size_t order_ = 0;
  std::vector<element_index> generators_;
};

/// Closure of `gens` inside `group`, as a member set.
ElementSet closure(const FiniteGroup& group, std::span<const element_index> gens);

/// Closure of a subgroup together with one extra element; `base` must be a
/// subgroup member set and `base_gens` generate it.
ElementSet extend_closure(const FiniteGroup& group, const ElementSet& base,
                          std::span<const element_index> base_gens,
                          element_index extra);

/// Greedy generating set for a closed member set.
std::vector<element_index> generating_set(const FiniteGroup& group,
                                          const ElementSet& members);

/// True iff `members` contains the identity and is closed under products.
bool is_closed(const FiniteGroup& group, const ElementSet& members);

/// {hk : h in H, k in K}.
ElementSet product_set(const Subgroup& h, const Subgroup& k);

/// HK = KH, i.e. HK is a subgroup.
bool permutes(const Subgroup& h, const Subgroup& k);

Subgroup join(const Subgroup& h, const Subgroup& k);
Subgroup intersect(const Subgroup& h, const Subgroup& k);

/// H^x = {x^-1 h x : h in H}.
Subgroup conjugate_subgroup(const Subgroup& h, element_index x);

/// Conjugate member set only, without deriving generators.
ElementSet conjugate_members(const Subgroup& h, element_index x);

/// True iff every element of `by` normalizes `h` (checked on generators).
bool is_normalized_by(const Subgroup& h, const Subgroup& by);

/// H normal in G.
bool is_normal(const Subgroup& h);

/// N_G(H).
Subgroup normalizer(const Subgroup& h);

/// N_K(H) = N_G(H) intersected with K.
Subgroup normalizer_in(const Subgroup& h, const Subgroup& k);

/// H^G, the smallest normal subgroup of G containing H.
Subgroup normal_closure(const Subgroup& h);

/// H_G, the largest normal subgroup of G contained in H.
Subgroup core(const Subgroup& h);

/// Core of H inside an overgroup K: intersection of H^x over x in K.
Subgroup core_in(const Subgroup& h, const Subgroup& k);

}  // namespace sigmaperm
