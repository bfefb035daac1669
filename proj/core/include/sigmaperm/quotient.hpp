#pragma once

#include <vector>

#include "sigmaperm/finite_group.hpp"
#include "sigmaperm/subgroup.hpp"

namespace sigmaperm {

/**
 * G/N realised as a permutation group: G acts on the right cosets of N by
 * right multiplication, so the degree of the quotient is |G:N|.
 */
class Quotient {
 public:
  const GroupPtr& group() const noexcept { return quotient_; }
  const GroupPtr& source() const noexcept { return source_; }
  const Subgroup& kernel() const noexcept { return kernel_; }

  /// Element of G/N that g maps to.
  element_index project(element_index g) const { return projection_.at(g); }
  const std::vector<element_index>& projection() const noexcept {
    return projection_;
  }

  /// HN/N.
  Subgroup image(const Subgroup& h) const;

  /// Full preimage of a subgroup of G/N; always contains N.
  Subgroup preimage(const Subgroup& y) const;

 private:
  friend Quotient quotient(const Subgroup& normal);

  GroupPtr source_;
  GroupPtr quotient_;
  Subgroup kernel_;
  std::vector<element_index> projection_;
};

/// Throws InvalidArgument unless `normal` is normal in its parent.
Quotient quotient(const Subgroup& normal);

/// A subgroup as a group of its own, with the embedding into the parent.
struct SubgroupGroup {
  GroupPtr group;
  std::vector<element_index> to_parent;
};

SubgroupGroup as_group(const Subgroup& h);

/// The section top/bottom, where bottom is normal in top.
GroupPtr section(const Subgroup& top, const Subgroup& bottom);

}  // namespace sigmaperm
