#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "sigmaperm/permutation.hpp"

namespace sigmaperm {

using element_index = std::uint32_t;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/**
 * A permutation group with its full element table.
 *
 * Elements are sorted lexicographically by image array, which puts the
 * identity at index 0. Multiplication and inversion are precomputed tables
 * over element indices. Instances are immutable once built and are shared
 * through GroupPtr.
 */
class FiniteGroup {
 public:
  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t degree() const noexcept { return degree_; }

  static constexpr element_index identity() noexcept { return 0; }

  const Permutation& element(element_index i) const { return elements_[i]; }
  std::span<const Permutation> elements() const noexcept { return elements_; }

  /// Left-to-right product: "a, then b".
  element_index mul(element_index a, element_index b) const noexcept {
    return mul_[static_cast<std::size_t>(a) * elements_.size() + b];
  }
  element_index inv(element_index a) const noexcept { return inv_[a]; }

  /// x^-1 * h * x.
  element_index conjugate(element_index h, element_index x) const noexcept {
    return mul(mul(inv(x), h), x);
  }

  /// Indices of the generators the group was built from (identity dropped).
  std::span<const element_index> generators() const noexcept {
    return generators_;
  }

  /// Order of each element, precomputed.
  std::size_t element_order(element_index g) const { return orders_.at(g); }

  std::optional<element_index> index_of(const Permutation& p) const;

  /// FNV-1a over the sorted element table; identifies the group's table.
  std::uint64_t content_hash() const noexcept { return hash_; }

 private:
  friend GroupPtr generate_closure(std::span<const Permutation> gens,
                                   std::size_t cap);

  FiniteGroup() = default;

  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<element_index> mul_;
  std::vector<element_index> inv_;
  std::vector<element_index> generators_;
  std::vector<std::size_t> orders_;
  std::uint64_t hash_ = 0;
};

/**
 * The smallest group containing `gens`.
 *
 * Throws MismatchError on mixed degrees, InvalidArgument on an empty list and
 * LimitExceeded (carrying the number of elements found so far) once the
 * closure grows beyond `cap`.
 */
GroupPtr generate_closure(std::span<const Permutation> gens, std::size_t cap);
GroupPtr generate_closure(std::span<const Permutation> gens);

/// Least k >= 1 with g^k = 1.
std::size_t element_order(const FiniteGroup& group, element_index g);

}  // namespace sigmaperm
