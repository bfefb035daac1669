#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sigmaperm/finite_group.hpp"
#include "sigmaperm/lattice.hpp"

namespace sigmaperm {

/**
 * One direct factor of a group spec.
 *
 *   C<n>      cyclic of order n (disjoint cycles of prime-power length)
 *   D<n>      dihedral of order 2n (D4 has order 8)
 *   S<n>      symmetric group on n points
 *   A<n>      alternating group on n points
 *   Q8        quaternion group, regular representation on 8 points
 *   SL(2,3)   acting on the 8 nonzero vectors of GF(3)^2
 *   perm[n]:g1;g2;...   explicit generators in cycle notation on n points
 */
struct GroupFactor {
  enum class Kind { Cyclic, Dihedral, Symmetric, Alternating, Quaternion, SL23, Explicit };

  Kind kind = Kind::Cyclic;
  std::size_t parameter = 1;
  std::size_t degree = 0;               // Explicit only
  std::vector<Permutation> generators;  // Explicit only

  friend bool operator==(const GroupFactor&, const GroupFactor&) = default;
};

/// Factors joined by 'x' build a direct product on disjoint point sets.
struct GroupSpec {
  std::vector<GroupFactor> factors;

  /// Canonical text; parse_group_spec(s.to_string()) == s.
  std::string to_string() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Throws ParseError on unknown names or malformed generators.
GroupSpec parse_group_spec(std::string_view text);

/// Builds the group, checking its order against the known formula. Throws
/// LimitExceeded when the order or degree cap would be exceeded.
GroupPtr build_group(const GroupSpec& spec);
GroupPtr build_group(std::string_view text);

/// Order the spec will produce for named factors (0 if unknown, i.e. when an
/// explicit factor is present). Saturates at SIZE_MAX.
std::size_t expected_order(const GroupSpec& spec);

/// Elementary divisors (prime powers, ascending) of G/G'.
std::vector<std::uint64_t> abelian_invariants(const FiniteGroup& group);

/// Cheap isomorphism-invariant used to deduplicate the scan catalog.
struct Fingerprint {
  std::size_t order = 0;
  std::vector<std::uint64_t> abelian;
  std::size_t subgroup_count = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

struct CatalogEntry {
  std::string label;
  GroupPtr group;
  std::shared_ptr<const SubgroupLattice> lattice;
  Fingerprint fingerprint;
};

/// Every named constructor and every direct product of them with order at
/// most `max_order`, one representative per fingerprint, sorted by
/// (order, label).
std::vector<CatalogEntry> build_catalog(std::size_t max_order);

/// A catalog entry for a single spec string.
CatalogEntry make_entry(std::string_view spec);

}  // namespace sigmaperm
