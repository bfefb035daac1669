#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sigmaperm/lattice.hpp"
#include "sigmaperm/primes.hpp"

namespace sigmaperm {

// Everything indexed by a set of primes pi. Results are lattice indices.
// The overloads taking `top` work inside the subgroup lattice.at(top) instead
// of the whole group; subgroups of a subgroup are exactly the lattice members
// it contains, so no separate lattice is needed.

/// pi(G).
PrimeSet group_primes(const FiniteGroup& group);

bool is_pi_group(const Subgroup& h, const PrimeSet& pi);

std::vector<std::size_t> pi_subgroups(const SubgroupLattice& lattice,
                                      const PrimeSet& pi, std::size_t top);

/// pi-subgroups maximal under inclusion among pi-subgroups. Never empty.
std::vector<std::size_t> pi_maximal_subgroups(const SubgroupLattice& lattice,
                                              const PrimeSet& pi);
std::vector<std::size_t> pi_maximal_subgroups(const SubgroupLattice& lattice,
                                              const PrimeSet& pi,
                                              std::size_t top);

/// Subgroups of order |G|_p; {1} when p does not divide |G|.
std::vector<std::size_t> sylow_subgroups(const SubgroupLattice& lattice,
                                         std::uint64_t p);
std::vector<std::size_t> sylow_subgroups(const SubgroupLattice& lattice,
                                         std::uint64_t p, std::size_t top);

/// pi-subgroups whose index is a pi'-number. May be empty.
std::vector<std::size_t> hall_subgroups(const SubgroupLattice& lattice,
                                        const PrimeSet& pi);
std::vector<std::size_t> hall_subgroups(const SubgroupLattice& lattice,
                                        const PrimeSet& pi, std::size_t top);

/// O_pi: the largest normal pi-subgroup.
std::size_t o_pi(const SubgroupLattice& lattice, const PrimeSet& pi);
std::size_t o_pi(const SubgroupLattice& lattice, const PrimeSet& pi,
                 std::size_t top);

/// O^pi: the smallest normal subgroup with a pi-group as factor group.
std::size_t o_upper_pi(const SubgroupLattice& lattice, const PrimeSet& pi);
std::size_t o_upper_pi(const SubgroupLattice& lattice, const PrimeSet& pi,
                       std::size_t top);

/**
 * Projectors for the class of pi-groups: subgroups H such that HN/N is
 * pi-maximal in G/N for every normal subgroup N of G.
 *
 * Subgroups of G/N are identified with subgroups of G containing N, so HN/N
 * is pi-maximal in G/N exactly when HN is maximal among the overgroups Y of
 * N with |Y:N| a pi-number. Projectors always exist; an empty result throws
 * InvariantViolation.
 */
std::vector<std::size_t> gpi_projectors(const SubgroupLattice& lattice,
                                        const PrimeSet& pi);

/// Hall pi-subgroups exist, are conjugate, and every pi-subgroup lies in one.
bool has_D_pi_property(const SubgroupLattice& lattice, const PrimeSet& pi);
bool has_D_pi_property(const SubgroupLattice& lattice, const PrimeSet& pi,
                       std::size_t top);

}  // namespace sigmaperm
