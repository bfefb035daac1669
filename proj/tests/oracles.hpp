#pragma once

// Slow reference implementations used only by the tests. They work from
// definitions (brute force over elements, conjugates and chains) and share no
// algorithmic code with the library beyond the element tables.

#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "sigmaperm/finite_group.hpp"
#include "sigmaperm/lattice.hpp"
#include "sigmaperm/primes.hpp"

namespace oracle {

using sigmaperm::FiniteGroup;
using sigmaperm::PrimeSet;
using sigmaperm::SubgroupLattice;

using Members = std::set<std::uint32_t>;

/// Breadth-first closure directly on permutations.
std::set<sigmaperm::Permutation> closure(const std::vector<sigmaperm::Permutation>& gens);

/// Closure inside a group's multiplication table.
Members closure(const FiniteGroup& g, const std::vector<std::uint32_t>& gens);

/// Every subset containing 1 and closed under products. Exponential; only
/// for |G| <= 10.
std::set<Members> subgroups_by_subsets(const FiniteGroup& g);

/// Subgroups generated by at most two elements.
std::set<Members> two_generated_subgroups(const FiniteGroup& g);

/// Closures of random element subsets.
std::set<Members> random_closures(const FiniteGroup& g, std::mt19937& rng,
                                  std::size_t samples);

Members members_of(const SubgroupLattice& lattice, std::size_t i);

Members product(const FiniteGroup& g, const Members& h, const Members& k);
bool permutes(const FiniteGroup& g, const Members& h, const Members& k);
Members conjugate(const FiniteGroup& g, const Members& h, std::uint32_t x);
bool is_normal(const FiniteGroup& g, const Members& h);
Members core(const FiniteGroup& g, const Members& h, const Members& in);

std::uint64_t naive_pi_part(std::uint64_t n, const PrimeSet& pi);
bool naive_is_pi_number(std::uint64_t n, const PrimeSet& pi);

std::vector<std::size_t> pi_maximal(const SubgroupLattice& lattice, const PrimeSet& pi);
std::vector<std::size_t> halls(const SubgroupLattice& lattice, const PrimeSet& pi);
std::vector<std::size_t> sylows(const SubgroupLattice& lattice, std::uint64_t p);

/// Projectors straight from the definition: HN/N pi-maximal in G/N for every
/// normal N, with G/N built as a quotient group and its lattice enumerated.
std::vector<std::size_t> projectors_by_quotients(const SubgroupLattice& lattice,
                                                 const PrimeSet& pi);

/// Largest normal pi-subgroup, by scanning the lattice.
std::size_t o_pi(const SubgroupLattice& lattice, const PrimeSet& pi);

bool s_permutable(const SubgroupLattice& lattice, std::size_t h);

enum class Verdict { False, True, Undefined };

/// Levels 1, 2, 3 and 4 (= the Hall variant of level 3) from the definitions.
std::vector<Verdict> level_table(const SubgroupLattice& lattice,
                                 const std::vector<PrimeSet>& blocks, int level);

/// G is the product of the O_{pi_i}(G).
bool sigma_nilpotent(const SubgroupLattice& lattice, const std::vector<PrimeSet>& blocks);

/// Explicit search for a chain H = H_0 <= ... <= H_n = G.
std::vector<bool> sigma_subnormal_table(const SubgroupLattice& lattice,
                                        const std::vector<PrimeSet>& blocks);

/// Derived series reaches 1.
bool soluble(const FiniteGroup& g);

}  // namespace oracle
