#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sigmaperm/lattice.hpp"
#include "sigmaperm/primes.hpp"

namespace sigmaperm {

/**
 * A sigma-spec as written on the command line, before it is matched against a
 * group: blocks separated by '|', primes by ','. "s1" means all singletons.
 * A trailing "|*" collects every prime of the group not otherwise mentioned
 * into one extra block.
 */
struct SigmaSpec {
  bool singletons = false;
  std::vector<PrimeSet> blocks;
  bool rest = false;
};

/// Throws ParseError on empty blocks, non-prime tokens or overlapping blocks.
SigmaSpec parse_sigma_spec(std::string_view text);

/**
 * A partition sigma of the primes, reduced to the prime divisors of one group.
 *
 * Blocks not meeting pi(G) only ever contribute the trivial subgroup, so they
 * are dropped. Blocks are sorted by least prime.
 */
class SigmaPartition {
 public:
  SigmaPartition() = default;

  /// Intersects each block with `context`, drops empty ones and sorts.
  /// Throws InvalidArgument on overlapping blocks or if the blocks do not
  /// cover `context`.
  static SigmaPartition canonicalize(const std::vector<PrimeSet>& blocks,
                                     const PrimeSet& context);

  /// All singletons over `context`.
  static SigmaPartition singletons(const PrimeSet& context);

  const std::vector<PrimeSet>& blocks() const noexcept { return blocks_; }
  const PrimeSet& context() const noexcept { return context_; }

  bool is_singletons() const noexcept;

  /// The same partition reduced to a subset of the context (for sections and
  /// factor groups).
  SigmaPartition restrict_to(const PrimeSet& primes) const;

  /// "2,5|3"; "-" when there are no blocks (trivial group).
  std::string to_string() const;

  friend bool operator==(const SigmaPartition&, const SigmaPartition&) = default;

 private:
  std::vector<PrimeSet> blocks_;
  PrimeSet context_;
};

SigmaPartition canonicalize_sigma(const std::vector<PrimeSet>& blocks,
                                  const FiniteGroup& group);
SigmaPartition canonicalize_sigma(const SigmaSpec& spec, const FiniteGroup& group);

/// Every set partition of `primes` (Bell(|primes|) of them), ordered by
/// restricted growth string. Throws InvalidArgument for more than 6 primes.
std::vector<SigmaPartition> enumerate_sigma_partitions(const PrimeSet& primes);
std::vector<SigmaPartition> enumerate_sigma_partitions(const FiniteGroup& group);

enum class Level { One, Two, Three, Skiba };

std::string to_string(Level level);
/// "1", "2", "3" or "skiba".
Level parse_level(std::string_view text);

enum class Verdict { False, True, Undefined };

std::string to_string(Verdict verdict);

/// The block and lattice subgroup responsible for a negative verdict. For
/// Skiba's undefined outcome `subgroup` is empty: the block has no Hall
/// subgroup.
struct PermutabilityWitness {
  PrimeSet block;
  std::optional<std::size_t> subgroup;
};

struct PermutabilityResult {
  Verdict verdict = Verdict::False;
  std::optional<PermutabilityWitness> witness;

  bool is_true() const noexcept { return verdict == Verdict::True; }
};

/**
 * The per-block subgroup families of one (G, sigma) pair and the permutability
 * predicates built on them.
 *
 *  Level::One   H permutes with every pi_i-maximal subgroup, for every block.
 *  Level::Two   H permutes with every G_{pi_i}-projector, for every block.
 *  Level::Three for every block some projector P has H P^x = P^x H for all x.
 *  Level::Skiba as Three, with Hall pi_i-subgroups; Undefined when a block has
 *               no Hall subgroup.
 *
 * Whole-lattice verdict tables are computed on first use and cached; the
 * object can be shared between threads.
 */
class SigmaAnalysis {
 public:
  struct Block {
    PrimeSet primes;
    std::vector<std::size_t> pi_maximal;
    std::vector<std::size_t> projectors;
    std::vector<std::size_t> halls;
  };

  /// Throws InvalidArgument unless sigma is canonical for the lattice's group.
  SigmaAnalysis(const SubgroupLattice& lattice, SigmaPartition sigma);

  const SubgroupLattice& lattice() const noexcept { return *lattice_; }
  const SigmaPartition& sigma() const noexcept { return sigma_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }

  /// True iff every block has a Hall subgroup (G is an E_{pi_i}-group).
  bool has_all_halls() const noexcept;

  PermutabilityResult evaluate(std::size_t h, Level level) const;

  /// Verdict for every lattice subgroup, indexed like the lattice.
  const std::vector<Verdict>& verdicts(Level level) const;

  /// Lattice indices with a True verdict.
  std::vector<std::size_t> permutable_set(Level level) const;

 private:
  bool permutes_with(std::size_t h, std::size_t k) const;
  PermutabilityResult evaluate_all(std::size_t h,
                                   const std::vector<std::size_t> Block::*family,
                                   const PrimeSet* only) const;
  PermutabilityResult evaluate_exists_class(
      std::size_t h, const std::vector<std::size_t> Block::*family,
      bool undefined_if_empty) const;

  const SubgroupLattice* lattice_;
  SigmaPartition sigma_;
  std::vector<Block> blocks_;

  mutable std::array<std::once_flag, 4> once_;
  mutable std::array<std::vector<Verdict>, 4> tables_;
};

/// One-off predicate; builds a SigmaAnalysis internally.
PermutabilityResult sigma_permutable(const SubgroupLattice& lattice,
                                     const Subgroup& h,
                                     const SigmaPartition& sigma, Level level);

/// H permutes with every Sylow subgroup of G (S-permutability), checked
/// directly against the Sylow subgroups rather than through a partition.
bool s_permutable(const SubgroupLattice& lattice, std::size_t h);

/**
 * sigma-subnormality by reachability in the subgroup lattice. A step A <= B
 * is allowed when A is normal in B or |B : A_B| is a pi_i-number for some
 * block, where A_B is the core of A in B. Every subgroup is subnormal in
 * itself through the empty chain.
 */
class SigmaSubnormality {
 public:
  SigmaSubnormality(const SubgroupLattice& lattice, SigmaPartition sigma);

  /// A single chain step A <= B.
  bool step(std::size_t a, std::size_t b) const;

  /// H sigma-subnormal in G.
  bool subnormal(std::size_t h) const;

  /// H sigma-subnormal in the subgroup lattice.at(top); requires H <= top.
  bool subnormal_in(std::size_t h, std::size_t top) const;

 private:
  const SubgroupLattice* lattice_;
  SigmaPartition sigma_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::size_t, bool> steps_;
  mutable std::vector<signed char> in_whole_;
};

bool sigma_subnormal(const SubgroupLattice& lattice, const Subgroup& h,
                     const SigmaPartition& sigma);

/**
 * G is the direct product of its Hall pi_i-subgroups. Checked per block: the
 * pi_i-elements must form a subgroup of order |G|_{pi_i}, which is then the
 * normal Hall pi_i-subgroup. Blocks may reach beyond pi(G).
 */
bool sigma_nilpotent(const FiniteGroup& group, const SigmaPartition& sigma);

/// Same test applied to a subgroup, without building it as a group.
bool sigma_nilpotent(const Subgroup& h, const SigmaPartition& sigma);

/// The pi-elements of a subgroup (elements whose order is a pi-number).
ElementSet pi_elements(const Subgroup& h, const PrimeSet& pi);

}  // namespace sigmaperm
