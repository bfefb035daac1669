#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sigmaperm/catalog.hpp"
#include "sigmaperm/lattice.hpp"
#include "sigmaperm/quotient.hpp"
#include "sigmaperm/sigma.hpp"

namespace sigmaperm {

/// Checkable statements. Everything except CONJ1 is a proved theorem, so a
/// failure there means an engine bug; a CONJ1 failure is a counterexample.
enum class ClaimId {
  T1, T2, T3a, T3b, T4, T5,
  L1, L2, L4, L5,
  C1, C2, C3, C4, C5, C6, C7,
  CONJ1,
};

std::string to_string(ClaimId claim);
ClaimId parse_claim(std::string_view text);

/// Comma-separated claim ids, or "all". Throws ParseError on unknown ids and
/// on an empty list.
std::vector<ClaimId> parse_claim_list(std::string_view text);

const std::vector<ClaimId>& all_claims();

bool is_theorem_claim(ClaimId claim);

enum class Status { Pass, Fail, Inapplicable };

std::string to_string(Status status);
Status parse_status(std::string_view text);

struct Witness {
  std::string subgroup;              // the subgroup under test
  std::string block;                 // sigma block involved, "" if none
  std::string offending;             // what broke the claim
  std::vector<std::string> members;  // full element list, CONJ1 findings only

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct VerificationReport {
  std::string group_id;
  std::string sigma;
  ClaimId claim = ClaimId::T1;
  Status status = Status::Pass;
  std::vector<Witness> witnesses;
  double timing_ms = 0.0;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Most witnesses kept per theorem report; CONJ1 keeps all of them.
inline constexpr std::size_t kMaxWitnesses = 16;

/**
 * Everything computed once per (group, sigma) and shared by the claims:
 * permutability tables for all four levels, sigma-subnormality, and the
 * factor groups by normal subgroups needed for the transfer lemma.
 */
class SigmaContext {
 public:
  SigmaContext(std::string group_id, const SubgroupLattice& lattice,
               SigmaPartition sigma);

  const std::string& group_id() const noexcept { return group_id_; }
  const SubgroupLattice& lattice() const noexcept { return *lattice_; }
  const SigmaPartition& sigma() const noexcept { return analysis_.sigma(); }
  const SigmaAnalysis& analysis() const noexcept { return analysis_; }
  const SigmaSubnormality& subnormality() const noexcept { return subnormal_; }

  /// S-permutability of every subgroup, via Sylow subgroups.
  const std::vector<bool>& s_permutable_table() const;

  /// sigma-nilpotency of every subgroup.
  const std::vector<bool>& sigma_nilpotent_table() const;

  /// H^G/H_G is sigma-nilpotent (resp. nilpotent when `nilpotent` is set).
  bool section_is_sigma_nilpotent(std::size_t h, bool nilpotent) const;

  struct FactorData {
    Quotient quotient;
    std::unique_ptr<SubgroupLattice> lattice;
    std::unique_ptr<SigmaAnalysis> analysis;
  };

  /// G/N with its lattice and the restricted partition; built on demand.
  const FactorData& factor(std::size_t normal_index) const;

 private:
  std::string group_id_;
  const SubgroupLattice* lattice_;
  SigmaAnalysis analysis_;
  SigmaSubnormality subnormal_;

  mutable std::mutex mutex_;
  mutable std::optional<std::vector<bool>> s_permutable_;
  mutable std::optional<std::vector<bool>> sigma_nilpotent_;
  mutable std::map<std::pair<std::size_t, std::size_t>, bool> sections_;
  mutable std::map<std::size_t, std::unique_ptr<FactorData>> factors_;
};

/// Checks one claim. Deterministic apart from timing_ms.
VerificationReport verify_claim(const SigmaContext& context, ClaimId claim);

/// Convenience overload that builds the context.
VerificationReport verify_claim(std::string group_id,
                                const SubgroupLattice& lattice,
                                const SigmaPartition& sigma, ClaimId claim);

struct SuiteOptions {
  std::vector<ClaimId> claims;
  /// Partitions to use; when unset every partition of pi(G) is swept. The
  /// spec is canonicalized per group.
  std::optional<SigmaSpec> sigma;
  std::size_t jobs = 1;
  bool record_timing = true;
};

struct SuiteSummary {
  std::size_t groups = 0;
  std::size_t reports = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;        // theorem claims only
  std::size_t inapplicable = 0;
  std::size_t findings = 0;      // CONJ1 counterexamples
  double elapsed_ms = 0.0;
  int exit_code = 0;
};

struct SuiteResult {
  std::vector<VerificationReport> reports;
  SuiteSummary summary;
};

/// Exit codes shared by the harness and the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitTheoremFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitFinding = 3;

/// Sweeps catalog entries of order <= max_order against every partition of
/// pi(G) and every requested claim. Throws InvalidArgument for an empty
/// claim list.
SuiteResult run_suite(const std::vector<CatalogEntry>& catalog,
                      std::size_t max_order, const SuiteOptions& options);

/// The CONJ1 slice of run_suite: one report per (group, partition).
std::vector<VerificationReport> check_conjecture1(
    const std::vector<CatalogEntry>& catalog, std::size_t max_order);

}  // namespace sigmaperm
