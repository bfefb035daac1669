#include "sigmaperm/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "sigmaperm/errors.hpp"
#include "sigmaperm/pi.hpp"

namespace sigmaperm {

namespace {

struct ClaimName {
  ClaimId id;
  const char* name;
};

constexpr ClaimName kClaimNames[] = {
    {ClaimId::T1, "T1"},   {ClaimId::T2, "T2"},   {ClaimId::T3a, "T3a"},
    {ClaimId::T3b, "T3b"}, {ClaimId::T4, "T4"},   {ClaimId::T5, "T5"},
    {ClaimId::L1, "L1"},   {ClaimId::L2, "L2"},   {ClaimId::L4, "L4"},
    {ClaimId::L5, "L5"},   {ClaimId::C1, "C1"},   {ClaimId::C2, "C2"},
    {ClaimId::C3, "C3"},   {ClaimId::C4, "C4"},   {ClaimId::C5, "C5"},
    {ClaimId::C6, "C6"},   {ClaimId::C7, "C7"},   {ClaimId::CONJ1, "CONJ1"},
};

}  // namespace

std::string to_string(ClaimId claim) {
  for (const auto& c : kClaimNames) {
    if (c.id == claim) {
      return c.name;
    }
  }
  return "?";
}

ClaimId parse_claim(std::string_view text) {
  for (const auto& c : kClaimNames) {
    if (text == c.name) {
      return c.id;
    }
  }
  throw ParseError("unknown claim id \"" + std::string(text) + "\"");
}

const std::vector<ClaimId>& all_claims() {
  static const std::vector<ClaimId> claims = [] {
    std::vector<ClaimId> out;
    for (const auto& c : kClaimNames) {
      out.push_back(c.id);
    }
    return out;
  }();
  return claims;
}

std::vector<ClaimId> parse_claim_list(std::string_view text) {
  if (text == "all") {
    return all_claims();
  }
  std::vector<ClaimId> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    auto token = text.substr(start, comma == std::string_view::npos
                                        ? std::string_view::npos
                                        : comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty()) {
      const ClaimId id = parse_claim(token);
      if (std::find(out.begin(), out.end(), id) == out.end()) {
        out.push_back(id);
      }
    }
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  if (out.empty()) {
    throw ParseError("empty claim list");
  }
  return out;
}

bool is_theorem_claim(ClaimId claim) { return claim != ClaimId::CONJ1; }

std::string to_string(Status status) {
  switch (status) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Inapplicable:
      return "inapplicable";
  }
  return "?";
}

Status parse_status(std::string_view text) {
  if (text == "pass") return Status::Pass;
  if (text == "fail") return Status::Fail;
  if (text == "inapplicable") return Status::Inapplicable;
  throw ParseError("unknown status \"" + std::string(text) + "\"");
}

SigmaContext::SigmaContext(std::string group_id, const SubgroupLattice& lattice,
                           SigmaPartition sigma)
    : group_id_(std::move(group_id)),
      lattice_(&lattice),
      analysis_(lattice, sigma),
      subnormal_(lattice, std::move(sigma)) {}

const std::vector<bool>& SigmaContext::s_permutable_table() const {
  std::lock_guard lock(mutex_);
  if (!s_permutable_) {
    std::vector<bool> table(lattice_->size());
    for (std::size_t h = 0; h < lattice_->size(); ++h) {
      table[h] = s_permutable(*lattice_, h);
    }
    s_permutable_ = std::move(table);
  }
  return *s_permutable_;
}

const std::vector<bool>& SigmaContext::sigma_nilpotent_table() const {
  std::lock_guard lock(mutex_);
  if (!sigma_nilpotent_) {
    std::vector<bool> table(lattice_->size());
    for (std::size_t h = 0; h < lattice_->size(); ++h) {
      table[h] = sigma_nilpotent(lattice_->at(h), analysis_.sigma());
    }
    sigma_nilpotent_ = std::move(table);
  }
  return *sigma_nilpotent_;
}

bool SigmaContext::section_is_sigma_nilpotent(std::size_t h, bool nilpotent) const {
  const Subgroup& sub = lattice_->at(h);
  const std::size_t top = lattice_->index_of(normal_closure(sub));
  const std::size_t bottom = lattice_->index_of(core(sub));
  const auto key = std::make_pair(top * 2 + (nilpotent ? 1 : 0), bottom);
  {
    std::lock_guard lock(mutex_);
    if (auto it = sections_.find(key); it != sections_.end()) {
      return it->second;
    }
  }
  const GroupPtr quotient_group = section(lattice_->at(top), lattice_->at(bottom));
  const SigmaPartition sigma =
      nilpotent ? SigmaPartition::singletons(analysis_.sigma().context())
                : analysis_.sigma();
  const bool result = sigma_nilpotent(*quotient_group, sigma);
  std::lock_guard lock(mutex_);
  sections_.emplace(key, result);
  return result;
}

const SigmaContext::FactorData& SigmaContext::factor(std::size_t normal_index) const {
  std::lock_guard lock(mutex_);
  auto& slot = factors_[normal_index];
  if (!slot) {
    auto data = std::make_unique<FactorData>();
    data->quotient = quotient(lattice_->at(normal_index));
    data->lattice =
        std::make_unique<SubgroupLattice>(all_subgroups(data->quotient.group()));
    data->analysis = std::make_unique<SigmaAnalysis>(
        *data->lattice,
        analysis_.sigma().restrict_to(group_primes(*data->quotient.group())));
    slot = std::move(data);
  }
  return *slot;
}

namespace {

class ReportBuilder {
 public:
  ReportBuilder(const SigmaContext& ctx, ClaimId claim)
      : ctx_(ctx), keep_all_(claim == ClaimId::CONJ1) {
    report_.group_id = ctx.group_id();
    report_.sigma = ctx.sigma().to_string();
    report_.claim = claim;
  }

  void fail(std::size_t h, std::string block, std::string offending) {
    failed_ = true;
    if (!keep_all_ && report_.witnesses.size() >= kMaxWitnesses) {
      return;
    }
    report_.witnesses.push_back(Witness{describe(h), std::move(block),
                                        std::move(offending), {}});
  }

  void fail_with_members(std::size_t h, std::string block, std::string offending) {
    fail(h, std::move(block), std::move(offending));
    auto& w = report_.witnesses.back();
    const auto& g = ctx_.lattice().group();
    ctx_.lattice().at(h).members().for_each(
        [&](element_index x) { w.members.push_back(g.element(x).to_cycles()); });
  }

  void inapplicable() { inapplicable_ = true; }

  std::string describe(std::size_t h) const {
    const Subgroup& s = ctx_.lattice().at(h);
    return s.describe() + " order " + std::to_string(s.order());
  }

  VerificationReport finish() {
    report_.status = failed_         ? Status::Fail
                     : inapplicable_ ? Status::Inapplicable
                                     : Status::Pass;
    if (report_.status != Status::Fail) {
      report_.witnesses.clear();
    }
    return std::move(report_);
  }

 private:
  const SigmaContext& ctx_;
  bool keep_all_;
  bool failed_ = false;
  bool inapplicable_ = false;
  VerificationReport report_;
};

std::string verdict_text(Verdict v) { return to_string(v); }

std::vector<bool> as_flags(const std::vector<Verdict>& verdicts) {
  std::vector<bool> out(verdicts.size());
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    out[i] = verdicts[i] == Verdict::True;
  }
  return out;
}

// Closure of a family of subgroups under intersection and join.
void check_sublattice(const SigmaContext& ctx, const std::vector<bool>& in_set,
                      ReportBuilder& out) {
  const auto& lattice = ctx.lattice();
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < in_set.size(); ++i) {
    if (in_set[i]) {
      members.push_back(i);
    }
  }
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      const Subgroup& x = lattice.at(members[a]);
      const Subgroup& y = lattice.at(members[b]);
      const auto meet = lattice.index_of(x.members() & y.members());
      if (!in_set[meet]) {
        out.fail(members[a], "",
                 "intersection with " + out.describe(members[b]) + " is " +
                     out.describe(meet) + ", outside the set");
      }
      if (x.is_subgroup_of(y) || y.is_subgroup_of(x)) {
        continue;
      }
      const auto joined = lattice.index_of(join(x, y));
      if (!in_set[joined]) {
        out.fail(members[a], "",
                 "join with " + out.describe(members[b]) + " is " +
                     out.describe(joined) + ", outside the set");
      }
    }
  }
}

void check_t1(const SigmaContext& ctx, ReportBuilder& out) {
  const auto& two = ctx.analysis().verdicts(Level::Two);
  const auto& three = ctx.analysis().verdicts(Level::Three);
  for (std::size_t h = 0; h < two.size(); ++h) {
    if (two[h] != three[h]) {
      out.fail(h, "",
               "level 2 is " + verdict_text(two[h]) + " but level 3 is " +
                   verdict_text(three[h]));
    }
  }
}

void check_section(const SigmaContext& ctx, const std::vector<bool>& hypothesis,
                   bool nilpotent, ReportBuilder& out) {
  const auto& lattice = ctx.lattice();
  for (std::size_t h = 0; h < hypothesis.size(); ++h) {
    if (hypothesis[h] && !ctx.section_is_sigma_nilpotent(h, nilpotent)) {
      const auto& sub = lattice.at(h);
      out.fail(h, "",
               std::string("H^G/H_G of order ") +
                   std::to_string(normal_closure(sub).order() / core(sub).order()) +
                   (nilpotent ? " is not nilpotent" : " is not sigma-nilpotent"));
    }
  }
}

void check_t3a(const SigmaContext& ctx, ReportBuilder& out) {
  const auto& nil = ctx.sigma_nilpotent_table();
  const auto& one = ctx.analysis().verdicts(Level::One);
  const auto& two = ctx.analysis().verdicts(Level::Two);
  const auto& three = ctx.analysis().verdicts(Level::Three);
  for (std::size_t h = 0; h < nil.size(); ++h) {
    if (nil[h] && !(one[h] == two[h] && two[h] == three[h])) {
      out.fail(h, "",
               "levels disagree: 1=" + verdict_text(one[h]) + " 2=" +
                   verdict_text(two[h]) + " 3=" + verdict_text(three[h]));
    }
  }
}

void check_hall_parts(const SigmaContext& ctx, const std::vector<bool>& hypothesis,
                      const std::vector<bool>& predicate,
                      const std::vector<PrimeSet>& blocks, ReportBuilder& out) {
  const auto& lattice = ctx.lattice();
  for (std::size_t h = 0; h < hypothesis.size(); ++h) {
    if (!hypothesis[h]) {
      continue;
    }
    bool all_parts = true;
    std::string bad_block;
    std::size_t bad_part = 0;
    for (const auto& block : blocks) {
      // In a sigma-nilpotent group the Hall pi_i-subgroup is the set of
      // pi_i-elements.
      const auto part = lattice.index_of(pi_elements(lattice.at(h), block));
      if (!predicate[part]) {
        all_parts = false;
        bad_block = block.to_string();
        bad_part = part;
        break;
      }
    }
    if (all_parts != predicate[h]) {
      out.fail(h, bad_block,
               predicate[h] ? "Hall part " + out.describe(bad_part) +
                                  " fails although H passes"
                            : std::string("all Hall parts pass but H fails"));
    }
  }
}

void check_t5(const SigmaContext& ctx, const std::vector<bool>& in_set,
              ReportBuilder& out) {
  const auto& lattice = ctx.lattice();
  for (std::size_t h = 0; h < in_set.size(); ++h) {
    if (in_set[h]) {
      const auto n = lattice.index_of(normalizer(lattice.at(h)));
      if (!in_set[n]) {
        out.fail(h, "", "normalizer " + out.describe(n) + " is outside the set");
      }
    }
  }
}

void check_l1(const SigmaContext& ctx, ReportBuilder& out) {
  const auto& lattice = ctx.lattice();
  for (auto n : lattice.normal_indices()) {
    const auto& factor = ctx.factor(n);
    const auto& q_lattice = *factor.lattice;
    for (Level level : {Level::Two, Level::Three}) {
      const auto& in_g = ctx.analysis().verdicts(level);
      const auto& in_q = factor.analysis->verdicts(level);
      const std::string tag = "N = " + out.describe(n) + ", level " + to_string(level);
      for (std::size_t h = 0; h < in_g.size(); ++h) {
        if (in_g[h] != Verdict::True) {
          continue;
        }
        const auto image = q_lattice.index_of(factor.quotient.image(lattice.at(h)));
        if (in_q[image] != Verdict::True) {
          out.fail(h, "", tag + ": image HN/N is not permutable in G/N");
        }
      }
      for (std::size_t y = 0; y < in_q.size(); ++y) {
        if (in_q[y] != Verdict::True) {
          continue;
        }
        const auto pre = lattice.index_of(factor.quotient.preimage(q_lattice.at(y)));
        if (in_g[pre] != Verdict::True) {
          out.fail(pre, "", tag + ": H/N permutable in G/N but H is not in G");
        }
      }
    }
  }
}

void check_l2(const SigmaContext& ctx, ReportBuilder& out) {
  const auto& lattice = ctx.lattice();
  const auto& sub = ctx.subnormality();
  const std::size_t n = lattice.size();
  for (std::size_t h = 0; h < n; ++h) {
    if (!sub.subnormal(h)) {
      continue;
    }
    const Subgroup& hs = lattice.at(h);
    for (std::size_t k = 0; k < n; ++k) {
      const Subgroup& ks = lattice.at(k);
      const auto meet = lattice.index_of(hs.members() & ks.members());
      if (is_normalized_by(lattice.at(meet), ks)) {
        continue;  // one-step chain
      }
      if (!sub.subnormal_in(meet, k)) {
        out.fail(h, "",
                 "H meet K is not sigma-subnormal in K = " + out.describe(k));
      }
    }
    for (const auto& block : ctx.sigma().blocks()) {
      if (!is_pi_number(lattice.group().order() / hs.order(), block)) {
        continue;
      }
      const auto upper_h = o_upper_pi(lattice, block, h);
      const auto upper_g = o_upper_pi(lattice, block);
      if (upper_h != upper_g) {
        out.fail(h, block.to_string(),
                 "O^pi(H) = " + out.describe(upper_h) + " differs from O^pi(G) = " +
                     out.describe(upper_g));
      }
    }
  }
}

void check_l4(const SigmaContext& ctx, ReportBuilder& out) {
  const auto& lattice = ctx.lattice();
  for (const auto& block : ctx.sigma().blocks()) {
    const auto o = o_pi(lattice, block);
    for (auto h : pi_subgroups(lattice, block, lattice.whole_index())) {
      if (ctx.subnormality().subnormal(h) && !lattice.contains(o, h)) {
        out.fail(h, block.to_string(),
                 "not contained in O_pi(G) = " + out.describe(o));
      }
    }
  }
}

void check_l5(const SigmaContext& ctx, const std::vector<bool>& in_set,
              ReportBuilder& out) {
  const auto& lattice = ctx.lattice();
  for (const auto& block : ctx.sigma().blocks()) {
    const Subgroup& upper = lattice.at(o_upper_pi(lattice, block));
    for (std::size_t h = 0; h < in_set.size(); ++h) {
      if (!in_set[h]) {
        continue;
      }
      const Subgroup& lower = lattice.at(o_pi(lattice, block, h));
      if (!is_normalized_by(lower, upper)) {
        out.fail(h, block.to_string(),
                 "O^pi(G) does not normalize O_pi(H) = " + lower.describe());
      }
    }
  }
}

void check_c3(const SigmaContext& ctx, const std::vector<bool>& in_set,
              ReportBuilder& out) {
  for (std::size_t h = 0; h < in_set.size(); ++h) {
    if (in_set[h] && !ctx.subnormality().subnormal(h)) {
      out.fail(h, "", "permutable but not sigma-subnormal");
    }
  }
}

void check_conj1(const SigmaContext& ctx, ReportBuilder& out) {
  const auto& one = ctx.analysis().verdicts(Level::One);
  const auto& two = ctx.analysis().verdicts(Level::Two);
  for (std::size_t h = 0; h < one.size(); ++h) {
    if (two[h] == Verdict::True && one[h] != Verdict::True) {
      const auto why = ctx.analysis().evaluate(h, Level::One);
      std::string block;
      std::string offending = "no witness";
      if (why.witness) {
        block = why.witness->block.to_string();
        if (why.witness->subgroup) {
          offending = "does not permute with pi-maximal " +
                      out.describe(*why.witness->subgroup);
        }
      }
      out.fail_with_members(h, block, offending);
    }
  }
}

std::vector<bool> nilpotent_flags(const SigmaContext& ctx) {
  const auto& lattice = ctx.lattice();
  const auto singletons = SigmaPartition::singletons(ctx.sigma().context());
  std::vector<bool> out(lattice.size());
  for (std::size_t h = 0; h < lattice.size(); ++h) {
    out[h] = sigma_nilpotent(lattice.at(h), singletons);
  }
  return out;
}

bool every_subgroup_is_d_pi(const SigmaContext& ctx) {
  const auto& lattice = ctx.lattice();
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    for (const auto& block : ctx.sigma().blocks()) {
      if (!has_D_pi_property(lattice, block, k)) {
        return false;
      }
    }
  }
  return true;
}

std::vector<PrimeSet> singleton_blocks(const SigmaContext& ctx) {
  return SigmaPartition::singletons(ctx.sigma().context()).blocks();
}

}  // namespace

VerificationReport verify_claim(const SigmaContext& ctx, ClaimId claim) {
  const auto start = std::chrono::steady_clock::now();
  ReportBuilder out(ctx, claim);
  const auto& analysis = ctx.analysis();
  auto level3 = [&] { return as_flags(analysis.verdicts(Level::Three)); };

  switch (claim) {
    case ClaimId::T1:
      check_t1(ctx, out);
      break;
    case ClaimId::T2:
      check_section(ctx, level3(), false, out);
      break;
    case ClaimId::T3a:
      check_t3a(ctx, out);
      break;
    case ClaimId::T3b:
      check_hall_parts(ctx, ctx.sigma_nilpotent_table(), level3(),
                       ctx.sigma().blocks(), out);
      break;
    case ClaimId::T4:
      check_sublattice(ctx, level3(), out);
      break;
    case ClaimId::T5:
      check_t5(ctx, level3(), out);
      break;
    case ClaimId::L1:
      check_l1(ctx, out);
      break;
    case ClaimId::L2:
      check_l2(ctx, out);
      break;
    case ClaimId::L4:
      check_l4(ctx, out);
      break;
    case ClaimId::L5:
      check_l5(ctx, level3(), out);
      break;
    case ClaimId::C1:
      if (!ctx.sigma().is_singletons()) {
        out.inapplicable();
      } else {
        check_section(ctx, ctx.s_permutable_table(), true, out);
      }
      break;
    case ClaimId::C2:
      if (!analysis.has_all_halls()) {
        out.inapplicable();
      } else {
        check_section(ctx, as_flags(analysis.verdicts(Level::Skiba)), false, out);
      }
      break;
    case ClaimId::C3:
      check_c3(ctx, level3(), out);
      break;
    case ClaimId::C4:
      if (!ctx.sigma().is_singletons()) {
        out.inapplicable();
      } else {
        check_hall_parts(ctx, nilpotent_flags(ctx), ctx.s_permutable_table(),
                         singleton_blocks(ctx), out);
      }
      break;
    case ClaimId::C5:
      if (!ctx.sigma().is_singletons()) {
        out.inapplicable();
      } else {
        check_sublattice(ctx, ctx.s_permutable_table(), out);
      }
      break;
    case ClaimId::C6:
      if (!every_subgroup_is_d_pi(ctx)) {
        out.inapplicable();
      } else {
        check_sublattice(ctx, as_flags(analysis.verdicts(Level::Skiba)), out);
      }
      break;
    case ClaimId::C7:
      if (!ctx.sigma().is_singletons()) {
        out.inapplicable();
      } else {
        check_t5(ctx, ctx.s_permutable_table(), out);
      }
      break;
    case ClaimId::CONJ1:
      check_conj1(ctx, out);
      break;
  }

  VerificationReport report = out.finish();
  report.timing_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return report;
}

VerificationReport verify_claim(std::string group_id, const SubgroupLattice& lattice,
                                const SigmaPartition& sigma, ClaimId claim) {
  SigmaContext ctx(std::move(group_id), lattice, sigma);
  return verify_claim(ctx, claim);
}

namespace {

std::vector<VerificationReport> run_entry(const CatalogEntry& entry,
                                          const SuiteOptions& options) {
  std::vector<SigmaPartition> partitions;
  if (options.sigma) {
    partitions.push_back(canonicalize_sigma(*options.sigma, *entry.group));
  } else {
    partitions = enumerate_sigma_partitions(*entry.group);
  }
  std::vector<VerificationReport> out;
  for (const auto& sigma : partitions) {
    SigmaContext ctx(entry.label, *entry.lattice, sigma);
    for (auto claim : options.claims) {
      out.push_back(verify_claim(ctx, claim));
      if (!options.record_timing) {
        out.back().timing_ms = 0.0;
      }
    }
  }
  return out;
}

}  // namespace

SuiteResult run_suite(const std::vector<CatalogEntry>& catalog,
                      std::size_t max_order, const SuiteOptions& options) {
  if (options.claims.empty()) {
    throw InvalidArgument("empty claim filter");
  }
  const auto start = std::chrono::steady_clock::now();

  std::vector<const CatalogEntry*> selected;
  for (const auto& entry : catalog) {
    if (entry.group->order() <= max_order) {
      selected.push_back(&entry);
    }
  }

  // Work units are whole groups; results land in per-unit slots so the final
  // order does not depend on scheduling.
  std::vector<std::vector<VerificationReport>> slots(selected.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= selected.size()) {
        return;
      }
      try {
        slots[i] = run_entry(*selected[i], options);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) {
          error = std::current_exception();
        }
      }
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, selected.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < jobs; ++t) {
      threads.emplace_back(worker);
    }
    for (auto& t : threads) {
      t.join();
    }
  }
  if (error) {
    std::rethrow_exception(error);
  }

  SuiteResult result;
  result.summary.groups = selected.size();
  for (auto& slot : slots) {
    for (auto& report : slot) {
      ++result.summary.reports;
      switch (report.status) {
        case Status::Pass:
          ++result.summary.passed;
          break;
        case Status::Inapplicable:
          ++result.summary.inapplicable;
          break;
        case Status::Fail:
          if (is_theorem_claim(report.claim)) {
            ++result.summary.failed;
          } else {
            ++result.summary.findings;
          }
          break;
      }
      result.reports.push_back(std::move(report));
    }
  }
  result.summary.exit_code = result.summary.failed > 0     ? kExitTheoremFailed
                             : result.summary.findings > 0 ? kExitFinding
                                                           : kExitOk;
  result.summary.elapsed_ms =
      options.record_timing
          ? std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                      start)
                .count()
          : 0.0;
  return result;
}

std::vector<VerificationReport> check_conjecture1(
    const std::vector<CatalogEntry>& catalog, std::size_t max_order) {
  SuiteOptions options;
  options.claims = {ClaimId::CONJ1};
  return run_suite(catalog, max_order, options).reports;
}

}  // namespace sigmaperm
