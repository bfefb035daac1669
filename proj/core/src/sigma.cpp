#include "sigmaperm/sigma.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

#include "sigmaperm/errors.hpp"
#include "sigmaperm/pi.hpp"

namespace sigmaperm {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) {
      break;
    }
    start = pos + 1;
  }
  return out;
}

void require_disjoint(const std::vector<PrimeSet>& blocks) {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      if (blocks[i].intersects(blocks[j])) {
        throw InvalidArgument("sigma blocks {" + blocks[i].to_string() +
                              "} and {" + blocks[j].to_string() +
                              "} overlap");
      }
    }
  }
}

}  // namespace

SigmaSpec parse_sigma_spec(std::string_view text) {
  text = trim(text);
  SigmaSpec spec;
  if (text == "s1") {
    spec.singletons = true;
    return spec;
  }
  if (text.empty()) {
    throw ParseError("empty sigma spec");
  }
  auto parts = split(text, '|');
  if (trim(parts.back()) == "*") {
    spec.rest = true;
    parts.pop_back();
  }
  for (auto part : parts) {
    part = trim(part);
    if (part.empty()) {
      throw ParseError("empty block in sigma spec \"" + std::string(text) + "\"");
    }
    std::vector<std::uint64_t> primes;
    for (auto token : split(part, ',')) {
      token = trim(token);
      std::uint64_t value = 0;
      auto [ptr, ec] =
          std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc{} ||
          ptr != token.data() + token.size() || !is_prime(value)) {
        throw ParseError("\"" + std::string(token) +
                         "\" is not a prime in sigma spec");
      }
      if (std::find(primes.begin(), primes.end(), value) != primes.end()) {
        throw ParseError("prime " + std::to_string(value) +
                         " repeated within a block");
      }
      primes.push_back(value);
    }
    spec.blocks.emplace_back(std::move(primes));
  }
  try {
    require_disjoint(spec.blocks);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
  return spec;
}

SigmaPartition SigmaPartition::canonicalize(const std::vector<PrimeSet>& blocks,
                                            const PrimeSet& context) {
  require_disjoint(blocks);
  SigmaPartition out;
  out.context_ = context;
  PrimeSet covered;
  for (const auto& b : blocks) {
    PrimeSet reduced = b.intersection(context);
    covered = covered.union_with(reduced);
    if (!reduced.empty()) {
      out.blocks_.push_back(std::move(reduced));
    }
  }
  if (covered != context) {
    throw InvalidArgument("sigma does not cover the primes " +
                          context.difference(covered).to_string() +
                          " of the group");
  }
  std::sort(out.blocks_.begin(), out.blocks_.end(),
            [](const PrimeSet& a, const PrimeSet& b) { return a.least() < b.least(); });
  return out;
}

SigmaPartition SigmaPartition::singletons(const PrimeSet& context) {
  std::vector<PrimeSet> blocks;
  for (auto p : context.primes()) {
    blocks.push_back(PrimeSet{p});
  }
  return canonicalize(blocks, context);
}

bool SigmaPartition::is_singletons() const noexcept {
  return std::all_of(blocks_.begin(), blocks_.end(),
                     [](const PrimeSet& b) { return b.size() == 1; });
}

SigmaPartition SigmaPartition::restrict_to(const PrimeSet& primes) const {
  if (!primes.is_subset_of(context_)) {
    throw InvalidArgument("cannot restrict sigma to primes outside its context");
  }
  return canonicalize(blocks_, primes);
}

std::string SigmaPartition::to_string() const {
  if (blocks_.empty()) {
    return "-";
  }
  std::string out;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i > 0) {
      out += '|';
    }
    out += blocks_[i].to_string();
  }
  return out;
}

SigmaPartition canonicalize_sigma(const std::vector<PrimeSet>& blocks,
                                  const FiniteGroup& group) {
  return SigmaPartition::canonicalize(blocks, group_primes(group));
}

SigmaPartition canonicalize_sigma(const SigmaSpec& spec, const FiniteGroup& group) {
  const PrimeSet context = group_primes(group);
  if (spec.singletons) {
    return SigmaPartition::singletons(context);
  }
  auto blocks = spec.blocks;
  if (spec.rest) {
    PrimeSet mentioned;
    for (const auto& b : blocks) {
      mentioned = mentioned.union_with(b);
    }
    PrimeSet rest = context.difference(mentioned);
    if (!rest.empty()) {
      blocks.push_back(std::move(rest));
    }
  }
  return SigmaPartition::canonicalize(blocks, context);
}

std::vector<SigmaPartition> enumerate_sigma_partitions(const PrimeSet& primes) {
  const std::size_t n = primes.size();
  if (n > 6) {
    throw InvalidArgument("too many primes (" + std::to_string(n) +
                          ") to enumerate sigma partitions");
  }
  std::vector<SigmaPartition> out;
  // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]),
  // visited in lexicographic order.
  std::vector<std::size_t> rgs(n, 0);
  auto emit = [&] {
    std::size_t count = 0;
    for (auto r : rgs) {
      count = std::max(count, r + 1);
    }
    std::vector<std::vector<std::uint64_t>> parts(count);
    for (std::size_t i = 0; i < n; ++i) {
      parts[rgs[i]].push_back(primes.primes()[i]);
    }
    std::vector<PrimeSet> sets;
    for (auto& p : parts) {
      sets.emplace_back(std::move(p));
    }
    out.push_back(SigmaPartition::canonicalize(sets, primes));
  };
  auto recurse = [&](auto& self, std::size_t i, std::size_t used) -> void {
    if (i == n) {
      emit();
      return;
    }
    for (std::size_t v = 0; v <= used; ++v) {
      rgs[i] = v;
      self(self, i + 1, std::max(used, v + 1));
    }
  };
  if (n == 0) {
    emit();
  } else {
    rgs[0] = 0;
    recurse(recurse, 1, 1);
  }
  return out;
}

std::vector<SigmaPartition> enumerate_sigma_partitions(const FiniteGroup& group) {
  return enumerate_sigma_partitions(group_primes(group));
}

std::string to_string(Level level) {
  switch (level) {
    case Level::One:
      return "1";
    case Level::Two:
      return "2";
    case Level::Three:
      return "3";
    case Level::Skiba:
      return "skiba";
  }
  return "?";
}

Level parse_level(std::string_view text) {
  if (text == "1") return Level::One;
  if (text == "2") return Level::Two;
  if (text == "3") return Level::Three;
  if (text == "skiba") return Level::Skiba;
  throw ParseError("unknown permutability level \"" + std::string(text) +
                   "\" (expected 1, 2, 3 or skiba)");
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::False:
      return "false";
    case Verdict::True:
      return "true";
    case Verdict::Undefined:
      return "undefined";
  }
  return "?";
}

SigmaAnalysis::SigmaAnalysis(const SubgroupLattice& lattice, SigmaPartition sigma)
    : lattice_(&lattice), sigma_(std::move(sigma)) {
  if (sigma_.context() != group_primes(lattice.group())) {
    throw InvalidArgument("sigma " + sigma_.to_string() +
                          " is not canonicalized for this group");
  }
  for (const auto& b : sigma_.blocks()) {
    Block block;
    block.primes = b;
    block.pi_maximal = pi_maximal_subgroups(lattice, b);
    block.projectors = gpi_projectors(lattice, b);
    block.halls = hall_subgroups(lattice, b);
    blocks_.push_back(std::move(block));
  }
}

bool SigmaAnalysis::has_all_halls() const noexcept {
  return std::all_of(blocks_.begin(), blocks_.end(),
                     [](const Block& b) { return !b.halls.empty(); });
}

bool SigmaAnalysis::permutes_with(std::size_t h, std::size_t k) const {
  return permutes(lattice_->at(h), lattice_->at(k));
}

PermutabilityResult SigmaAnalysis::evaluate_all(
    std::size_t h, const std::vector<std::size_t> Block::*family,
    const PrimeSet* only) const {
  for (const auto& block : blocks_) {
    if (only != nullptr && block.primes != *only) {
      continue;
    }
    for (auto k : block.*family) {
      if (!permutes_with(h, k)) {
        return {Verdict::False, PermutabilityWitness{block.primes, k}};
      }
    }
  }
  return {Verdict::True, std::nullopt};
}

PermutabilityResult SigmaAnalysis::evaluate_exists_class(
    std::size_t h, const std::vector<std::size_t> Block::*family,
    bool undefined_if_empty) const {
  // A missing family makes the definition vacuous whatever the other blocks say.
  for (const auto& block : blocks_) {
    if ((block.*family).empty()) {
      if (undefined_if_empty) {
        return {Verdict::Undefined, PermutabilityWitness{block.primes, std::nullopt}};
      }
      throw InvariantViolation("empty subgroup family for block {" +
                               block.primes.to_string() + "}");
    }
  }
  for (const auto& block : blocks_) {
    const auto& members = block.*family;
    // Both families are unions of conjugacy classes, so "P and all its
    // conjugates" is one lattice conjugacy class.
    std::optional<std::size_t> first_failure;
    bool found = false;
    std::vector<std::size_t> seen_classes;
    for (auto p : members) {
      const auto cls = lattice_->class_of(p);
      if (std::find(seen_classes.begin(), seen_classes.end(), cls) !=
          seen_classes.end()) {
        continue;
      }
      seen_classes.push_back(cls);
      bool all = true;
      for (auto conj : lattice_->conjugacy_classes()[cls]) {
        if (!permutes_with(h, conj)) {
          all = false;
          if (!first_failure) {
            first_failure = conj;
          }
          break;
        }
      }
      if (all) {
        found = true;
        break;
      }
    }
    if (!found) {
      return {Verdict::False, PermutabilityWitness{block.primes, first_failure}};
    }
  }
  return {Verdict::True, std::nullopt};
}

PermutabilityResult SigmaAnalysis::evaluate(std::size_t h, Level level) const {
  if (h >= lattice_->size()) {
    throw InvalidArgument("subgroup index out of range");
  }
  switch (level) {
    case Level::One:
      return evaluate_all(h, &Block::pi_maximal, nullptr);
    case Level::Two:
      return evaluate_all(h, &Block::projectors, nullptr);
    case Level::Three:
      return evaluate_exists_class(h, &Block::projectors, false);
    case Level::Skiba:
      return evaluate_exists_class(h, &Block::halls, true);
  }
  throw InvalidArgument("unknown level");
}

const std::vector<Verdict>& SigmaAnalysis::verdicts(Level level) const {
  const auto slot = static_cast<std::size_t>(level);
  std::call_once(once_[slot], [&] {
    std::vector<Verdict> table(lattice_->size());
    for (std::size_t h = 0; h < lattice_->size(); ++h) {
      table[h] = evaluate(h, level).verdict;
    }
    tables_[slot] = std::move(table);
  });
  return tables_[slot];
}

std::vector<std::size_t> SigmaAnalysis::permutable_set(Level level) const {
  const auto& table = verdicts(level);
  std::vector<std::size_t> out;
  for (std::size_t h = 0; h < table.size(); ++h) {
    if (table[h] == Verdict::True) {
      out.push_back(h);
    }
  }
  return out;
}

PermutabilityResult sigma_permutable(const SubgroupLattice& lattice,
                                     const Subgroup& h,
                                     const SigmaPartition& sigma, Level level) {
  SigmaAnalysis analysis(lattice, sigma);
  return analysis.evaluate(lattice.index_of(h), level);
}

bool s_permutable(const SubgroupLattice& lattice, std::size_t h) {
  const Subgroup& sub = lattice.at(h);
  const PrimeSet primes = group_primes(lattice.group());
  for (auto p : primes.primes()) {
    for (auto s : sylow_subgroups(lattice, p)) {
      if (!permutes(sub, lattice.at(s))) {
        return false;
      }
    }
  }
  return true;
}

ElementSet pi_elements(const Subgroup& h, const PrimeSet& pi) {
  const auto& g = h.parent();
  ElementSet out(g.order());
  h.members().for_each([&](element_index x) {
    if (is_pi_number(g.element_order(x), pi)) {
      out.set(x);
    }
  });
  return out;
}

bool sigma_nilpotent(const Subgroup& h, const SigmaPartition& sigma) {
  const auto& g = h.parent();
  PrimeSet covered;
  for (const auto& block : sigma.blocks()) {
    covered = covered.union_with(block);
  }
  if (!prime_support(h.order()).is_subset_of(covered)) {
    throw InvalidArgument("sigma " + sigma.to_string() +
                          " does not cover the primes of the group");
  }
  for (const auto& block : sigma.blocks()) {
    const ElementSet elems = pi_elements(h, block);
    if (elems.count() != pi_part(h.order(), block) || !is_closed(g, elems)) {
      return false;
    }
  }
  return true;
}

bool sigma_nilpotent(const FiniteGroup& group, const SigmaPartition& sigma) {
  // A whole-group subgroup needs a GroupPtr; alias a non-owning one.
  GroupPtr alias(std::shared_ptr<const FiniteGroup>{}, &group);
  return sigma_nilpotent(Subgroup::whole(alias), sigma);
}

}  // namespace sigmaperm
