#include "sigmaperm/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace sigmaperm {

std::vector<std::size_t> SubgroupLattice::normal_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < normal_.size(); ++i) {
    if (normal_[i]) {
      out.push_back(i);
    }
  }
  return out;
}

std::optional<std::size_t> SubgroupLattice::find(const ElementSet& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::size_t SubgroupLattice::index_of(const ElementSet& members) const {
  auto found = find(members);
  if (!found) {
    throw InvariantViolation("subgroup missing from lattice");
  }
  return *found;
}

std::size_t SubgroupLattice::index_of(const Subgroup& h) const {
  if (h.parent_ptr() != group_) {
    throw MismatchError("subgroup does not belong to this lattice's group");
  }
  return index_of(h.members());
}

void SubgroupLattice::finalize() {
  std::sort(subgroups_.begin(), subgroups_.end(),
            [](const Subgroup& a, const Subgroup& b) {
              if (a.order() != b.order()) {
                return a.order() < b.order();
              }
              return lex_less(a.members(), b.members());
            });

  index_.clear();
  index_.reserve(subgroups_.size());
  for (std::size_t i = 0; i < subgroups_.size(); ++i) {
    index_.emplace(subgroups_[i].members(), i);
  }

  const auto& g = *group_;
  const std::size_t n = subgroups_.size();
  normal_.assign(n, false);
  class_of_.assign(n, n);
  classes_.clear();

  for (std::size_t i = 0; i < n; ++i) {
    if (class_of_[i] != n) {
      continue;
    }
    // Orbit under conjugation by the group generators.
    std::vector<std::size_t> orbit{i};
    class_of_[i] = classes_.size();
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      const Subgroup& s = subgroups_[orbit[head]];
      for (auto x : g.generators()) {
        const std::size_t j = index_of(conjugate_members(s, x));
        if (class_of_[j] == n) {
          class_of_[j] = classes_.size();
          orbit.push_back(j);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    if (orbit.size() == 1) {
      normal_[i] = true;
    }
    classes_.push_back(std::move(orbit));
  }
}

SubgroupLattice SubgroupLattice::from_subgroups(GroupPtr group,
                                                std::vector<Subgroup> subgroups) {
  SubgroupLattice lattice;
  lattice.group_ = std::move(group);
  for (const auto& s : subgroups) {
    if (s.parent_ptr() != lattice.group_) {
      throw MismatchError("subgroup does not belong to the lattice's group");
    }
    if (!is_closed(*lattice.group_, s.members())) {
      throw InvalidArgument("subgroup list contains a set that is not closed");
    }
  }
  lattice.subgroups_ = std::move(subgroups);
  lattice.finalize();
  if (lattice.subgroups_.empty() || !lattice.subgroups_.front().is_trivial() ||
      !lattice.subgroups_.back().is_whole()) {
    throw InvalidArgument("subgroup list lacks the trivial or whole subgroup");
  }
  if (lattice.index_.size() != lattice.subgroups_.size()) {
    throw InvalidArgument("subgroup list contains duplicates");
  }
  const FiniteGroup& g = *lattice.group_;
  for (element_index x = 0; x < g.order(); ++x) {
    const element_index gen[] = {x};
    if (!lattice.index_.contains(closure(g, gen))) {
      throw InvalidArgument("subgroup list misses the cyclic subgroup generated by " +
                            g.element(x).to_cycles());
    }
  }
  return lattice;
}

SubgroupLattice all_subgroups(GroupPtr group, std::size_t limit) {
  const FiniteGroup& g = *group;
  SubgroupLattice lattice;
  lattice.group_ = group;

  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  std::vector<Subgroup>& subs = lattice.subgroups_;

  auto add = [&](ElementSet members, std::vector<element_index> gens) -> bool {
    if (seen.contains(members)) {
      return false;
    }
    if (subs.size() >= limit) {
      throw LimitExceeded("subgroup count exceeds limit " +
                              std::to_string(limit),
                          subs.size());
    }
    seen.emplace(members, subs.size());
    subs.emplace_back(group, std::move(members), std::move(gens));
    return true;
  };

  add(Subgroup::trivial(group).members(), {});

  // Cyclic seeds, one generator per distinct cyclic subgroup.
  std::vector<element_index> cyclic_gens;
  for (element_index x = 1; x < g.order(); ++x) {
    const element_index one[] = {x};
    if (add(closure(g, one), {x})) {
      cyclic_gens.push_back(x);
    }
  }

  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (auto c : cyclic_gens) {
      if (subs[i].contains(c)) {
        continue;
      }
      const std::vector<element_index> base_gens(subs[i].generators().begin(),
                                                 subs[i].generators().end());
      ElementSet joined = extend_closure(g, subs[i].members(), base_gens, c);
      if (!seen.contains(joined)) {
        auto gens = base_gens;
        gens.push_back(c);
        add(std::move(joined), std::move(gens));
      }
    }
  }

  lattice.finalize();
  return lattice;
}

std::vector<std::size_t> normal_subgroups(const SubgroupLattice& lattice) {
  return lattice.normal_indices();
}

}  // namespace sigmaperm
