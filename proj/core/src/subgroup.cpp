#include "sigmaperm/subgroup.hpp"

#include <algorithm>
#include <string>

#include "sigmaperm/errors.hpp"

namespace sigmaperm {

bool lex_less(const ElementSet& a, const ElementSet& b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(),
                                      mb.end());
}

namespace {

void require_same_parent(const Subgroup& h, const Subgroup& k) {
  if (h.parent_ptr() != k.parent_ptr()) {
    throw MismatchError("subgroups belong to different parent groups");
  }
}

}  // namespace

Subgroup::Subgroup(GroupPtr parent, ElementSet members,
                   std::vector<element_index> generators)
    : parent_(std::move(parent)),
      members_(std::move(members)),
      order_(members_.count()),
      generators_(std::move(generators)) {}

Subgroup Subgroup::generated_by(GroupPtr parent,
                                std::span<const element_index> gens) {
  std::vector<element_index> kept;
  for (auto g : gens) {
    if (g >= parent->order()) {
      throw InvalidArgument("element index out of range");
    }
    if (g != FiniteGroup::identity() &&
        std::find(kept.begin(), kept.end(), g) == kept.end()) {
      kept.push_back(g);
    }
  }
  ElementSet members = closure(*parent, kept);
  return Subgroup(std::move(parent), std::move(members), std::move(kept));
}

Subgroup Subgroup::from_members(GroupPtr parent, ElementSet members) {
  if (members.universe() != parent->order() ||
      !members.test(FiniteGroup::identity())) {
    throw InvalidArgument("member set is not a subgroup");
  }
  auto gens = generating_set(*parent, members);
  if (closure(*parent, gens) != members) {
    throw InvalidArgument("member set is not closed under multiplication");
  }
  return Subgroup(std::move(parent), std::move(members), std::move(gens));
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  ElementSet members(parent->order());
  members.set(FiniteGroup::identity());
  return Subgroup(std::move(parent), std::move(members), {});
}

Subgroup Subgroup::whole(GroupPtr parent) {
  ElementSet members(parent->order());
  members.fill();
  std::vector<element_index> gens(parent->generators().begin(),
                                  parent->generators().end());
  return Subgroup(std::move(parent), std::move(members), std::move(gens));
}

std::string Subgroup::describe() const {
  if (generators_.empty()) {
    return "<()>";
  }
  std::string out = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += parent_->element(generators_[i]).to_cycles();
  }
  out += ">";
  return out;
}

ElementSet closure(const FiniteGroup& group,
                   std::span<const element_index> gens) {
  ElementSet current(group.order());
  current.set(FiniteGroup::identity());
  std::vector<element_index> used;
  for (auto g : gens) {
    if (!current.test(g)) {
      current = extend_closure(group, current, used, g);
    }
    used.push_back(g);
  }
  return current;
}

ElementSet extend_closure(const FiniteGroup& group, const ElementSet& base,
                          std::span<const element_index> base_gens,
                          element_index extra) {
  if (base.test(extra)) {
    return base;
  }
  // The result is a union of right cosets base*r; right multiplication by a
  // generator maps base*r onto base*(r g), so it suffices to walk coset
  // representatives.
  const auto base_members = base.members();
  std::vector<element_index> gens(base_gens.begin(), base_gens.end());
  gens.push_back(extra);

  ElementSet result = base;
  std::vector<element_index> reps{FiniteGroup::identity()};
  for (std::size_t head = 0; head < reps.size(); ++head) {
    const element_index r = reps[head];
    for (auto g : gens) {
      const element_index y = group.mul(r, g);
      if (result.test(y)) {
        continue;
      }
      for (auto s : base_members) {
        result.set(group.mul(s, y));
      }
      reps.push_back(y);
    }
  }
  return result;
}

std::vector<element_index> generating_set(const FiniteGroup& group,
                                          const ElementSet& members) {
  // Greedy over elements of decreasing order keeps the set short.
  auto candidates = members.members();
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&group](element_index a, element_index b) {
                     return group.element_order(a) > group.element_order(b);
                   });
  ElementSet current(group.order());
  current.set(FiniteGroup::identity());
  std::vector<element_index> gens;
  for (auto x : candidates) {
    if (current.count() == members.count()) {
      break;
    }
    if (!current.test(x)) {
      current = extend_closure(group, current, gens, x);
      gens.push_back(x);
    }
  }
  return gens;
}

bool is_closed(const FiniteGroup& group, const ElementSet& members) {
  if (!members.test(FiniteGroup::identity())) {
    return false;
  }
  const auto list = members.members();
  for (auto a : list) {
    for (auto b : list) {
      if (!members.test(group.mul(a, b))) {
        return false;
      }
    }
  }
  return true;
}

ElementSet product_set(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  const auto& group = h.parent();
  ElementSet out(group.order());
  const auto k_members = k.members().members();
  h.members().for_each([&](element_index x) {
    for (auto y : k_members) {
      out.set(group.mul(x, y));
    }
  });
  return out;
}

bool permutes(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  if (h.is_subgroup_of(k) || k.is_subgroup_of(h)) {
    return true;
  }
  const auto& group = h.parent();
  const ElementSet hk = product_set(h, k);
  // HK is closed under right multiplication by K already; it is a subgroup
  // iff it is also closed under right multiplication by generators of H.
  const auto hk_members = hk.members();
  for (auto g : h.generators()) {
    for (auto x : hk_members) {
      if (!hk.test(group.mul(x, g))) {
        return false;
      }
    }
  }
  return true;
}

Subgroup join(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  const auto& group = h.parent();
  ElementSet members = h.members();
  std::vector<element_index> gens(h.generators().begin(),
                                  h.generators().end());
  for (auto g : k.generators()) {
    if (!members.test(g)) {
      members = extend_closure(group, members, gens, g);
      gens.push_back(g);
    }
  }
  return Subgroup(h.parent_ptr(), std::move(members), std::move(gens));
}

Subgroup intersect(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  if (h.is_subgroup_of(k)) {
    return h;
  }
  if (k.is_subgroup_of(h)) {
    return k;
  }
  ElementSet members = h.members() & k.members();
  auto gens = generating_set(h.parent(), members);
  return Subgroup(h.parent_ptr(), std::move(members), std::move(gens));
}

ElementSet conjugate_members(const Subgroup& h, element_index x) {
  const auto& group = h.parent();
  ElementSet out(group.order());
  h.members().for_each(
      [&](element_index y) { out.set(group.conjugate(y, x)); });
  return out;
}

Subgroup conjugate_subgroup(const Subgroup& h, element_index x) {
  const auto& group = h.parent();
  if (x >= group.order()) {
    throw InvalidArgument("conjugating element out of range");
  }
  std::vector<element_index> gens;
  gens.reserve(h.generators().size());
  for (auto g : h.generators()) {
    gens.push_back(group.conjugate(g, x));
  }
  return Subgroup(h.parent_ptr(), conjugate_members(h, x), std::move(gens));
}

bool is_normalized_by(const Subgroup& h, const Subgroup& by) {
  require_same_parent(h, by);
  const auto& group = h.parent();
  for (auto x : by.generators()) {
    for (auto g : h.generators()) {
      if (!h.contains(group.conjugate(g, x))) {
        return false;
      }
    }
  }
  return true;
}

bool is_normal(const Subgroup& h) {
  const auto& group = h.parent();
  for (auto x : group.generators()) {
    for (auto g : h.generators()) {
      if (!h.contains(group.conjugate(g, x))) {
        return false;
      }
    }
  }
  return true;
}

Subgroup normalizer_in(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  const auto& group = h.parent();
  ElementSet members(group.order());
  k.members().for_each([&](element_index x) {
    for (auto g : h.generators()) {
      if (!h.contains(group.conjugate(g, x))) {
        return;
      }
    }
    members.set(x);
  });
  auto gens = generating_set(group, members);
  return Subgroup(h.parent_ptr(), std::move(members), std::move(gens));
}

Subgroup normalizer(const Subgroup& h) {
  return normalizer_in(h, Subgroup::whole(h.parent_ptr()));
}

Subgroup normal_closure(const Subgroup& h) {
  const auto& group = h.parent();
  ElementSet members = h.members();
  std::vector<element_index> gens(h.generators().begin(),
                                  h.generators().end());
  // Close the generating set under conjugation by the group generators.
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (auto x : group.generators()) {
      const element_index c = group.conjugate(gens[i], x);
      if (!members.test(c)) {
        members = extend_closure(group, members, gens, c);
        gens.push_back(c);
      }
    }
  }
  return Subgroup(h.parent_ptr(), std::move(members), std::move(gens));
}

Subgroup core_in(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  ElementSet members = h.members();
  k.members().for_each([&](element_index x) {
    if (members.count() > 1) {
      members &= conjugate_members(h, x);
    }
  });
  auto gens = generating_set(h.parent(), members);
  return Subgroup(h.parent_ptr(), std::move(members), std::move(gens));
}

Subgroup core(const Subgroup& h) {
  return core_in(h, Subgroup::whole(h.parent_ptr()));
}

}  // namespace sigmaperm
