#include "sigmaperm/quotient.hpp"

#include <algorithm>
#include <limits>

#include "sigmaperm/errors.hpp"

namespace sigmaperm {

Quotient quotient(const Subgroup& normal) {
  if (!is_normal(normal)) {
    throw InvalidArgument("quotient requires a normal subgroup");
  }
  const FiniteGroup& g = normal.parent();
  const std::size_t n = g.order();
  constexpr auto unset = std::numeric_limits<std::size_t>::max();

  // Right cosets N*r, numbered in order of their least element.
  std::vector<std::size_t> coset_of(n, unset);
  std::vector<element_index> reps;
  const auto kernel_members = normal.members().members();
  for (element_index r = 0; r < n; ++r) {
    if (coset_of[r] != unset) {
      continue;
    }
    for (auto k : kernel_members) {
      coset_of[g.mul(k, r)] = reps.size();
    }
    reps.push_back(r);
  }
  const std::size_t index = reps.size();
  if (index > std::numeric_limits<Permutation::point_type>::max()) {
    throw LimitExceeded("quotient degree too large", index);
  }

  auto action = [&](element_index x) {
    std::vector<Permutation::point_type> images(index);
    for (std::size_t c = 0; c < index; ++c) {
      images[c] =
          static_cast<Permutation::point_type>(coset_of[g.mul(reps[c], x)]);
    }
    return Permutation::from_images(std::move(images));
  };

  std::vector<Permutation> gens;
  for (auto x : g.generators()) {
    gens.push_back(action(x));
  }
  if (gens.empty()) {
    gens.push_back(Permutation::identity(index));
  }

  Quotient q;
  q.source_ = normal.parent_ptr();
  q.quotient_ = generate_closure(gens, std::max(n, order_cap()));
  q.kernel_ = normal;
  q.projection_.resize(n);
  for (element_index x = 0; x < n; ++x) {
    auto idx = q.quotient_->index_of(action(x));
    if (!idx) {
      throw InvariantViolation("coset action image missing from quotient");
    }
    q.projection_[x] = *idx;
  }
  return q;
}

Subgroup Quotient::image(const Subgroup& h) const {
  if (h.parent_ptr() != source_) {
    throw MismatchError("subgroup is not in the quotient's source group");
  }
  ElementSet members(quotient_->order());
  h.members().for_each([&](element_index x) { members.set(projection_[x]); });
  std::vector<element_index> gens;
  for (auto x : h.generators()) {
    const auto y = projection_[x];
    if (y != FiniteGroup::identity() &&
        std::find(gens.begin(), gens.end(), y) == gens.end()) {
      gens.push_back(y);
    }
  }
  return Subgroup(quotient_, std::move(members), std::move(gens));
}

Subgroup Quotient::preimage(const Subgroup& y) const {
  if (y.parent_ptr() != quotient_) {
    throw MismatchError("subgroup is not in this quotient group");
  }
  ElementSet members(source_->order());
  for (element_index x = 0; x < source_->order(); ++x) {
    if (y.contains(projection_[x])) {
      members.set(x);
    }
  }
  auto gens = generating_set(*source_, members);
  return Subgroup(source_, std::move(members), std::move(gens));
}

SubgroupGroup as_group(const Subgroup& h) {
  const FiniteGroup& parent = h.parent();
  std::vector<Permutation> gens;
  for (auto x : h.generators()) {
    gens.push_back(parent.element(x));
  }
  if (gens.empty()) {
    gens.push_back(Permutation::identity(parent.degree()));
  }
  SubgroupGroup out;
  out.group = generate_closure(gens, std::max(parent.order(), order_cap()));
  out.to_parent.reserve(out.group->order());
  for (const auto& p : out.group->elements()) {
    out.to_parent.push_back(*parent.index_of(p));
  }
  return out;
}

GroupPtr section(const Subgroup& top, const Subgroup& bottom) {
  if (!bottom.is_subgroup_of(top)) {
    throw InvalidArgument("section bottom is not contained in top");
  }
  if (bottom.order() == 1) {
    return as_group(top).group;
  }
  if (bottom.order() == top.order()) {
    const Permutation id[] = {Permutation::identity(1)};
    return generate_closure(id, 1);
  }
  SubgroupGroup embedded = as_group(top);
  const FiniteGroup& t = *embedded.group;
  ElementSet members(t.order());
  for (element_index x = 0; x < t.order(); ++x) {
    if (bottom.contains(embedded.to_parent[x])) {
      members.set(x);
    }
  }
  Subgroup inner = Subgroup::from_members(embedded.group, std::move(members));
  return quotient(inner).group();
}

}  // namespace sigmaperm
