#include "sigmaperm/finite_group.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "sigmaperm/errors.hpp"

namespace sigmaperm {

std::optional<element_index> FiniteGroup::index_of(const Permutation& p) const {
  if (p.degree() != degree_) {
    return std::nullopt;
  }
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) {
    return std::nullopt;
  }
  return static_cast<element_index>(it - elements_.begin());
}

GroupPtr generate_closure(std::span<const Permutation> gens) {
  return generate_closure(gens, order_cap());
}

GroupPtr generate_closure(std::span<const Permutation> gens, std::size_t cap) {
  if (gens.empty()) {
    throw InvalidArgument("generate_closure needs at least one generator");
  }
  const std::size_t degree = gens.front().degree();
  for (const auto& g : gens) {
    if (g.degree() != degree) {
      throw MismatchError("generators have mixed degrees");
    }
  }

  std::vector<Permutation> distinct_gens;
  for (const auto& g : gens) {
    if (!g.is_identity() &&
        std::find(distinct_gens.begin(), distinct_gens.end(), g) ==
            distinct_gens.end()) {
      distinct_gens.push_back(g);
    }
  }

  // Breadth-first closure under right multiplication by the generators.
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> found{Permutation::identity(degree)};
  seen.insert(found.front());
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (const auto& g : distinct_gens) {
      Permutation next = compose(found[head], g);
      if (seen.insert(next).second) {
        found.push_back(std::move(next));
        if (found.size() > cap) {
          throw LimitExceeded("group order exceeds cap " +
                                  std::to_string(cap) + " (found " +
                                  std::to_string(found.size()) +
                                  " elements before aborting)",
                              found.size());
        }
      }
    }
  }

  std::sort(found.begin(), found.end());

  auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  group->degree_ = degree;
  group->elements_ = std::move(found);
  const std::size_t n = group->elements_.size();

  for (const auto& g : distinct_gens) {
    group->generators_.push_back(*group->index_of(g));
  }

  group->mul_.assign(n * n, 0);
  std::unordered_map<Permutation, element_index, PermutationHash> lookup;
  lookup.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    lookup.emplace(group->elements_[i], static_cast<element_index>(i));
  }
  for (std::size_t a = 0; a < n; ++a) {
    const auto& pa = group->elements_[a];
    for (std::size_t b = 0; b < n; ++b) {
      group->mul_[a * n + b] = lookup.at(compose(pa, group->elements_[b]));
    }
  }

  group->inv_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    group->inv_[a] = lookup.at(group->elements_[a].inverse());
  }

  group->orders_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t k = 1;
    element_index x = static_cast<element_index>(a);
    while (x != FiniteGroup::identity()) {
      x = group->mul(x, static_cast<element_index>(a));
      ++k;
    }
    group->orders_[a] = k;
  }

  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  mix(degree);
  mix(n);
  for (const auto& p : group->elements_) {
    for (auto img : p.images()) {
      mix(img);
    }
  }
  group->hash_ = h;

  return group;
}

std::size_t element_order(const FiniteGroup& group, element_index g) {
  if (g >= group.order()) {
    throw InvalidArgument("element index " + std::to_string(g) +
                          " out of range");
  }
  return group.element_order(g);
}

}  // namespace sigmaperm
