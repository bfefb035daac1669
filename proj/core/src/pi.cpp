#include "sigmaperm/pi.hpp"

#include <algorithm>
#include <string>

#include "sigmaperm/errors.hpp"

namespace sigmaperm {

PrimeSet group_primes(const FiniteGroup& group) {
  return prime_support(group.order());
}

bool is_pi_group(const Subgroup& h, const PrimeSet& pi) {
  return is_pi_number(h.order(), pi);
}

std::vector<std::size_t> pi_subgroups(const SubgroupLattice& lattice,
                                      const PrimeSet& pi, std::size_t top) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (is_pi_group(lattice.at(i), pi) && lattice.contains(top, i)) {
      out.push_back(i);
    }
  }
  return out;
}

namespace {

// Members of `candidates` not properly contained in another member.
std::vector<std::size_t> maximal_elements(const SubgroupLattice& lattice,
                                          const std::vector<std::size_t>& candidates) {
  std::vector<std::size_t> out;
  for (auto i : candidates) {
    const bool dominated =
        std::any_of(candidates.begin(), candidates.end(), [&](std::size_t j) {
          return j != i && lattice.at(j).order() > lattice.at(i).order() &&
                 lattice.contains(j, i);
        });
    if (!dominated) {
      out.push_back(i);
    }
  }
  return out;
}

std::vector<std::size_t> subgroups_of_order(const SubgroupLattice& lattice,
                                            std::size_t order, std::size_t top) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (lattice.at(i).order() == order && lattice.contains(top, i)) {
      out.push_back(i);
    }
  }
  return out;
}

}  // namespace

std::vector<std::size_t> pi_maximal_subgroups(const SubgroupLattice& lattice,
                                              const PrimeSet& pi) {
  return pi_maximal_subgroups(lattice, pi, lattice.whole_index());
}

std::vector<std::size_t> pi_maximal_subgroups(const SubgroupLattice& lattice,
                                              const PrimeSet& pi,
                                              std::size_t top) {
  return maximal_elements(lattice, pi_subgroups(lattice, pi, top));
}

std::vector<std::size_t> sylow_subgroups(const SubgroupLattice& lattice,
                                         std::uint64_t p) {
  return sylow_subgroups(lattice, p, lattice.whole_index());
}

std::vector<std::size_t> sylow_subgroups(const SubgroupLattice& lattice,
                                         std::uint64_t p, std::size_t top) {
  if (!is_prime(p)) {
    throw InvalidArgument(std::to_string(p) + " is not prime");
  }
  return hall_subgroups(lattice, PrimeSet{p}, top);
}

std::vector<std::size_t> hall_subgroups(const SubgroupLattice& lattice,
                                        const PrimeSet& pi) {
  return hall_subgroups(lattice, pi, lattice.whole_index());
}

std::vector<std::size_t> hall_subgroups(const SubgroupLattice& lattice,
                                        const PrimeSet& pi, std::size_t top) {
  return subgroups_of_order(lattice, pi_part(lattice.at(top).order(), pi), top);
}

std::size_t o_pi(const SubgroupLattice& lattice, const PrimeSet& pi) {
  return o_pi(lattice, pi, lattice.whole_index());
}

std::size_t o_pi(const SubgroupLattice& lattice, const PrimeSet& pi,
                 std::size_t top) {
  const Subgroup& t = lattice.at(top);
  std::vector<std::size_t> normal_pi;
  for (auto i : pi_subgroups(lattice, pi, top)) {
    if (is_normalized_by(lattice.at(i), t)) {
      normal_pi.push_back(i);
    }
  }
  // Lattice order is by subgroup order, so the last one is the largest.
  const std::size_t largest = normal_pi.back();
  for (auto i : normal_pi) {
    if (!lattice.contains(largest, i)) {
      throw InvariantViolation("normal pi-subgroups have no largest member");
    }
  }
  return largest;
}

std::size_t o_upper_pi(const SubgroupLattice& lattice, const PrimeSet& pi) {
  return o_upper_pi(lattice, pi, lattice.whole_index());
}

std::size_t o_upper_pi(const SubgroupLattice& lattice, const PrimeSet& pi,
                       std::size_t top) {
  const Subgroup& t = lattice.at(top);
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const Subgroup& n = lattice.at(i);
    if (lattice.contains(top, i) && is_pi_number(t.order() / n.order(), pi) &&
        is_normalized_by(n, t)) {
      candidates.push_back(i);
    }
  }
  const std::size_t smallest = candidates.front();
  for (auto i : candidates) {
    if (!lattice.contains(i, smallest)) {
      throw InvariantViolation("normal subgroups with pi-quotient have no least member");
    }
  }
  return smallest;
}

std::vector<std::size_t> gpi_projectors(const SubgroupLattice& lattice,
                                        const PrimeSet& pi) {
  std::vector<std::size_t> alive = pi_maximal_subgroups(lattice, pi);

  for (auto n_idx : lattice.normal_indices()) {
    if (alive.empty()) {
      break;
    }
    const Subgroup& n = lattice.at(n_idx);
    if (n.is_trivial()) {
      continue;  // the pi-maximality filter above covers N = 1
    }
    // Overgroups of N whose image in G/N is a pi-group, and the maximal ones.
    std::vector<std::size_t> pi_over;
    for (std::size_t y = 0; y < lattice.size(); ++y) {
      if (lattice.contains(y, n_idx) &&
          is_pi_number(lattice.at(y).order() / n.order(), pi)) {
        pi_over.push_back(y);
      }
    }
    const auto maximal = maximal_elements(lattice, pi_over);

    std::vector<std::size_t> kept;
    for (auto h_idx : alive) {
      const std::size_t hn = lattice.index_of(product_set(lattice.at(h_idx), n));
      if (std::find(maximal.begin(), maximal.end(), hn) != maximal.end()) {
        kept.push_back(h_idx);
      }
    }
    alive = std::move(kept);
  }

  if (alive.empty()) {
    throw InvariantViolation("no projector for pi = {" + pi.to_string() +
                             "}; projectors exist in every finite group");
  }
  return alive;
}

bool has_D_pi_property(const SubgroupLattice& lattice, const PrimeSet& pi) {
  return has_D_pi_property(lattice, pi, lattice.whole_index());
}

bool has_D_pi_property(const SubgroupLattice& lattice, const PrimeSet& pi,
                       std::size_t top) {
  const auto halls = hall_subgroups(lattice, pi, top);
  if (halls.empty()) {
    return false;
  }
  // Conjugacy class of the first Hall subgroup under `top`.
  const Subgroup& t = lattice.at(top);
  std::vector<std::size_t> orbit{halls.front()};
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (auto x : t.generators()) {
      const auto j =
          lattice.index_of(conjugate_members(lattice.at(orbit[head]), x));
      if (std::find(orbit.begin(), orbit.end(), j) == orbit.end()) {
        orbit.push_back(j);
      }
    }
  }
  if (orbit.size() != halls.size()) {
    return false;
  }
  for (auto s : pi_subgroups(lattice, pi, top)) {
    const bool covered =
        std::any_of(halls.begin(), halls.end(),
                    [&](std::size_t h) { return lattice.contains(h, s); });
    if (!covered) {
      return false;
    }
  }
  return true;
}

}  // namespace sigmaperm
