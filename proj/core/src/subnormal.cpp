#include "sigmaperm/errors.hpp"
#include "sigmaperm/pi.hpp"
#include "sigmaperm/sigma.hpp"

namespace sigmaperm {

SigmaSubnormality::SigmaSubnormality(const SubgroupLattice& lattice,
                                     SigmaPartition sigma)
    : lattice_(&lattice), sigma_(std::move(sigma)) {
  if (sigma_.context() != group_primes(lattice.group())) {
    throw InvalidArgument("sigma " + sigma_.to_string() +
                          " is not canonicalized for this group");
  }
}

bool SigmaSubnormality::step(std::size_t a, std::size_t b) const {
  if (a == b) {
    return true;
  }
  const std::size_t key = a * lattice_->size() + b;
  {
    std::lock_guard lock(mutex_);
    if (auto it = steps_.find(key); it != steps_.end()) {
      return it->second;
    }
  }
  const Subgroup& lower = lattice_->at(a);
  const Subgroup& upper = lattice_->at(b);
  bool ok = false;
  if (is_normalized_by(lower, upper)) {
    ok = true;
  } else {
    const Subgroup lower_core = core_in(lower, upper);
    const PrimeSet support = prime_support(upper.order() / lower_core.order());
    for (const auto& block : sigma_.blocks()) {
      if (support.is_subset_of(block)) {
        ok = true;
        break;
      }
    }
  }
  std::lock_guard lock(mutex_);
  steps_.emplace(key, ok);
  return ok;
}

bool SigmaSubnormality::subnormal_in(std::size_t h, std::size_t top) const {
  if (!lattice_->contains(top, h)) {
    throw InvalidArgument("subnormality query with H not contained in top");
  }
  // Lattice order refines inclusion, so overgroups have larger indices.
  std::vector<std::size_t> between;
  for (std::size_t i = h; i <= top; ++i) {
    if (lattice_->contains(i, h) && lattice_->contains(top, i)) {
      between.push_back(i);
    }
  }
  std::vector<bool> reach(between.size(), false);
  reach.back() = true;
  for (std::size_t k = between.size() - 1; k-- > 0;) {
    for (std::size_t m = k + 1; m < between.size(); ++m) {
      if (reach[m] && lattice_->contains(between[m], between[k]) &&
          step(between[k], between[m])) {
        reach[k] = true;
        break;
      }
    }
  }
  return reach.front();
}

bool SigmaSubnormality::subnormal(std::size_t h) const {
  {
    std::lock_guard lock(mutex_);
    if (!in_whole_.empty()) {
      return in_whole_.at(h) == 1;
    }
  }
  // One sweep from the top fills in the answer for every subgroup.
  const std::size_t n = lattice_->size();
  std::vector<signed char> reach(n, 0);
  reach[n - 1] = 1;
  for (std::size_t k = n - 1; k-- > 0;) {
    for (std::size_t m = n; m-- > k + 1;) {
      if (reach[m] && lattice_->at(m).order() > lattice_->at(k).order() &&
          lattice_->contains(m, k) && step(k, m)) {
        reach[k] = 1;
        break;
      }
    }
  }
  std::lock_guard lock(mutex_);
  in_whole_ = std::move(reach);
  return in_whole_.at(h) == 1;
}

bool sigma_subnormal(const SubgroupLattice& lattice, const Subgroup& h,
                     const SigmaPartition& sigma) {
  SigmaSubnormality checker(lattice, sigma);
  return checker.subnormal(lattice.index_of(h));
}

}  // namespace sigmaperm
