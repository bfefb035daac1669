#include "sigmaperm/primes.hpp"

#include <algorithm>
#include <iterator>

#include "sigmaperm/errors.hpp"

namespace sigmaperm {

bool is_prime(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

PrimeSet::PrimeSet(std::initializer_list<std::uint64_t> primes)
    : PrimeSet(std::vector<std::uint64_t>(primes)) {}

PrimeSet::PrimeSet(std::vector<std::uint64_t> primes) : primes_(std::move(primes)) {
  for (auto p : primes_) {
    if (!is_prime(p)) {
      throw InvalidArgument(std::to_string(p) + " is not prime");
    }
  }
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

bool PrimeSet::contains(std::uint64_t p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

bool PrimeSet::is_subset_of(const PrimeSet& other) const {
  return std::includes(other.primes_.begin(), other.primes_.end(),
                       primes_.begin(), primes_.end());
}

bool PrimeSet::intersects(const PrimeSet& other) const {
  return !intersection(other).empty();
}

PrimeSet PrimeSet::intersection(const PrimeSet& other) const {
  PrimeSet out;
  std::set_intersection(primes_.begin(), primes_.end(), other.primes_.begin(),
                        other.primes_.end(), std::back_inserter(out.primes_));
  return out;
}

PrimeSet PrimeSet::union_with(const PrimeSet& other) const {
  PrimeSet out;
  std::set_union(primes_.begin(), primes_.end(), other.primes_.begin(),
                 other.primes_.end(), std::back_inserter(out.primes_));
  return out;
}

PrimeSet PrimeSet::difference(const PrimeSet& other) const {
  PrimeSet out;
  std::set_difference(primes_.begin(), primes_.end(), other.primes_.begin(),
                      other.primes_.end(), std::back_inserter(out.primes_));
  return out;
}

std::string PrimeSet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(primes_[i]);
  }
  return out;
}

PrimeSet prime_support(std::uint64_t n) {
  if (n == 0) {
    throw InvalidArgument("prime_support of 0");
  }
  std::vector<std::uint64_t> primes;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      primes.push_back(d);
      while (n % d == 0) {
        n /= d;
      }
    }
  }
  if (n > 1) {
    primes.push_back(n);
  }
  return PrimeSet(std::move(primes));
}

bool is_pi_number(std::uint64_t n, const PrimeSet& pi) {
  return prime_support(n).is_subset_of(pi);
}

std::uint64_t pi_part(std::uint64_t n, const PrimeSet& pi) {
  std::uint64_t part = 1;
  for (auto p : pi.primes()) {
    while (n % p == 0) {
      n /= p;
      part *= p;
    }
  }
  return part;
}

}  // namespace sigmaperm
