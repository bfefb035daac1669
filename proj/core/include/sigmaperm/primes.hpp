#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace sigmaperm {

bool is_prime(std::uint64_t n);

/// A finite set of primes, kept sorted and duplicate-free.
class PrimeSet {
 public:
  PrimeSet() = default;

  /// Throws InvalidArgument if a member is not prime.
  PrimeSet(std::initializer_list<std::uint64_t> primes);
  explicit PrimeSet(std::vector<std::uint64_t> primes);

  const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }
  std::size_t size() const noexcept { return primes_.size(); }
  bool empty() const noexcept { return primes_.empty(); }
  std::uint64_t least() const { return primes_.front(); }

  bool contains(std::uint64_t p) const;
  bool is_subset_of(const PrimeSet& other) const;
  bool intersects(const PrimeSet& other) const;

  PrimeSet intersection(const PrimeSet& other) const;
  PrimeSet union_with(const PrimeSet& other) const;
  PrimeSet difference(const PrimeSet& other) const;

  /// "2,5"; the empty set prints as "".
  std::string to_string() const;

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;
  friend auto operator<=>(const PrimeSet& a, const PrimeSet& b) {
    return a.primes_ <=> b.primes_;
  }

 private:
  std::vector<std::uint64_t> primes_;
};

/// Primes dividing n; prime_support(1) is empty.
PrimeSet prime_support(std::uint64_t n);

/// True iff every prime divisor of n lies in pi.
bool is_pi_number(std::uint64_t n, const PrimeSet& pi);

/// Largest divisor of n that is a pi-number.
std::uint64_t pi_part(std::uint64_t n, const PrimeSet& pi);

}  // namespace sigmaperm
