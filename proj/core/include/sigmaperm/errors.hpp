#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sigmaperm {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (cycles, group specs, sigma specs, cache files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operands that belong to different groups or act on different degrees.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// A configured size limit (order cap, degree cap, subgroup ceiling) was hit.
class LimitExceeded : public Error {
 public:
  LimitExceeded(const std::string& what, std::size_t partial_count)
      : Error(what), partial_count_(partial_count) {}

  /// How far the computation got before giving up.
  std::size_t partial_count() const noexcept { return partial_count_; }

 private:
  std::size_t partial_count_;
};

/// Input that is well formed but violates a precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Always a bug in the engine.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Default order cap, overridable through SIGMAPERM_ORDER_CAP.
inline constexpr std::size_t kDefaultOrderCap = 512;

/// Largest permutation degree accepted from user-facing constructors.
inline constexpr std::size_t kMaxDegree = 64;

/// Default ceiling on the number of subgroups a lattice may hold.
inline constexpr std::size_t kDefaultSubgroupLimit = 10000;

/// The order cap currently in force: SIGMAPERM_ORDER_CAP if set and valid,
/// kDefaultOrderCap otherwise.
std::size_t order_cap();

}  // namespace sigmaperm
