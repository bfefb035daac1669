#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sigmaperm {

/**
 * A bijection on the points {1, ..., n}.
 *
 * Images are stored 0-based internally; every textual interface is 1-based.
 * Products are read left to right: (p * q)(x) = q(p(x)), i.e. "p, then q".
 */
class Permutation {
 public:
  using point_type = std::uint16_t;

  Permutation() = default;

  /// The identity on `degree` points.
  static Permutation identity(std::size_t degree);

  /// Builds from 0-based images; throws InvalidArgument unless a bijection.
  static Permutation from_images(std::vector<point_type> images);

  /// Builds from 1-based images, e.g. {2, 3, 1} for the 3-cycle (1 2 3).
  static Permutation from_one_based(std::span<const int> images);

  std::size_t degree() const noexcept { return images_.size(); }

  /// Image of a 0-based point.
  point_type operator[](std::size_t point) const { return images_[point]; }

  const std::vector<point_type>& images() const noexcept { return images_; }

  /// 1-based image array, handy for tests and output.
  std::vector<int> one_based() const;

  bool is_identity() const noexcept;

  Permutation inverse() const;

  /// Cycle notation, fixed points omitted; the identity prints as "()".
  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  explicit Permutation(std::vector<point_type> images)
      : images_(std::move(images)) {}

  std::vector<point_type> images_;
};

/// Left-to-right product: compose(p, q)(x) = q(p(x)).
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

/// Parses "(a b c)(d e)" with 1-based points. The cycles are multiplied left
/// to right. Empty text (or "()") yields the identity.
Permutation parse_cycles(std::string_view text, std::size_t degree);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace sigmaperm
