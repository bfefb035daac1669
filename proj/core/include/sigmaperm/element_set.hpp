#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sigmaperm {

/// Fixed-universe bitset over element indices of one group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return universe_; }

  bool test(std::size_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  /// Sets every bit; used for "the whole group".
  void fill() noexcept {
    for (auto& w : words_) {
      w = ~std::uint64_t{0};
    }
    if (universe_ % 64 != 0 && !words_.empty()) {
      words_.back() = (std::uint64_t{1} << (universe_ % 64)) - 1;
    }
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) {
      c += static_cast<std::size_t>(std::popcount(w));
    }
    return c;
  }

  bool empty() const noexcept {
    for (auto w : words_) {
      if (w != 0) {
        return false;
      }
    }
    return true;
  }

  bool is_subset_of(const ElementSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & ~other.words_[i]) != 0) {
        return false;
      }
    }
    return true;
  }

  ElementSet& operator&=(const ElementSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      words_[i] &= other.words_[i];
    }
    return *this;
  }
  ElementSet& operator|=(const ElementSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      words_[i] |= other.words_[i];
    }
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) noexcept {
    return a &= b;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) noexcept {
    return a |= b;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  /// Calls f(i) for each member, in increasing order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        f(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::uint32_t> members() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&out](std::uint32_t i) { out.push_back(i); });
    return out;
  }

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ULL ^ universe_;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

/// Lexicographic order on the sorted member lists.
bool lex_less(const ElementSet& a, const ElementSet& b);

}  // namespace sigmaperm
