#include "sigmaperm/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "sigmaperm/errors.hpp"

namespace sigmaperm {

Permutation Permutation::identity(std::size_t degree) {
  std::vector<point_type> images(degree);
  for (std::size_t i = 0; i < degree; ++i) {
    images[i] = static_cast<point_type>(i);
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<point_type> images) {
  std::vector<bool> seen(images.size(), false);
  for (point_type img : images) {
    if (img >= images.size() || seen[img]) {
      throw InvalidArgument("image array is not a bijection");
    }
    seen[img] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_based(std::span<const int> images) {
  std::vector<point_type> zero_based;
  zero_based.reserve(images.size());
  for (int img : images) {
    if (img < 1) {
      throw InvalidArgument("image array is not a bijection");
    }
    zero_based.push_back(static_cast<point_type>(img - 1));
  }
  return from_images(std::move(zero_based));
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out;
  out.reserve(images_.size());
  for (point_type img : images_) {
    out.push_back(static_cast<int>(img) + 1);
  }
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) {
      return false;
    }
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<point_type> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i]] = static_cast<point_type>(i);
  }
  return Permutation(std::move(inv));
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) {
      continue;
    }
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first) {
        out += ' ';
      }
      out += std::to_string(x + 1);
      first = false;
      x = images_[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw MismatchError("cannot compose permutations of degree " +
                        std::to_string(p.degree()) + " and " +
                        std::to_string(q.degree()));
  }
  std::vector<Permutation::point_type> images(p.degree());
  for (std::size_t x = 0; x < p.degree(); ++x) {
    images[x] = q[p[x]];
  }
  return Permutation::from_images(std::move(images));
}

namespace {

// Applies the cycle (c0 c1 ... ck) to `images` on the right.
void apply_cycle(std::vector<Permutation::point_type>& images,
                 const std::vector<std::size_t>& cycle) {
  if (cycle.size() < 2) {
    return;
  }
  std::vector<Permutation::point_type> step(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    step[i] = static_cast<Permutation::point_type>(i);
  }
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    step[cycle[i]] =
        static_cast<Permutation::point_type>(cycle[(i + 1) % cycle.size()]);
  }
  for (auto& img : images) {
    img = step[img];
  }
}

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  if (degree == 0 || degree > kMaxDegree) {
    throw InvalidArgument("degree " + std::to_string(degree) +
                          " outside 1.." + std::to_string(kMaxDegree));
  }
  auto images = Permutation::identity(degree).images();

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };

  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') {
      throw ParseError("expected '(' at offset " + std::to_string(pos) +
                       " in \"" + std::string(text) + "\"");
    }
    ++pos;
    std::vector<std::size_t> cycle;
    std::vector<bool> in_cycle(degree, false);
    for (;;) {
      skip_space();
      if (pos >= text.size()) {
        throw ParseError("unterminated cycle in \"" + std::string(text) + "\"");
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw ParseError("malformed token at offset " + std::to_string(pos) +
                         " in \"" + std::string(text) + "\"");
      }
      std::size_t value = 0;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > degree) {
          break;
        }
        ++pos;
      }
      if (value < 1 || value > degree) {
        throw ParseError("point " + std::to_string(value) +
                         " outside 1.." + std::to_string(degree));
      }
      if (in_cycle[value - 1]) {
        throw ParseError("point " + std::to_string(value) +
                         " repeated within one cycle");
      }
      in_cycle[value - 1] = true;
      cycle.push_back(value - 1);
    }
    apply_cycle(images, cycle);
    skip_space();
  }
  return Permutation::from_images(std::move(images));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto img : p.images()) {
    h ^= img;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace sigmaperm
