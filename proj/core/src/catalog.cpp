#include "sigmaperm/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <map>
#include <string>

#include "sigmaperm/errors.hpp"
#include "sigmaperm/primes.hpp"
#include "sigmaperm/quotient.hpp"

namespace sigmaperm {

namespace {

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t mul_saturating(std::size_t a, std::size_t b) {
  if (a != 0 && b > kSaturated / a) {
    return kSaturated;
  }
  return a * b;
}

std::size_t factorial_saturating(std::size_t n) {
  std::size_t out = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    out = mul_saturating(out, k);
  }
  return out;
}

std::size_t parse_number(std::string_view text, std::string_view context) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() ||
      value == 0) {
    throw ParseError("expected a positive integer in \"" + std::string(context) +
                     "\"");
  }
  return value;
}

// Splits on 'x' outside brackets and parentheses.
std::vector<std::string_view> split_factors(std::string_view text) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(' || c == '[') {
      ++depth;
    } else if (c == ')' || c == ']') {
      --depth;
    } else if (c == 'x' && depth == 0) {
      out.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(text.substr(start));
  return out;
}

GroupFactor parse_factor(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (text.empty()) {
    throw ParseError("empty factor in group spec");
  }
  GroupFactor f;
  if (text == "Q8") {
    f.kind = GroupFactor::Kind::Quaternion;
    f.parameter = 8;
    return f;
  }
  if (text == "SL(2,3)") {
    f.kind = GroupFactor::Kind::SL23;
    f.parameter = 24;
    return f;
  }
  if (text.starts_with("perm[")) {
    const auto close = text.find(']');
    if (close == std::string_view::npos || close + 1 >= text.size() ||
        text[close + 1] != ':') {
      throw ParseError("expected perm[n]:<cycles>;... in \"" + std::string(text) +
                       "\"");
    }
    f.kind = GroupFactor::Kind::Explicit;
    f.degree = parse_number(text.substr(5, close - 5), text);
    if (f.degree > kMaxDegree) {
      throw ParseError("degree " + std::to_string(f.degree) + " exceeds " +
                       std::to_string(kMaxDegree));
    }
    std::string_view rest = text.substr(close + 2);
    std::size_t start = 0;
    for (;;) {
      const auto semi = rest.find(';', start);
      const auto piece = rest.substr(start, semi - start);
      try {
        f.generators.push_back(parse_cycles(piece, f.degree));
      } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
      }
      if (semi == std::string_view::npos) {
        break;
      }
      start = semi + 1;
    }
    return f;
  }
  const char head = text.front();
  const std::string_view digits = text.substr(1);
  switch (head) {
    case 'C':
      f.kind = GroupFactor::Kind::Cyclic;
      break;
    case 'D':
      f.kind = GroupFactor::Kind::Dihedral;
      break;
    case 'S':
      f.kind = GroupFactor::Kind::Symmetric;
      break;
    case 'A':
      f.kind = GroupFactor::Kind::Alternating;
      break;
    default:
      throw ParseError("unknown group name \"" + std::string(text) + "\"");
  }
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError("unknown group name \"" + std::string(text) + "\"");
  }
  f.parameter = parse_number(digits, text);
  return f;
}

std::size_t factor_order(const GroupFactor& f) {
  switch (f.kind) {
    case GroupFactor::Kind::Cyclic:
      return f.parameter;
    case GroupFactor::Kind::Dihedral:
      return mul_saturating(2, f.parameter);
    case GroupFactor::Kind::Symmetric:
      return factorial_saturating(f.parameter);
    case GroupFactor::Kind::Alternating:
      return f.parameter < 2 ? 1 : factorial_saturating(f.parameter) / 2;
    case GroupFactor::Kind::Quaternion:
      return 8;
    case GroupFactor::Kind::SL23:
      return 24;
    case GroupFactor::Kind::Explicit:
      return 0;
  }
  return 0;
}

Permutation cycle_on(std::size_t degree, std::size_t offset, std::size_t length) {
  std::vector<Permutation::point_type> images(degree);
  for (std::size_t i = 0; i < degree; ++i) {
    images[i] = static_cast<Permutation::point_type>(i);
  }
  for (std::size_t i = 0; i < length; ++i) {
    images[offset + i] = static_cast<Permutation::point_type>(offset + (i + 1) % length);
  }
  return Permutation::from_images(std::move(images));
}

struct FactorGens {
  std::size_t degree = 1;
  std::vector<Permutation> gens;
};

FactorGens cyclic_gens(std::size_t n) {
  // One cycle per prime-power part of n keeps the degree small.
  std::vector<std::size_t> lengths;
  std::size_t m = n;
  for (std::size_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      std::size_t q = 1;
      while (m % p == 0) {
        m /= p;
        q *= p;
      }
      lengths.push_back(q);
    }
  }
  if (m > 1) {
    lengths.push_back(m);
  }
  FactorGens out;
  std::size_t degree = 0;
  for (auto l : lengths) {
    degree += l;
  }
  out.degree = std::max<std::size_t>(degree, 1);
  if (out.degree > kMaxDegree) {
    throw LimitExceeded("C" + std::to_string(n) + " needs degree " +
                            std::to_string(out.degree),
                        out.degree);
  }
  auto images = Permutation::identity(out.degree).images();
  std::size_t offset = 0;
  for (auto l : lengths) {
    for (std::size_t i = 0; i < l; ++i) {
      images[offset + i] = static_cast<Permutation::point_type>(offset + (i + 1) % l);
    }
    offset += l;
  }
  out.gens.push_back(Permutation::from_images(std::move(images)));
  return out;
}

void require_degree(std::size_t degree, std::string_view name) {
  if (degree > kMaxDegree) {
    throw LimitExceeded(std::string(name) + " needs degree " +
                            std::to_string(degree) + " > " +
                            std::to_string(kMaxDegree),
                        degree);
  }
}

FactorGens dihedral_gens(std::size_t n) {
  FactorGens out;
  if (n == 1) {
    out.degree = 2;
    out.gens.push_back(parse_cycles("(1 2)", 2));
    return out;
  }
  if (n == 2) {
    out.degree = 4;
    out.gens.push_back(parse_cycles("(1 2)(3 4)", 4));
    out.gens.push_back(parse_cycles("(1 3)(2 4)", 4));
    return out;
  }
  require_degree(n, "D" + std::to_string(n));
  out.degree = n;
  out.gens.push_back(cycle_on(n, 0, n));
  // Reflection fixing point 1: i -> n + 2 - i (1-based, mod n).
  std::vector<Permutation::point_type> images(n);
  for (std::size_t i = 0; i < n; ++i) {
    images[i] = static_cast<Permutation::point_type>((n - i) % n);
  }
  out.gens.push_back(Permutation::from_images(std::move(images)));
  return out;
}

FactorGens symmetric_gens(std::size_t n) {
  require_degree(n, "S" + std::to_string(n));
  FactorGens out;
  out.degree = n;
  if (n == 1) {
    out.gens.push_back(Permutation::identity(1));
    return out;
  }
  out.gens.push_back(parse_cycles("(1 2)", n));
  if (n > 2) {
    out.gens.push_back(cycle_on(n, 0, n));
  }
  return out;
}

FactorGens alternating_gens(std::size_t n) {
  require_degree(n, "A" + std::to_string(n));
  FactorGens out;
  out.degree = n;
  if (n < 3) {
    out.gens.push_back(Permutation::identity(n));
    return out;
  }
  for (std::size_t i = 3; i <= n; ++i) {
    out.gens.push_back(parse_cycles("(1 2 " + std::to_string(i) + ")", n));
  }
  return out;
}

FactorGens quaternion_gens() {
  // Elements are (sign, unit) with unit in {1, i, j, k}; index = 2*unit + sign.
  // Unit products: table[a][b] = (unit, sign flip).
  static constexpr int unit[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int flip[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  auto right_mult = [](int by) {
    std::vector<Permutation::point_type> images(8);
    for (int u = 0; u < 4; ++u) {
      for (int s = 0; s < 2; ++s) {
        const int v = unit[u][by];
        const int t = s ^ flip[u][by];
        images[static_cast<std::size_t>(2 * u + s)] =
            static_cast<Permutation::point_type>(2 * v + t);
      }
    }
    return Permutation::from_images(std::move(images));
  };
  FactorGens out;
  out.degree = 8;
  out.gens.push_back(right_mult(1));
  out.gens.push_back(right_mult(2));
  return out;
}

FactorGens sl23_gens() {
  // Row vectors (a, b) over GF(3), nonzero, acted on by v -> v M.
  std::vector<std::pair<int, int>> points;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (a != 0 || b != 0) {
        points.emplace_back(a, b);
      }
    }
  }
  auto act = [&](int m00, int m01, int m10, int m11) {
    std::vector<Permutation::point_type> images(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto [a, b] = points[i];
      const std::pair<int, int> w{(a * m00 + b * m10) % 3, (a * m01 + b * m11) % 3};
      const auto it = std::find(points.begin(), points.end(), w);
      images[i] = static_cast<Permutation::point_type>(it - points.begin());
    }
    return Permutation::from_images(std::move(images));
  };
  FactorGens out;
  out.degree = points.size();
  out.gens.push_back(act(1, 1, 0, 1));
  out.gens.push_back(act(1, 0, 1, 1));
  return out;
}

FactorGens factor_gens(const GroupFactor& f) {
  switch (f.kind) {
    case GroupFactor::Kind::Cyclic:
      return cyclic_gens(f.parameter);
    case GroupFactor::Kind::Dihedral:
      return dihedral_gens(f.parameter);
    case GroupFactor::Kind::Symmetric:
      return symmetric_gens(f.parameter);
    case GroupFactor::Kind::Alternating:
      return alternating_gens(f.parameter);
    case GroupFactor::Kind::Quaternion:
      return quaternion_gens();
    case GroupFactor::Kind::SL23:
      return sl23_gens();
    case GroupFactor::Kind::Explicit: {
      FactorGens out;
      out.degree = f.degree;
      out.gens = f.generators;
      if (out.gens.empty()) {
        out.gens.push_back(Permutation::identity(f.degree));
      }
      return out;
    }
  }
  throw InvalidArgument("unknown factor kind");
}

std::string factor_to_string(const GroupFactor& f) {
  switch (f.kind) {
    case GroupFactor::Kind::Cyclic:
      return "C" + std::to_string(f.parameter);
    case GroupFactor::Kind::Dihedral:
      return "D" + std::to_string(f.parameter);
    case GroupFactor::Kind::Symmetric:
      return "S" + std::to_string(f.parameter);
    case GroupFactor::Kind::Alternating:
      return "A" + std::to_string(f.parameter);
    case GroupFactor::Kind::Quaternion:
      return "Q8";
    case GroupFactor::Kind::SL23:
      return "SL(2,3)";
    case GroupFactor::Kind::Explicit: {
      std::string out = "perm[" + std::to_string(f.degree) + "]:";
      for (std::size_t i = 0; i < f.generators.size(); ++i) {
        if (i > 0) {
          out += ';';
        }
        out += f.generators[i].to_cycles();
      }
      return out;
    }
  }
  return "?";
}

}  // namespace

std::string GroupSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) {
      out += 'x';
    }
    out += factor_to_string(factors[i]);
  }
  return out;
}

GroupSpec parse_group_spec(std::string_view text) {
  GroupSpec spec;
  for (auto piece : split_factors(text)) {
    spec.factors.push_back(parse_factor(piece));
  }
  return spec;
}

std::size_t expected_order(const GroupSpec& spec) {
  std::size_t order = 1;
  for (const auto& f : spec.factors) {
    const std::size_t k = factor_order(f);
    if (k == 0) {
      return 0;
    }
    order = mul_saturating(order, k);
  }
  return order;
}

GroupPtr build_group(const GroupSpec& spec) {
  if (spec.factors.empty()) {
    throw InvalidArgument("group spec has no factors");
  }
  const std::size_t cap = order_cap();
  const std::size_t expected = expected_order(spec);
  if (expected > cap) {
    throw LimitExceeded("order " +
                            (expected == kSaturated ? std::string("(overflow)")
                                                    : std::to_string(expected)) +
                            " of " + spec.to_string() + " exceeds cap " +
                            std::to_string(cap),
                        0);
  }

  std::vector<FactorGens> parts;
  std::size_t degree = 0;
  for (const auto& f : spec.factors) {
    parts.push_back(factor_gens(f));
    degree += parts.back().degree;
  }
  require_degree(degree, spec.to_string());

  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (const auto& part : parts) {
    for (const auto& g : part.gens) {
      auto images = Permutation::identity(degree).images();
      for (std::size_t i = 0; i < part.degree; ++i) {
        images[offset + i] = static_cast<Permutation::point_type>(offset + g[i]);
      }
      gens.push_back(Permutation::from_images(std::move(images)));
    }
    offset += part.degree;
  }

  GroupPtr group = generate_closure(gens, cap);
  if (expected != 0 && group->order() != expected) {
    throw InvariantViolation(spec.to_string() + " has order " +
                             std::to_string(group->order()) + ", expected " +
                             std::to_string(expected));
  }
  return group;
}

GroupPtr build_group(std::string_view text) {
  return build_group(parse_group_spec(text));
}

std::vector<std::uint64_t> abelian_invariants(const FiniteGroup& group) {
  // Work with a shared_ptr alias; subgroups need a GroupPtr.
  GroupPtr g(std::shared_ptr<const FiniteGroup>{}, &group);
  std::vector<element_index> commutators;
  const auto gens = group.generators();
  for (auto a : gens) {
    for (auto b : gens) {
      const element_index c =
          group.mul(group.mul(group.inv(a), group.inv(b)), group.mul(a, b));
      if (c != FiniteGroup::identity()) {
        commutators.push_back(c);
      }
    }
  }
  const Subgroup derived =
      normal_closure(Subgroup::generated_by(g, commutators));

  // Element orders of G/G'.
  std::vector<std::size_t> orders;
  if (derived.is_trivial()) {
    for (element_index x = 0; x < group.order(); ++x) {
      orders.push_back(group.element_order(x));
    }
  } else {
    const Quotient q = quotient(derived);
    for (element_index x = 0; x < q.group()->order(); ++x) {
      orders.push_back(q.group()->element_order(x));
    }
  }
  const std::size_t m = orders.size();

  std::vector<std::uint64_t> out;
  const PrimeSet primes = prime_support(m);
  for (auto p : primes.primes()) {
    // c_k = #{x : x^(p^k) = 1} = p^(sum_i min(k, e_i)).
    std::vector<std::size_t> log_counts{0};
    std::uint64_t pk = 1;
    for (;;) {
      pk *= p;
      std::size_t count = 0;
      for (auto o : orders) {
        if (pk % o == 0) {
          ++count;
        }
      }
      std::size_t e = 0;
      while (count > 1) {
        count /= p;
        ++e;
      }
      if (e == log_counts.back()) {
        break;
      }
      log_counts.push_back(e);
    }
    // at_least[k] = #{i : e_i >= k}
    std::vector<std::size_t> at_least;
    for (std::size_t k = 1; k < log_counts.size(); ++k) {
      at_least.push_back(log_counts[k] - log_counts[k - 1]);
    }
    for (std::size_t k = 0; k < at_least.size(); ++k) {
      const std::size_t next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
      std::uint64_t power = 1;
      for (std::size_t j = 0; j <= k; ++j) {
        power *= p;
      }
      for (std::size_t c = next; c < at_least[k]; ++c) {
        out.push_back(power);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CatalogEntry make_entry(std::string_view spec) {
  CatalogEntry entry;
  const GroupSpec parsed = parse_group_spec(spec);
  entry.label = parsed.to_string();
  entry.group = build_group(parsed);
  entry.lattice = std::make_shared<const SubgroupLattice>(all_subgroups(entry.group));
  entry.fingerprint = Fingerprint{entry.group->order(),
                                  abelian_invariants(*entry.group),
                                  entry.lattice->size()};
  return entry;
}

std::vector<CatalogEntry> build_catalog(std::size_t max_order) {
  std::vector<CatalogEntry> catalog;
  if (max_order == 0) {
    return catalog;
  }
  std::map<std::pair<std::size_t, std::vector<std::uint64_t>>, std::vector<std::size_t>>
      by_cheap_key;

  auto try_add = [&](const GroupSpec& spec) -> bool {
    const std::size_t order = expected_order(spec);
    if (order == 0 || order > max_order || order > order_cap()) {
      return false;
    }
    GroupPtr group;
    try {
      group = build_group(spec);
    } catch (const LimitExceeded&) {
      return false;  // degree cap
    }
    auto abelian = abelian_invariants(*group);
    auto& bucket = by_cheap_key[{order, abelian}];
    auto lattice = std::make_shared<const SubgroupLattice>(all_subgroups(group));
    for (auto i : bucket) {
      if (catalog[i].fingerprint.subgroup_count == lattice->size()) {
        return false;
      }
    }
    bucket.push_back(catalog.size());
    catalog.push_back(CatalogEntry{spec.to_string(), group, std::move(lattice),
                                   Fingerprint{order, std::move(abelian), 0}});
    catalog.back().fingerprint.subgroup_count = catalog.back().lattice->size();
    return true;
  };

  auto named = [](GroupFactor::Kind kind, std::size_t n) {
    GroupFactor f;
    f.kind = kind;
    f.parameter = n;
    return f;
  };

  std::vector<GroupFactor> named_factors;
  for (std::size_t n = 1; n <= max_order; ++n) {
    named_factors.push_back(named(GroupFactor::Kind::Cyclic, n));
  }
  for (std::size_t n = 1; 2 * n <= max_order; ++n) {
    named_factors.push_back(named(GroupFactor::Kind::Dihedral, n));
  }
  for (std::size_t n = 1; factorial_saturating(n) <= max_order; ++n) {
    named_factors.push_back(named(GroupFactor::Kind::Symmetric, n));
  }
  for (std::size_t n = 1; n < 3 || factorial_saturating(n) / 2 <= max_order; ++n) {
    named_factors.push_back(named(GroupFactor::Kind::Alternating, n));
  }
  named_factors.push_back(named(GroupFactor::Kind::Quaternion, 8));
  named_factors.push_back(named(GroupFactor::Kind::SL23, 24));

  std::vector<GroupFactor> nontrivial_named;
  for (const auto& f : named_factors) {
    if (try_add(GroupSpec{{f}}) && factor_order(f) > 1) {
      nontrivial_named.push_back(f);
    }
  }

  // Direct products: extend each entry by one named factor until the catalog
  // stops growing. Factors are kept in non-decreasing catalog position.
  std::size_t frontier = 0;
  while (frontier < catalog.size()) {
    const std::size_t end = catalog.size();
    for (std::size_t i = frontier; i < end; ++i) {
      if (catalog[i].group->order() == 1) {
        continue;
      }
      const GroupSpec base = parse_group_spec(catalog[i].label);
      for (const auto& f : nontrivial_named) {
        if (mul_saturating(catalog[i].group->order(), factor_order(f)) > max_order) {
          continue;
        }
        GroupSpec product = base;
        product.factors.push_back(f);
        try_add(product);
      }
    }
    frontier = end;
  }

  std::stable_sort(catalog.begin(), catalog.end(),
                   [](const CatalogEntry& a, const CatalogEntry& b) {
                     return a.group->order() < b.group->order();
                   });
  return catalog;
}

}  // namespace sigmaperm
