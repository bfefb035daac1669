#include <gtest/gtest.h>

#include "sigmaperm/catalog.hpp"
#include "sigmaperm/errors.hpp"
#include "support.hpp"

using namespace sigmaperm;

TEST(CatalogTest, NamedConstructors) {
  const std::pair<const char*, std::size_t> orders[] = {
      {"C1", 1},   {"C6", 6},   {"C12", 12}, {"D1", 2},  {"D2", 4},      {"D4", 8},
      {"D7", 14},  {"S1", 1},   {"S3", 6},   {"S4", 24}, {"S5", 120},    {"A3", 3},
      {"A4", 12},  {"A5", 60},  {"Q8", 8},   {"SL(2,3)", 24}, {"S3xC2", 12}, {"C2xC2xC2", 8}};
  for (const auto& [spec, order] : orders) {
    EXPECT_EQ(order, build_group(spec)->order()) << spec;
    EXPECT_EQ(order, expected_order(parse_group_spec(spec))) << spec;
  }
  EXPECT_EQ(4u, build_group("S4")->degree());
  EXPECT_EQ(5u, build_group("S3xC2")->degree());
}

TEST(CatalogTest, CyclicGroupsAreCyclic) {
  for (std::size_t n = 1; n <= 30; ++n) {
    const GroupPtr g = build_group("C" + std::to_string(n));
    std::size_t longest = 0;
    for (element_index x = 0; x < g->order(); ++x) longest = std::max(longest, g->element_order(x));
    EXPECT_EQ(n, longest);
  }
}

TEST(CatalogTest, ExplicitGenerators) {
  const GroupPtr g = build_group("perm[4]:(1 2 3 4);(1 3)");
  EXPECT_EQ(8u, g->order());
  EXPECT_EQ(0u, expected_order(parse_group_spec("perm[4]:(1 2)")));
  EXPECT_EQ(1u, build_group("perm[3]:")->order());
}

TEST(CatalogTest, SpecTextRoundTrips) {
  for (const char* text : {"S4", "C2xD4", "SL(2,3)xC2", "perm[4]:(1 2 3 4);(1 3)xC3", "Q8"}) {
    const GroupSpec spec = parse_group_spec(text);
    EXPECT_EQ(spec, parse_group_spec(spec.to_string())) << text;
  }
}

TEST(CatalogTest, RejectsBadSpecs) {
  EXPECT_THROW(parse_group_spec("X5"), ParseError);
  EXPECT_THROW(parse_group_spec("C"), ParseError);
  EXPECT_THROW(parse_group_spec("S4x"), ParseError);
  EXPECT_THROW(parse_group_spec("perm[3]:(1 5)"), ParseError);
  EXPECT_THROW(parse_group_spec(""), ParseError);
  EXPECT_THROW(build_group("S7"), LimitExceeded);
  EXPECT_THROW(build_group("C64xC2"), LimitExceeded);
}

TEST(CatalogTest, AbelianInvariants) {
  EXPECT_EQ((std::vector<std::uint64_t>{2, 4}), abelian_invariants(*build_group("C2xC4")));
  EXPECT_EQ((std::vector<std::uint64_t>{2, 3}), abelian_invariants(*build_group("C6")));
  EXPECT_EQ((std::vector<std::uint64_t>{2}), abelian_invariants(*build_group("S4")));
  EXPECT_TRUE(abelian_invariants(*build_group("A5")).empty());
  EXPECT_EQ((std::vector<std::uint64_t>{2, 2}), abelian_invariants(*build_group("Q8")));
  EXPECT_EQ((std::vector<std::uint64_t>{3}), abelian_invariants(*build_group("SL(2,3)")));
}

TEST(CatalogTest, CatalogIsSortedAndDeduplicated) {
  const auto catalog = build_catalog(24);
  ASSERT_FALSE(catalog.empty());
  std::set<Fingerprint> seen;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    EXPECT_LE(catalog[i].group->order(), 24u);
    if (i > 0) EXPECT_LE(catalog[i - 1].group->order(), catalog[i].group->order());
    EXPECT_TRUE(seen.insert(catalog[i].fingerprint).second) << catalog[i].label;
    EXPECT_EQ(catalog[i].lattice->size(), catalog[i].fingerprint.subgroup_count);
  }
  // The five groups of order 8 are told apart by their fingerprints.
  std::size_t order_eight = 0;
  for (const auto& e : catalog) order_eight += e.group->order() == 8;
  EXPECT_EQ(5u, order_eight);
  EXPECT_TRUE(build_catalog(0).empty());
}

TEST(CatalogTest, MakeEntry) {
  const CatalogEntry e = make_entry("D6");
  EXPECT_EQ("D6", e.label);
  EXPECT_EQ(12u, e.fingerprint.order);
  EXPECT_EQ(16u, e.lattice->size());
}
