#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "sigmaperm/catalog.hpp"
#include "sigmaperm/errors.hpp"
#include "sigmaperm/lattice.hpp"
#include "sigmaperm/lattice_cache.hpp"
#include "support.hpp"

using namespace sigmaperm;

namespace {

std::set<oracle::Members> lattice_sets(const SubgroupLattice& lattice) {
  std::set<oracle::Members> out;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    out.insert(oracle::members_of(lattice, i));
  }
  return out;
}

}  // namespace

TEST(LatticeTest, SmallGroupsMatchSubsetSearch) {
  for (const char* spec : {"C1", "S3", "Q8", "D4", "C2xC2xC2", "C2xC4", "D5", "C9"}) {
    const auto& lattice = support::lattice(spec);
    EXPECT_EQ(oracle::subgroups_by_subsets(lattice.group()), lattice_sets(lattice)) << spec;
  }
  EXPECT_EQ(6u, support::lattice("S3").size());
  EXPECT_EQ(6u, support::lattice("Q8").size());
  EXPECT_EQ(10u, support::lattice("D4").size());
  EXPECT_EQ(1u, support::lattice("C1").size());
}

TEST(LatticeTest, LargerGroupsMatchTwoGeneratorSearch) {
  // Every subgroup of these groups is generated by two elements.
  const std::pair<const char*, std::size_t> expected[] = {
      {"A4", 10}, {"S4", 30}, {"A5", 59}, {"SL(2,3)", 15}, {"D6", 16}};
  for (const auto& [spec, count] : expected) {
    const auto& lattice = support::lattice(spec);
    EXPECT_EQ(count, lattice.size()) << spec;
    EXPECT_EQ(oracle::two_generated_subgroups(lattice.group()), lattice_sets(lattice)) << spec;
  }
}

TEST(LatticeTest, RandomClosuresAreFound) {
  std::mt19937 rng(2024);
  for (const char* spec : {"S4xC2", "C2xA4", "D4xC3", "A5"}) {
    const auto& lattice = support::lattice(spec);
    for (const auto& s : oracle::random_closures(lattice.group(), rng, 300)) {
      ElementSet set(lattice.group().order());
      for (auto x : s) set.set(x);
      EXPECT_TRUE(lattice.find(set).has_value()) << spec;
    }
  }
}

TEST(LatticeTest, OrderingAndIndexing) {
  const auto& lattice = support::lattice("S4");
  EXPECT_TRUE(lattice.at(lattice.trivial_index()).is_trivial());
  EXPECT_TRUE(lattice.at(lattice.whole_index()).is_whole());
  for (std::size_t i = 0; i + 1 < lattice.size(); ++i) {
    EXPECT_LE(lattice.at(i).order(), lattice.at(i + 1).order());
  }
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    EXPECT_EQ(i, lattice.index_of(lattice.at(i)));
    EXPECT_EQ(0u, 24 % lattice.at(i).order());
  }
  EXPECT_EQ(4u, lattice.normal_indices().size());
  EXPECT_EQ(lattice.normal_indices(), normal_subgroups(lattice));
}

TEST(LatticeTest, ClosedUnderMeetAndJoin) {
  for (const auto& entry : build_catalog(24)) {
    const auto& lattice = *entry.lattice;
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      for (std::size_t j = i; j < lattice.size(); ++j) {
        ASSERT_TRUE(lattice.find(intersect(lattice.at(i), lattice.at(j)).members()))
            << entry.label;
        ASSERT_TRUE(lattice.find(join(lattice.at(i), lattice.at(j)).members()))
            << entry.label;
      }
    }
  }
}

TEST(LatticeTest, NormalFlagsAndConjugacyClasses) {
  for (const char* spec : {"S4", "A5", "D6", "Q8xC3"}) {
    const auto& lattice = support::lattice(spec);
    const auto& g = lattice.group();
    std::size_t covered = 0;
    for (std::size_t c = 0; c < lattice.conjugacy_classes().size(); ++c) {
      const auto& cls = lattice.conjugacy_classes()[c];
      covered += cls.size();
      // The class is exactly the set of conjugates of its first member.
      std::set<oracle::Members> conjugates;
      const auto first = oracle::members_of(lattice, cls.front());
      for (element_index x = 0; x < g.order(); ++x) {
        conjugates.insert(oracle::conjugate(g, first, x));
      }
      std::set<oracle::Members> listed;
      for (auto i : cls) {
        listed.insert(oracle::members_of(lattice, i));
        EXPECT_EQ(c, lattice.class_of(i));
      }
      EXPECT_EQ(conjugates, listed) << spec;
    }
    EXPECT_EQ(lattice.size(), covered);
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      EXPECT_EQ(oracle::is_normal(g, oracle::members_of(lattice, i)), lattice.is_normal(i));
    }
  }
}

TEST(LatticeTest, SubgroupLimit) {
  try {
    all_subgroups(build_group("S4"), 10);
    FAIL() << "S4 has 30 subgroups";
  } catch (const LimitExceeded& e) {
    EXPECT_GE(e.partial_count(), 10u);
  }
}

TEST(LatticeTest, FromSubgroupsValidates) {
  const auto& lattice = support::lattice("S3");
  auto rebuilt = SubgroupLattice::from_subgroups(lattice.group_ptr(), lattice.subgroups());
  EXPECT_EQ(lattice.size(), rebuilt.size());
  std::vector<Subgroup> broken = lattice.subgroups();
  broken[1] = Subgroup(lattice.group_ptr(), product_set(lattice.at(1), lattice.at(2)), {});
  EXPECT_THROW(SubgroupLattice::from_subgroups(lattice.group_ptr(), broken), Error);
}

TEST(LatticeCacheTest, RoundTrips) {
  const auto& lattice = support::lattice("SL(2,3)");
  std::stringstream stream;
  write_lattice(stream, lattice);
  const SubgroupLattice back = read_lattice(stream, lattice.group_ptr());
  ASSERT_EQ(lattice.size(), back.size());
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    EXPECT_EQ(lattice.at(i), back.at(i));
    EXPECT_EQ(lattice.is_normal(i), back.is_normal(i));
  }
}

TEST(LatticeCacheTest, RejectsForeignOrCorruptFiles) {
  std::stringstream stream;
  write_lattice(stream, support::lattice("S3"));
  const std::string text = stream.str();

  std::stringstream other(text);
  EXPECT_THROW(read_lattice(other, build_group("C6")), ParseError);

  std::string truncated = text.substr(0, text.size() - 6);
  std::stringstream cut(truncated);
  EXPECT_THROW(read_lattice(cut, support::lattice("S3").group_ptr()), ParseError);

  std::stringstream garbage("not a lattice\n");
  EXPECT_THROW(read_lattice(garbage, support::lattice("S3").group_ptr()), ParseError);

  std::string flipped = text;
  const auto last = flipped.rfind("\n6 1");
  ASSERT_NE(std::string::npos, last);
  flipped[last + 3] = '0';  // whole group marked non-normal
  std::stringstream bad_flag(flipped);
  EXPECT_THROW(read_lattice(bad_flag, support::lattice("S3").group_ptr()), ParseError);
}

TEST(LatticeCacheTest, CachedSubgroupsWritesThenReads) {
  const auto dir = std::filesystem::temp_directory_path() / "sigmaperm-cache-test";
  std::filesystem::remove_all(dir);
  const GroupPtr g = build_group("D6");
  const SubgroupLattice first = cached_subgroups(g, dir);
  EXPECT_TRUE(std::filesystem::exists(lattice_cache_path(dir, *g)));
  const SubgroupLattice second = cached_subgroups(g, dir);
  EXPECT_EQ(first.size(), second.size());
  EXPECT_EQ(16u, second.size());
  std::filesystem::remove_all(dir);
}
