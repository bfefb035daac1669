#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "sigmaperm/catalog.hpp"
#include "sigmaperm/errors.hpp"
#include "sigmaperm/pi.hpp"
#include "sigmaperm/primes.hpp"
#include "sigmaperm/quotient.hpp"
#include "support.hpp"

using namespace sigmaperm;

namespace {

std::vector<std::size_t> orders(const SubgroupLattice& lattice,
                                const std::vector<std::size_t>& indices) {
  std::vector<std::size_t> out;
  for (auto i : indices) out.push_back(lattice.at(i).order());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PrimeSet> nonempty_subsets(const PrimeSet& primes) {
  std::vector<PrimeSet> out;
  const auto& list = primes.primes();
  for (std::size_t mask = 1; mask < (std::size_t{1} << list.size()); ++mask) {
    std::vector<std::uint64_t> pick;
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (mask >> i & 1) pick.push_back(list[i]);
    }
    out.emplace_back(pick);
  }
  return out;
}

}  // namespace

TEST(PrimesTest, Support) {
  EXPECT_TRUE(prime_support(1).empty());
  EXPECT_EQ((PrimeSet{2, 3}), prime_support(24));
  EXPECT_EQ((PrimeSet{2, 3, 5}), prime_support(60));
  EXPECT_EQ((PrimeSet{97}), prime_support(97));
  EXPECT_THROW(prime_support(0), InvalidArgument);
}

TEST(PrimesTest, PiNumbers) {
  EXPECT_TRUE(is_pi_number(1, PrimeSet{}));
  EXPECT_TRUE(is_pi_number(1, PrimeSet{7}));
  EXPECT_TRUE(is_pi_number(12, PrimeSet{2, 3}));
  EXPECT_FALSE(is_pi_number(10, PrimeSet{2, 3}));
  EXPECT_EQ(8u, pi_part(24, PrimeSet{2}));
  EXPECT_EQ(15u, pi_part(60, PrimeSet{3, 5}));
}

TEST(PrimesTest, SetAlgebra) {
  const PrimeSet a{2, 5}, b{3, 5};
  EXPECT_EQ((PrimeSet{5}), a.intersection(b));
  EXPECT_EQ((PrimeSet{2, 3, 5}), a.union_with(b));
  EXPECT_EQ((PrimeSet{2}), a.difference(b));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_TRUE((PrimeSet{5}).is_subset_of(a));
  EXPECT_EQ("2,5", a.to_string());
  EXPECT_EQ((PrimeSet{2, 5}), (PrimeSet{5, 2}));
  EXPECT_THROW((PrimeSet{4}), InvalidArgument);
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_FALSE(is_prime(91));
}

TEST(PiMachineryTest, PiMaximalExamples) {
  const auto& s3 = support::lattice("S3");
  EXPECT_EQ((std::vector<std::size_t>{2, 2, 2}), orders(s3, pi_maximal_subgroups(s3, {2})));

  const auto& a5 = support::lattice("A5");
  EXPECT_EQ((std::vector<std::size_t>{4, 4, 4, 4, 4, 10, 10, 10, 10, 10, 10}),
            orders(a5, pi_maximal_subgroups(a5, {2, 5})));

  for (const char* spec : {"S4", "C6", "Q8"}) {
    const auto& l = support::lattice(spec);
    EXPECT_EQ((std::vector<std::size_t>{l.whole_index()}),
              pi_maximal_subgroups(l, {2, 3, 5}));
  }
}

TEST(PiMachineryTest, SylowAndHallExamples) {
  const auto& s4 = support::lattice("S4");
  EXPECT_EQ((std::vector<std::size_t>{8, 8, 8}), orders(s4, sylow_subgroups(s4, 2)));
  EXPECT_EQ((std::vector<std::size_t>{1}), orders(s4, sylow_subgroups(s4, 5)));
  EXPECT_TRUE(hall_subgroups(support::lattice("A5"), {2, 5}).empty());
  EXPECT_EQ((std::vector<std::size_t>{s4.whole_index()}), hall_subgroups(s4, {2, 3, 7}));
  EXPECT_EQ((std::vector<std::size_t>{12, 12, 12, 12, 12}),
            orders(support::lattice("A5"), hall_subgroups(support::lattice("A5"), {2, 3})));
}

TEST(PiMachineryTest, RadicalsAndResiduals) {
  const auto& s4 = support::lattice("S4");
  EXPECT_EQ(4u, s4.at(o_pi(s4, {2})).order());
  EXPECT_EQ(12u, s4.at(o_upper_pi(s4, {2})).order());
  EXPECT_EQ(s4.whole_index(), o_pi(s4, {2, 3}));
  EXPECT_EQ(s4.trivial_index(), o_upper_pi(s4, {2, 3}));
  EXPECT_EQ(s4.trivial_index(), o_pi(s4, {3}));
  EXPECT_EQ(s4.whole_index(), o_upper_pi(s4, {3}));
}

TEST(PiMachineryTest, ResidualIsLeastNormalWithPiQuotient) {
  for (const auto& entry : build_catalog(48)) {
    const auto& l = *entry.lattice;
    for (const auto& pi : nonempty_subsets(group_primes(*entry.group))) {
      const auto upper = o_upper_pi(l, pi);
      const auto lower = o_pi(l, pi);
      EXPECT_EQ(oracle::o_pi(l, pi), lower) << entry.label;
      EXPECT_TRUE(l.is_normal(upper));
      EXPECT_TRUE(is_pi_number(entry.group->order() / l.at(upper).order(), pi));
      for (auto n : l.normal_indices()) {
        if (is_pi_number(entry.group->order() / l.at(n).order(), pi)) {
          EXPECT_TRUE(l.contains(n, upper)) << entry.label << " pi " << pi.to_string();
        }
      }
    }
  }
}

TEST(PiMachineryTest, ProjectorExamples) {
  const auto& s3 = support::lattice("S3");
  EXPECT_EQ((std::vector<std::size_t>{support::index(s3, "(1 2 3)")}),
            gpi_projectors(s3, {3}));
  const auto& a5 = support::lattice("A5");
  EXPECT_EQ(pi_maximal_subgroups(a5, {2, 5}), gpi_projectors(a5, {2, 5}));
  EXPECT_EQ(11u, gpi_projectors(a5, {2, 5}).size());
  EXPECT_EQ((std::vector<std::size_t>{a5.whole_index()}), gpi_projectors(a5, {2, 3, 5}));
}

TEST(PiMachineryTest, ProjectorsMatchQuotientDefinition) {
  for (const auto& entry : build_catalog(60)) {
    const auto& l = *entry.lattice;
    for (const auto& pi : nonempty_subsets(group_primes(*entry.group))) {
      const auto projectors = gpi_projectors(l, pi);
      ASSERT_EQ(oracle::projectors_by_quotients(l, pi), projectors)
          << entry.label << " pi " << pi.to_string();

      const auto maximal = pi_maximal_subgroups(l, pi);
      EXPECT_EQ(oracle::pi_maximal(l, pi), maximal);
      for (auto p : projectors) {
        EXPECT_TRUE(std::binary_search(maximal.begin(), maximal.end(), p));
        for (auto c : l.conjugacy_classes()[l.class_of(p)]) {
          EXPECT_TRUE(std::find(projectors.begin(), projectors.end(), c) != projectors.end());
        }
      }
      for (auto h : hall_subgroups(l, pi)) {
        EXPECT_TRUE(std::binary_search(maximal.begin(), maximal.end(), h));
      }
      if (has_D_pi_property(l, pi)) {
        EXPECT_EQ(hall_subgroups(l, pi), projectors) << entry.label;
      }
    }
  }
}

TEST(PiMachineryTest, ProjectorImagesAreQuotientProjectors) {
  for (const auto& entry : build_catalog(60)) {
    const auto& l = *entry.lattice;
    for (auto n : l.normal_indices()) {
      if (n == l.trivial_index()) continue;
      const Quotient q = quotient(l.at(n));
      const auto ql = all_subgroups(q.group());
      for (const auto& pi : nonempty_subsets(group_primes(*entry.group))) {
        std::set<std::size_t> images;
        for (auto p : gpi_projectors(l, pi)) {
          images.insert(ql.index_of(q.image(l.at(p))));
        }
        const auto expected = gpi_projectors(ql, pi);
        EXPECT_EQ(std::set<std::size_t>(expected.begin(), expected.end()), images)
            << entry.label << " mod " << l.at(n).describe() << " pi " << pi.to_string();
      }
    }
  }
}

TEST(PiMachineryTest, DPiProperty) {
  for (const char* spec : {"S3", "S4", "A5", "D6", "SL(2,3)"}) {
    const auto& l = support::lattice(spec);
    const PrimeSet primes = group_primes(l.group());
    for (auto p : primes.primes()) {
      EXPECT_TRUE(has_D_pi_property(l, PrimeSet{p})) << spec;
    }
  }
  EXPECT_FALSE(has_D_pi_property(support::lattice("A5"), {2, 5}));
  EXPECT_TRUE(has_D_pi_property(support::lattice("S3"), {2, 3}));
  // A5 has Hall {2,3}-subgroups (the A4s), conjugate, but S3 lies in none.
  EXPECT_FALSE(has_D_pi_property(support::lattice("A5"), {2, 3}));
  EXPECT_FALSE(has_D_pi_property(support::lattice("A5"), {3, 5}));
}

TEST(PiMachineryTest, SubgroupRelativeVersions) {
  const auto& s4 = support::lattice("S4");
  const auto a4 = support::index(s4, "(1 2 3);(1 2)(3 4)");
  EXPECT_EQ((std::vector<std::size_t>{4}), orders(s4, sylow_subgroups(s4, 2, a4)));
  EXPECT_EQ(4u, s4.at(o_pi(s4, {2}, a4)).order());
  EXPECT_EQ(4u, s4.at(o_upper_pi(s4, {3}, a4)).order());
  EXPECT_EQ(a4, o_upper_pi(s4, {2}, a4));
  EXPECT_EQ(4u, hall_subgroups(s4, {3}, a4).size());
  EXPECT_TRUE(has_D_pi_property(s4, {2}, a4));
  for (auto i : pi_subgroups(s4, {2}, a4)) {
    EXPECT_TRUE(s4.contains(a4, i));
    EXPECT_TRUE(is_pi_group(s4.at(i), {2}));
  }
}
