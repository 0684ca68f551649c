#include "fano95/families.hpp"
#include "golden.hpp"

#include <gtest/gtest.h>

#include <set>

namespace fano95 {
namespace {

TEST(Enumeration, NinetyFiveFamiliesUpToSixtySix) {
  const auto& all = standard_families();
  ASSERT_EQ(all.size(), 95u);
  int max_degree = 0;
  for (const auto& f : all) max_degree = std::max(max_degree, f.degree());
  EXPECT_EQ(max_degree, 66);
  EXPECT_EQ(enumerate_families(66).size(), 95u);
}

TEST(Enumeration, OrderAndNumbering) {
  const auto& all = standard_families();
  std::set<std::array<int, 4>> seen;
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_EQ(all[i].n, static_cast<int>(i) + 1);
    EXPECT_TRUE(seen.insert(all[i].weights.a()).second);
    EXPECT_EQ(all[i].kcube, minus_k_cubed(all[i].weights));
    EXPECT_TRUE(WeightSystem::isolated(all[i].weights.a()));
    if (i > 0) {
      const auto prev = std::pair(all[i - 1].degree(), all[i - 1].weights.a());
      const auto cur = std::pair(all[i].degree(), all[i].weights.a());
      EXPECT_LT(prev, cur);
    }
  }
  // Stable across runs.
  const auto again = enumerate_families();
  for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(again[i].weights, all[i].weights);
}

TEST(Enumeration, Anchors) {
  EXPECT_EQ(family(1).weights.a(), (std::array<int, 4>{1, 1, 1, 1}));
  EXPECT_EQ(family(46).weights.a(), (std::array<int, 4>{1, 3, 7, 10}));
  EXPECT_EQ(family(46).degree(), 21);
  EXPECT_EQ(family(91).weights.a(), (std::array<int, 4>{4, 5, 13, 22}));
  EXPECT_EQ(family(91).degree(), 44);
  const std::array<std::array<int, 4>, 6> twelve{{{1, 1, 4, 6}, {1, 2, 3, 6}, {1, 2, 4, 5},
                                                 {1, 3, 4, 4}, {2, 2, 3, 5}, {2, 3, 3, 4}}};
  for (int n = 14; n <= 19; ++n) {
    EXPECT_EQ(family(n).degree(), 12);
    EXPECT_EQ(family(n).weights.a(), twelve[static_cast<std::size_t>(n - 14)]);
  }
  EXPECT_THROW(family(0), std::out_of_range);
  EXPECT_THROW(family(96), std::out_of_range);
}

TEST(Enumeration, StatedWeightsAndDegrees) {
  for (const auto& row : golden::stated_families()) {
    const auto& f = family(row.n);
    EXPECT_EQ(f.weights.a(), row.a) << "n=" << row.n;
    EXPECT_EQ(f.degree(), row.degree) << "n=" << row.n;
  }
}

TEST(Enumeration, StatedAnticanonicalDegrees) {
  int checked = 0;
  for (const auto& row : golden::stated_families()) {
    if (row.kcube.empty()) continue;
    EXPECT_EQ(family(row.n).kcube.str(), row.kcube) << "n=" << row.n;
    ++checked;
  }
  EXPECT_GE(checked, 20);
}

TEST(EntryNumber, Lookup) {
  const auto& all = standard_families();
  EXPECT_EQ(entry_number(all, WeightSystem({1, 2, 2, 3})), 7);
  EXPECT_EQ(entry_number(all, WeightSystem({1, 1, 1, 1})), 1);
  EXPECT_EQ(entry_number(all, WeightSystem({1, 1, 1, 5})), std::nullopt);
  for (const auto& f : all) EXPECT_EQ(entry_number(all, f.weights), f.n);
}

TEST(EntryNumber, RejectedCandidateFailsAFilter) {
  const WeightSystem w({1, 1, 1, 5});
  // x4 of weight 5 has no monomial x4^k x_j of degree 8.
  EXPECT_FALSE(is_quasismooth_general(w));
  EXPECT_FALSE(make_family(w).has_value());
}

}  // namespace
}  // namespace fano95
