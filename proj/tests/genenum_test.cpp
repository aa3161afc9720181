#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "deptree/checkers.hpp"
#include "deptree/genenum.hpp"

namespace deptree {
namespace {

std::vector<int> heads_of(const DepTree& t) { return {t.heads().begin(), t.heads().end()}; }

long long power(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

TEST(Enumeration, CountsAreCayley) {
  for (int n = 1; n <= 8; ++n) {
    long long count = 0;
    for_each_tree(n, [&](const DepTree&) { ++count; });
    EXPECT_EQ(count, power(n, n - 1)) << "n=" << n;
  }
}

TEST(Enumeration, EachTreeOnce) {
  for (int n = 1; n <= 7; ++n) {
    std::set<std::vector<int>> seen;
    for_each_tree(n, [&](const DepTree& t) { EXPECT_TRUE(seen.insert(heads_of(t)).second); });
  }
}

TEST(Enumeration, ConstructiveMatchesBruteForceInOrder) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::vector<int>> a, b;
    for_each_tree_brute_force(n, [&](const DepTree& t) { a.push_back(heads_of(t)); });
    for_each_tree_constructive(n, [&](const DepTree& t) { b.push_back(heads_of(t)); });
    EXPECT_EQ(a, b) << "n=" << n;
  }
}

TEST(Enumeration, SizeGuards) {
  EXPECT_THROW(for_each_tree(9, [](const DepTree&) {}), TooLarge);
  EXPECT_THROW(for_each_tree(0, [](const DepTree&) {}), Error);
  EXPECT_EQ(enumerate_trees(3).size(), 9u);
}

TEST(RandomTree, DeterministicPerSeed) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) EXPECT_EQ(random_tree(9, seed), random_tree(9, seed));
  std::set<std::vector<int>> distinct;
  for (std::uint64_t seed = 0; seed < 20; ++seed) distinct.insert(heads_of(random_tree(9, seed)));
  EXPECT_GT(distinct.size(), 15u);
}

TEST(RandomTree, AlwaysValid) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 2000; ++i) {
    const int n = 1 + static_cast<int>(rng() % 30);
    EXPECT_EQ(random_tree(n, rng).size(), n);
  }
  EXPECT_THROW(random_tree(0, std::uint64_t{1}), Error);
}

TEST(RandomTree, UniformOverRootedLabeledTrees) {
  // 64 trees for n = 4; chi-square with 63 degrees of freedom must stay
  // within five standard deviations of its mean.
  constexpr int kSamples = 100000;
  std::mt19937_64 rng(2024);
  std::map<std::vector<int>, int> counts;
  for (int i = 0; i < kSamples; ++i) ++counts[heads_of(random_tree(4, rng))];
  ASSERT_EQ(counts.size(), 64u);
  const double expected = kSamples / 64.0;
  double chi2 = 0;
  for (const auto& [h, c] : counts) chi2 += (c - expected) * (c - expected) / expected;
  EXPECT_LT(chi2, 63 + 5 * std::sqrt(2.0 * 63));
}

TEST(RandomTree, Labeled) {
  std::mt19937_64 rng(4);
  const std::vector<std::string> alphabet{"x", "y"};
  const DepTree t = random_labeled_tree(6, rng, alphabet);
  ASSERT_TRUE(t.has_labels());
  for (Node i = 1; i <= 6; ++i) EXPECT_TRUE(t.label(i) == "x" || t.label(i) == "y");
}

TEST(Oracles, ProjectiveByCover) {
  EXPECT_TRUE(oracle_projective_by_cover(validate_tree({0, 1, 2})));
  EXPECT_FALSE(oracle_projective_by_cover(validate_tree({0, 4, 1, 1})));
  EXPECT_FALSE(oracle_projective_by_cover(validate_tree({2, 0, 1})));
}

TEST(Oracles, TwoPlanar) {
  EXPECT_TRUE(oracle_two_planar(validate_tree({0, 4, 1, 1})));
  EXPECT_FALSE(oracle_two_planar(validate_tree({0, 4, 5, 1, 2, 3})));
  EXPECT_THROW(oracle_two_planar(random_tree(13, std::uint64_t{1})), TooLarge);
}

TEST(Oracles, AgreeWithDecidersOnSevenNodes) {
  for_each_tree(7, [](const DepTree& t) {
    EXPECT_EQ(oracle_projective_by_cover(t), is_projective(t));
    EXPECT_EQ(oracle_two_planar(t), is_k_planar(t, 2));
  });
}

}  // namespace
}  // namespace deptree
