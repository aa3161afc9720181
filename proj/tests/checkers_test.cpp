#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "deptree/checkers.hpp"
#include "deptree/genenum.hpp"

namespace deptree {
namespace {

DepTree tree(std::vector<int> heads) { return validate_tree(std::move(heads)); }

// Quantified interleaving condition over explicit quadruples i<j<k<l.
bool brute_force_well_nested(const DepTree& t) {
  const int n = t.size();
  const auto proj = all_projections(t);
  auto in = [&](Node x, Node v) { return std::binary_search(proj[x].begin(), proj[x].end(), v); };
  for (Node a = 1; a <= n; ++a)
    for (Node b = 1; b <= n; ++b) {
      if (a == b) continue;
      auto only_a = [&](Node v) { return in(a, v) && !in(b, v); };
      auto only_b = [&](Node v) { return in(b, v) && !in(a, v); };
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (int k = j + 1; k <= n; ++k)
            for (int l = k + 1; l <= n; ++l)
              if (only_a(i) && only_b(j) && only_a(k) && only_b(l)) return false;
    }
  return true;
}

// Tries every assignment of arcs to k pages.
bool brute_force_k_planar(const DepTree& t, int k) {
  const auto arcs = t.arcs();
  const std::size_t m = arcs.size();
  std::vector<int> page(m, 0);
  for (;;) {
    bool ok = true;
    for (std::size_t a = 0; a < m && ok; ++a)
      for (std::size_t b = a + 1; b < m && ok; ++b)
        if (page[a] == page[b] && arcs_cross(arcs[a], arcs[b])) ok = false;
    if (ok) return true;
    std::size_t i = 0;
    while (i < m && page[i] == k - 1) page[i++] = 0;
    if (i == m) return false;
    ++page[i];
  }
}

// Some single node touches every arc crossing e, for each e.
bool brute_force_one_endpoint_crossing(const DepTree& t) {
  const auto arcs = t.arcs();
  for (const Arc& e : arcs) {
    std::vector<Arc> crossers;
    for (const Arc& f : arcs)
      if (arcs_cross(e, f)) crossers.push_back(f);
    if (crossers.empty()) continue;
    bool any = false;
    for (Node v = 1; v <= t.size() && !any; ++v)
      any = std::all_of(crossers.begin(), crossers.end(), [v](const Arc& f) { return f.head == v || f.dep == v; });
    if (!any) return false;
  }
  return true;
}

int max_clique(const DepTree& t) {
  const auto arcs = t.arcs();
  const std::size_t m = arcs.size();
  int best = m ? 1 : 0;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    bool clique = true;
    for (std::size_t a = 0; a < m && clique; ++a)
      for (std::size_t b = a + 1; b < m && clique; ++b)
        if ((mask >> a & 1u) && (mask >> b & 1u) && !arcs_cross(arcs[a], arcs[b])) clique = false;
    if (clique) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

TEST(Projective, Examples) {
  EXPECT_TRUE(is_projective(tree({0, 1, 2})));
  EXPECT_FALSE(is_projective(tree({0, 4, 1, 1})));
  EXPECT_TRUE(is_projective(tree({0})));
}

TEST(Planar1, Examples) {
  EXPECT_TRUE(is_planar1(tree({0, 1, 2})));
  EXPECT_FALSE(is_planar1(tree({0, 4, 1, 1})));
  EXPECT_TRUE(is_planar1(tree({0, 3, 1})));
}

TEST(RootCovered, Examples) {
  EXPECT_FALSE(is_root_covered(tree({0, 1, 2})));
  EXPECT_FALSE(is_root_covered(tree({2, 0, 2})));
  EXPECT_TRUE(is_root_covered(tree({2, 0, 1})));
}

TEST(RootCovered, PlanarButNotProjectiveExactlyWhenRootCovered) {
  const DepTree t = tree({2, 0, 1});
  EXPECT_TRUE(is_planar1(t));
  EXPECT_FALSE(is_projective(t));
}

TEST(GapDegree, Examples) {
  EXPECT_EQ(gap_degree(tree({0, 1, 2, 3})), 0);
  const DepTree t = tree({0, 4, 1, 1});
  EXPECT_EQ(gap_degree_node(t, 4), 1);
  EXPECT_EQ(gap_degree(t), 1);
}

TEST(GapDegree, TwoGapNode) {
  // Node 1 has the projection {1,2,3,6,7,8,12,13,14}; node 4 is the root.
  std::vector<int> heads(14, 4);
  heads[4 - 1] = 0;
  for (int v : {2, 3, 6, 7, 8, 12, 13, 14}) heads[v - 1] = 1;
  const DepTree t = tree(heads);
  EXPECT_EQ(projection(t, 1), (std::vector<Node>{1, 2, 3, 6, 7, 8, 12, 13, 14}));
  EXPECT_EQ(gap_degree_node(t, 1), 2);
  EXPECT_EQ(gap_degree(t), 2);
}

TEST(WellNested, Examples) {
  EXPECT_TRUE(is_well_nested(tree({0, 4, 1, 1})));
  const DepTree ill = tree({5, 5, 1, 2, 0});
  EXPECT_FALSE(is_well_nested(ill));
  const auto w = find_interleaving(ill);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, (std::pair<Node, Node>{1, 2}));
  EXPECT_TRUE(is_well_nested(tree({0, 1, 2, 3})));
}

TEST(WellNested, MatchesQuadrupleOracle) {
  for (int n = 1; n <= 6; ++n)
    for_each_tree(n, [](const DepTree& t) { EXPECT_EQ(is_well_nested(t), brute_force_well_nested(t)) << heads_to_string(t); });
}

TEST(WG, Examples) {
  EXPECT_TRUE(in_wg(tree({0, 1, 2}), 0));
  const DepTree t = tree({0, 4, 1, 1});
  EXPECT_FALSE(in_wg(t, 0));
  EXPECT_TRUE(in_wg(t, 1));
  EXPECT_EQ(wg_level(t), 1);
  const DepTree ill = tree({5, 5, 1, 2, 0});
  for (int k = 0; k <= 5; ++k) EXPECT_FALSE(in_wg(ill, k));
  EXPECT_EQ(wg_level(ill), std::nullopt);
}

TEST(GapInheritance, Examples) {
  EXPECT_TRUE(gap_inheritance(tree({0, 4, 1, 1}), 4).empty());
  EXPECT_EQ(gap_inheritance(tree({0, 1, 2, 1, 3, 2}), 2), (std::vector<Node>{3}));
  const DepTree chain = tree({0, 1, 2, 3});
  for (Node p = 1; p <= 4; ++p) EXPECT_TRUE(gap_inheritance(chain, p).empty());
}

TEST(GapInheritance, MultipleGapsIsAnError) {
  const DepTree t = tree({2, 0, 1, 2, 1});  // proj(1) = {1,3,5}
  EXPECT_EQ(gap_degree_node(t, 1), 2);
  EXPECT_THROW(gap_inheritance(t, 1), MultipleGaps);
}

TEST(GapMinding, Examples) {
  EXPECT_TRUE(is_gap_minding(tree({0, 4, 1, 1})));
  EXPECT_TRUE(is_mild_plus_one_inherit(tree({0, 4, 1, 1})));
  const DepTree inherit = tree({0, 1, 2, 1, 3, 2});
  EXPECT_FALSE(is_gap_minding(inherit));
  EXPECT_TRUE(is_mild_plus_one_inherit(inherit));
  EXPECT_TRUE(is_gap_minding(tree({0, 1, 1, 2})));
  EXPECT_TRUE(is_mild_plus_one_inherit(tree({0, 1, 1, 2})));
}

TEST(GapMinding, FalseOutsideWG1) {
  const DepTree ill = tree({5, 5, 1, 2, 0});
  EXPECT_FALSE(is_gap_minding(ill));
  EXPECT_FALSE(is_mild_plus_one_inherit(ill));
  EXPECT_FALSE(is_head_split_wg1(ill));
}

TEST(HeadSplit, Examples) {
  EXPECT_TRUE(is_head_split_wg1(tree({0, 1, 2, 2})));
  EXPECT_TRUE(is_head_split_wg1(tree({0, 4, 1, 1})));
}

TEST(HeadSplit, FirstViolationInEnumerationOrder) {
  std::optional<std::vector<int>> first;
  for_each_tree(6, [&](const DepTree& t) {
    if (!first && in_wg(t, 1) && !is_head_split_wg1(t)) first = std::vector<int>(t.heads().begin(), t.heads().end());
  });
  ASSERT_TRUE(first.has_value());
  EXPECT_EQ(*first, (std::vector<int>{0, 3, 1, 2, 1, 3}));

  // proj(2) = {2,4} has gap {3} holding its head 3; proj(3) = {2,3,4,6} has
  // gap {5}, which is not inside {3}.
  const DepTree t = tree(*first);
  EXPECT_TRUE(in_wg(t, 1));
  EXPECT_EQ(projection(t, 2), (std::vector<Node>{2, 4}));
  EXPECT_EQ(projection(t, 3), (std::vector<Node>{2, 3, 4, 6}));
  EXPECT_FALSE(is_head_split_wg1(t));
}

TEST(KPlanar, Examples) {
  EXPECT_TRUE(is_k_planar(tree({0, 1, 2}), 1));
  const DepTree one = tree({0, 4, 1, 1});
  EXPECT_FALSE(is_k_planar(one, 1));
  EXPECT_TRUE(is_k_planar(one, 2));
  const DepTree tri = tree({0, 4, 5, 1, 2, 3});
  EXPECT_FALSE(is_k_planar(tri, 2));
  EXPECT_TRUE(is_k_planar(tri, 3));
  EXPECT_FALSE(brute_force_k_planar(tri, 2));
  EXPECT_TRUE(brute_force_k_planar(tri, 3));
}

TEST(KPlanar, MatchesBruteForcePartitions) {
  for (int n = 1; n <= 6; ++n)
    for_each_tree(n, [](const DepTree& t) {
      for (int k = 1; k <= 3; ++k) EXPECT_EQ(is_k_planar(t, k), brute_force_k_planar(t, k)) << heads_to_string(t) << " k=" << k;
    });
}

TEST(KPlanar, RejectsNonPositiveK) { EXPECT_THROW(is_k_planar(tree({0}), 0), Error); }

TEST(PageNumber, Examples) {
  EXPECT_EQ(page_number(tree({0, 1, 2})), 1);
  EXPECT_EQ(page_number(tree({0, 4, 1, 1})), 2);
  EXPECT_EQ(page_number(tree({0, 4, 5, 1, 2, 3})), 3);
  EXPECT_EQ(page_number(tree({0})), 1);
}

TEST(PageNumber, AtLeastCliqueAndMatchesSmallestK) {
  for (int n = 1; n <= 6; ++n)
    for_each_tree(n, [](const DepTree& t) {
      const int p = page_number(t);
      EXPECT_GE(p, max_clique(t));
      EXPECT_TRUE(is_k_planar(t, p));
      if (p > 1) { EXPECT_FALSE(is_k_planar(t, p - 1)); }
      EXPECT_EQ(p == 1, is_planar1(t));
    });
}

TEST(PageNumber, BudgetGuardRaisesInsteadOfGuessing) {
  const DepTree tri = tree({0, 4, 5, 1, 2, 3});
  EXPECT_THROW(page_number(tri, 1), BudgetExceeded);
  EXPECT_THROW(is_k_planar(tri, 3, 1), BudgetExceeded);
  // k <= 2 never needs the search.
  EXPECT_FALSE(is_k_planar(tri, 2, 1));
}

TEST(OneEndpointCrossing, Examples) {
  EXPECT_TRUE(is_one_endpoint_crossing(tree({0, 1, 2, 3})));
  EXPECT_TRUE(is_one_endpoint_crossing(tree({5, 5, 1, 2, 0})));
  EXPECT_FALSE(is_one_endpoint_crossing(tree({0, 4, 5, 1, 2, 3})));
}

TEST(OneEndpointCrossing, MatchesOracle) {
  for (int n = 1; n <= 6; ++n)
    for_each_tree(n, [](const DepTree& t) {
      EXPECT_EQ(is_one_endpoint_crossing(t), brute_force_one_endpoint_crossing(t)) << heads_to_string(t);
    });
}

TEST(Monotonicity, WGAndKPlanar) {
  for (int n = 1; n <= 6; ++n)
    for_each_tree(n, [n](const DepTree& t) {
      for (int k = 0; k < n; ++k)
        if (in_wg(t, k)) { EXPECT_TRUE(in_wg(t, k + 1)); }
      for (int k = 1; k < n; ++k)
        if (is_k_planar(t, k)) { EXPECT_TRUE(is_k_planar(t, k + 1)); }
    });
}

TEST(Classify, Chain) {
  const auto r = classify(tree({0, 1, 2}));
  EXPECT_TRUE(r.projective);
  EXPECT_EQ(r.gap_degree, 0);
  EXPECT_EQ(r.page_number, 1);
  EXPECT_TRUE(r.one_endpoint_crossing);
  EXPECT_EQ(r.wg_level, 0);
  EXPECT_EQ(r.attardi_status, SearchStatus::Found);
  EXPECT_EQ(r.attardi_degree, 1);
  EXPECT_EQ(r.max_dependency_length, 1);
}

TEST(Classify, SingleCrossing) {
  const auto r = classify(tree({0, 4, 1, 1}));
  EXPECT_FALSE(r.projective);
  EXPECT_EQ(r.gap_degree, 1);
  EXPECT_EQ(r.wg_level, 1);
  EXPECT_EQ(r.page_number, 2);
  EXPECT_TRUE(r.one_endpoint_crossing);
  EXPECT_TRUE(r.gap_minding);
  EXPECT_EQ(r.attardi_degree, 2);
  EXPECT_EQ(r.crossings, 1);
  EXPECT_EQ(r.max_dependency_length, 3);
}

TEST(Classify, IllNested) {
  const auto r = classify(tree({5, 5, 1, 2, 0}));
  EXPECT_FALSE(r.well_nested);
  EXPECT_EQ(r.wg_level, std::nullopt);
  EXPECT_TRUE(r.one_endpoint_crossing);
  EXPECT_EQ(r.page_number, 2);
}

TEST(Classify, SingleNode) {
  const auto r = classify(tree({0}));
  EXPECT_TRUE(r.projective);
  EXPECT_EQ(r.max_dependency_length, 0);
  EXPECT_EQ(r.page_number, 1);
  EXPECT_EQ(r.attardi_degree, 1);
}

TEST(Classify, RecordInvariantsHoldExhaustively) {
  for (int n = 1; n <= 6; ++n)
    for_each_tree(n, [](const DepTree& t) {
      const auto r = classify(t);
      EXPECT_TRUE(!r.projective || r.planar1);
      EXPECT_EQ(r.projective, r.planar1 && !r.root_covered);
      EXPECT_EQ(r.projective, r.gap_degree == 0);
      if (r.wg_level) { EXPECT_TRUE(r.well_nested && r.gap_degree <= *r.wg_level); }
      EXPECT_TRUE(!r.gap_minding || r.mild_plus_one_inherit);
      EXPECT_TRUE(!r.one_endpoint_crossing || r.page_number <= 2);
      EXPECT_EQ(r.page_number == 1, r.planar1);
      EXPECT_EQ(r.crossings, crossing_count(t));
    });
}

}  // namespace
}  // namespace deptree
