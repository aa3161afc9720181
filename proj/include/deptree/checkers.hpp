#pragma once

// Deciders for the declaratively defined tree classes, and classify(), which
// evaluates all of them at once.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "deptree/errors.hpp"
#include "deptree/transition.hpp"
#include "deptree/tree.hpp"

namespace deptree {

inline constexpr std::size_t kDefaultColoringBudget = 10'000;

// ---------------------------------------------------------------------------
// Projectivity family

inline int gap_degree_node(const DepTree& t, Node i) {
  return interval_decomposition(projection(t, i)).gap_count();
}

inline int gap_degree(const DepTree& t) {
  int best = 0;
  for (const auto& proj : all_projections(t))
    if (!proj.empty()) best = std::max(best, interval_decomposition(proj).gap_count());
  return best;
}

// Every projection is an interval.
inline bool is_projective(const DepTree& t) {
  for (const auto& proj : all_projections(t))
    if (!proj.empty() && proj.back() - proj.front() + 1 != static_cast<int>(proj.size()))
      return false;
  return true;
}

inline bool is_planar1(const DepTree& t) {
  const auto arcs = t.arcs();
  for (std::size_t a = 0; a < arcs.size(); ++a)
    for (std::size_t b = a + 1; b < arcs.size(); ++b)
      if (arcs_cross(arcs[a], arcs[b])) return false;
  return true;
}

inline bool is_root_covered(const DepTree& t) {
  const auto arcs = t.arcs();
  return std::any_of(arcs.begin(), arcs.end(),
                     [&](const Arc& a) { return arc_covers(a, t.root()); });
}

// ---------------------------------------------------------------------------
// Well-nestedness and gaps

namespace detail {

// membership[i][p] != 0 iff p is in the projection of i.
inline std::vector<std::vector<char>> projection_membership(const DepTree& t) {
  const auto n = static_cast<std::size_t>(t.size());
  std::vector<std::vector<char>> member(n + 1, std::vector<char>(n + 1, 0));
  for (Node j = 1; j <= t.size(); ++j)
    for (Node v = j; v != 0; v = t.head(v)) member[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)] = 1;
  return member;
}

}  // namespace detail

// A pair (a, b) with i < j < k < l, i,k in proj(a)\proj(b) and j,l in
// proj(b)\proj(a); nullopt when the tree is well-nested.
inline std::optional<std::pair<Node, Node>> find_interleaving(const DepTree& t) {
  const int n = t.size();
  const auto member = detail::projection_membership(t);
  for (Node a = 1; a <= n; ++a) {
    const auto& ma = member[static_cast<std::size_t>(a)];
    for (Node b = a + 1; b <= n; ++b) {
      const auto& mb = member[static_cast<std::size_t>(b)];
      // Greedy subsequence match of a,b,a,b and b,a,b,a.
      int ab = 0, ba = 0;
      for (std::size_t p = 1; p <= static_cast<std::size_t>(n); ++p) {
        const bool only_a = ma[p] && !mb[p];
        const bool only_b = mb[p] && !ma[p];
        if (!only_a && !only_b) continue;
        const bool want_a_ab = (ab % 2 == 0);
        if ((want_a_ab && only_a) || (!want_a_ab && only_b)) ++ab;
        const bool want_b_ba = (ba % 2 == 0);
        if ((want_b_ba && only_b) || (!want_b_ba && only_a)) ++ba;
        if (ab >= 4) return std::pair{a, b};
        if (ba >= 4) return std::pair{b, a};
      }
    }
  }
  return std::nullopt;
}

inline bool is_well_nested(const DepTree& t) { return !find_interleaving(t).has_value(); }

inline bool in_wg(const DepTree& t, int k) { return gap_degree(t) <= k && is_well_nested(t); }

// Smallest k with t in WG_k; nullopt for ill-nested trees.
inline std::optional<int> wg_level(const DepTree& t) {
  if (!is_well_nested(t)) return std::nullopt;
  return gap_degree(t);
}

namespace detail {

inline std::vector<Node> inheriting_children(const DepTree& t, Node parent,
                                             const std::vector<std::vector<Node>>& projs) {
  const IntervalSet ivs = interval_decomposition(projs[static_cast<std::size_t>(parent)]);
  if (ivs.gap_count() == 0) return {};
  if (ivs.gap_count() > 1) throw MultipleGaps(parent);
  const Interval gap = ivs.gaps().front();
  std::vector<Node> out;
  for (Node c : t.children(parent)) {
    const auto& pc = projs[static_cast<std::size_t>(c)];
    if (pc.front() < gap.first && pc.back() > gap.last) out.push_back(c);
  }
  return out;
}

}  // namespace detail

// Children of `parent` with descendants on both sides of the parent's single
// gap. Empty when the parent has no gap; throws MultipleGaps for two or more.
inline std::vector<Node> gap_inheritance(const DepTree& t, Node parent) {
  return detail::inheriting_children(t, parent, all_projections(t));
}

namespace detail {

// Largest number of inheriting children over all gap-degree-1 nodes; nullopt
// outside WG_1.
inline std::optional<std::size_t> max_inheritance(const DepTree& t) {
  if (!in_wg(t, 1)) return std::nullopt;
  const auto projs = all_projections(t);
  std::size_t best = 0;
  for (Node p = 1; p <= t.size(); ++p) best = std::max(best, inheriting_children(t, p, projs).size());
  return best;
}

}  // namespace detail

// M0I: WG_1 and no child inherits its parent's gap.
inline bool is_gap_minding(const DepTree& t) {
  const auto m = detail::max_inheritance(t);
  return m && *m == 0;
}

// M1I: WG_1 and at most one child inherits each parent's gap.
inline bool is_mild_plus_one_inherit(const DepTree& t) {
  const auto m = detail::max_inheritance(t);
  return m && *m <= 1;
}

// WG_1 and, whenever the gap of a node contains that node's head, the head's
// own gap (if any) lies inside it.
inline bool is_head_split_wg1(const DepTree& t) {
  if (!in_wg(t, 1)) return false;
  const auto projs = all_projections(t);
  for (Node x = 1; x <= t.size(); ++x) {
    const Node h = t.head(x);
    if (h == 0) continue;
    const IntervalSet own = interval_decomposition(projs[static_cast<std::size_t>(x)]);
    if (own.gap_count() == 0) continue;
    const Interval gap = own.gaps().front();
    if (h < gap.first || h > gap.last) continue;
    const IntervalSet head_ivs = interval_decomposition(projs[static_cast<std::size_t>(h)]);
    if (head_ivs.gap_count() == 0) continue;
    const Interval head_gap = head_ivs.gaps().front();
    if (head_gap.first < gap.first || head_gap.last > gap.last) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Page number

namespace detail {

// Connected components of the crossing graph, each as a list of vertex ids.
inline std::vector<std::vector<int>> components(const std::vector<std::vector<int>>& adj) {
  std::vector<int> comp(adj.size(), -1);
  std::vector<std::vector<int>> out;
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (comp[s] != -1) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<int> q;
    q.push(static_cast<int>(s));
    comp[s] = id;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      out.back().push_back(v);
      for (int w : adj[static_cast<std::size_t>(v)])
        if (comp[static_cast<std::size_t>(w)] == -1) {
          comp[static_cast<std::size_t>(w)] = id;
          q.push(w);
        }
    }
  }
  return out;
}

inline bool bipartite(const std::vector<std::vector<int>>& adj, const std::vector<int>& comp) {
  std::vector<int> side(adj.size(), -1);
  std::queue<int> q;
  side[static_cast<std::size_t>(comp.front())] = 0;
  q.push(comp.front());
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      auto& sw = side[static_cast<std::size_t>(w)];
      if (sw == -1) {
        sw = 1 - side[static_cast<std::size_t>(v)];
        q.push(w);
      } else if (sw == side[static_cast<std::size_t>(v)]) {
        return false;
      }
    }
  }
  return true;
}

// Exact k-colorability of one component by backtracking. Vertices are colored
// highest-degree first; a vertex may open at most one new color.
class ComponentColoring {
 public:
  ComponentColoring(const std::vector<std::vector<int>>& adj, std::vector<int> comp, int k,
                    std::size_t budget, std::size_t& states)
      : adj_(adj), order_(std::move(comp)), k_(k), budget_(budget), states_(states),
        color_(adj.size(), -1) {
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return adj_[static_cast<std::size_t>(a)].size() > adj_[static_cast<std::size_t>(b)].size();
    });
  }

  bool run() { return assign(0, 0); }

 private:
  bool assign(std::size_t pos, int used) {
    if (pos == order_.size()) return true;
    const int v = order_[pos];
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      bool clash = false;
      for (int w : adj_[static_cast<std::size_t>(v)])
        if (color_[static_cast<std::size_t>(w)] == c) {
          clash = true;
          break;
        }
      if (clash) continue;
      if (++states_ > budget_)
        throw BudgetExceeded("page-number coloring exceeded " + std::to_string(budget_) +
                             " states");
      color_[static_cast<std::size_t>(v)] = c;
      if (assign(pos + 1, std::max(used, c + 1))) return true;
      color_[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }

  const std::vector<std::vector<int>>& adj_;
  std::vector<int> order_;
  int k_;
  std::size_t budget_;
  std::size_t& states_;
  std::vector<int> color_;
};

inline bool component_colorable(const std::vector<std::vector<int>>& adj,
                                const std::vector<int>& comp, int k, std::size_t budget,
                                std::size_t& states) {
  if (comp.size() <= 1) return true;  // a multi-vertex component has an edge
  if (k == 1) return false;
  if (k >= static_cast<int>(comp.size())) return true;
  if (bipartite(adj, comp)) return true;
  if (k == 2) return false;
  return ComponentColoring(adj, comp, k, budget, states).run();
}

}  // namespace detail

// Whether the arcs split into k pages with no crossing inside a page. Throws
// BudgetExceeded when the exact search needs more than `budget` states.
inline bool is_k_planar(const DepTree& t, int k, std::size_t budget = kDefaultColoringBudget) {
  if (k < 1) throw Error("k-planarity needs k >= 1");
  const auto adj = crossing_graph(t).adjacency();
  std::size_t states = 0;
  for (const auto& comp : detail::components(adj))
    if (!detail::component_colorable(adj, comp, k, budget, states)) return false;
  return true;
}

// Chromatic number of the crossing graph (1 for a tree with no arcs).
inline int page_number(const DepTree& t, std::size_t budget = kDefaultColoringBudget) {
  const auto adj = crossing_graph(t).adjacency();
  int best = 1;
  for (const auto& comp : detail::components(adj)) {
    int k = best;
    std::size_t states = 0;
    while (!detail::component_colorable(adj, comp, k, budget, states)) {
      ++k;
      states = 0;
    }
    best = k;
  }
  return best;
}

// ---------------------------------------------------------------------------
// 1-Endpoint-Crossing

// For every arc, all arcs crossing it share some endpoint. The shared node
// may differ from one crossed arc to the next.
inline bool is_one_endpoint_crossing(const DepTree& t) {
  const auto arcs = t.arcs();
  for (const Arc& e : arcs) {
    std::vector<Node> common;
    bool first = true;
    for (const Arc& f : arcs) {
      if (!arcs_cross(e, f)) continue;
      if (first) {
        common = {f.head, f.dep};
        first = false;
      } else {
        std::erase_if(common, [&](Node v) { return v != f.head && v != f.dep; });
        if (common.empty()) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// classify

struct ClassifyOptions {
  int attardi_cap = 3;
  std::size_t attardi_budget = kDefaultAttardiBudget;
  std::size_t coloring_budget = kDefaultColoringBudget;
};

enum class SearchStatus { Found, AboveCap, BudgetExceeded };

struct ClassificationRecord {
  int n = 0;
  bool projective = false;
  bool planar1 = false;
  bool root_covered = false;
  int gap_degree = 0;
  bool well_nested = false;
  std::optional<int> wg_level;  // nullopt: ill-nested
  bool gap_minding = false;
  bool mild_plus_one_inherit = false;
  bool head_split_wg1 = false;
  // 0 only when page_number_status is BudgetExceeded.
  int page_number = 0;
  SearchStatus page_number_status = SearchStatus::Found;
  bool one_endpoint_crossing = false;
  // Valid when attardi_status is Found.
  int attardi_degree = 0;
  SearchStatus attardi_status = SearchStatus::Found;
  int crossings = 0;
  int max_dependency_length = 0;
  std::vector<int> dependency_lengths;  // one entry per arc

  bool in_wg(int k) const { return wg_level && *wg_level <= k; }
  bool k_planar(int k) const {
    return page_number_status == SearchStatus::Found && page_number <= k;
  }
  bool in_attardi(int d) const {
    return attardi_status == SearchStatus::Found && attardi_degree <= d;
  }
};

inline ClassificationRecord classify(const DepTree& t, const ClassifyOptions& opts = {}) {
  ClassificationRecord r;
  r.n = t.size();
  r.projective = is_projective(t);
  r.crossings = crossing_count(t);
  r.planar1 = r.crossings == 0;
  r.root_covered = is_root_covered(t);
  r.gap_degree = gap_degree(t);
  r.well_nested = is_well_nested(t);
  if (r.well_nested) r.wg_level = r.gap_degree;
  r.gap_minding = is_gap_minding(t);
  r.mild_plus_one_inherit = is_mild_plus_one_inherit(t);
  r.head_split_wg1 = is_head_split_wg1(t);
  try {
    r.page_number = page_number(t, opts.coloring_budget);
  } catch (const BudgetExceeded&) {
    r.page_number = 0;
    r.page_number_status = SearchStatus::BudgetExceeded;
  }
  r.one_endpoint_crossing = is_one_endpoint_crossing(t);

  r.attardi_status = SearchStatus::AboveCap;
  for (int d = 1; d <= opts.attardi_cap; ++d) {
    const ReachResult res = attardi_search(t, d, opts.attardi_budget);
    if (res.status == Reachability::BudgetExceeded) {
      r.attardi_status = SearchStatus::BudgetExceeded;
      break;
    }
    if (res.status == Reachability::Reachable) {
      r.attardi_status = SearchStatus::Found;
      r.attardi_degree = d;
      break;
    }
  }

  for (const Arc& a : t.arcs()) r.dependency_lengths.push_back(dependency_length(a));
  r.max_dependency_length = max_dependency_length(t);
  return r;
}

}  // namespace deptree
