#pragma once

// Dependency-tree data model and the geometric predicates (projection,
// cover, cross, distance) that every class decider is built on.
//
// Nodes are sentence positions 1..n. Head value 0 marks the root; the dummy
// root never exists as a node and contributes no arc.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "deptree/errors.hpp"

namespace deptree {

using Node = int;

struct Arc {
  Node head = 0;
  Node dep = 0;

  constexpr Node left() const noexcept { return std::min(head, dep); }
  constexpr Node right() const noexcept { return std::max(head, dep); }

  friend constexpr bool operator==(const Arc&, const Arc&) = default;
};

class DepTree;
DepTree validate_tree(std::vector<int> heads, std::vector<std::string> labels = {});

// Immutable rooted tree over positions 1..n. Only validate_tree() builds one,
// so every instance satisfies the single-root and acyclicity invariants.
class DepTree {
 public:
  int size() const noexcept { return static_cast<int>(heads_.size()); }
  Node head(Node i) const { return heads_[static_cast<std::size_t>(i - 1)]; }
  Node root() const noexcept { return root_; }
  bool has_labels() const noexcept { return !labels_.empty(); }
  // Label of the arc entering node i, or "" when the tree is unlabeled.
  const std::string& label(Node i) const {
    static const std::string kEmpty;
    return labels_.empty() ? kEmpty : labels_[static_cast<std::size_t>(i - 1)];
  }
  // heads()[i-1] is the head of node i.
  std::span<const int> heads() const noexcept { return heads_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  // Children of node i in ascending position order.
  const std::vector<Node>& children(Node i) const {
    return children_[static_cast<std::size_t>(i)];
  }

  // The n-1 arcs, ordered by dependent position.
  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    out.reserve(heads_.size());
    for (Node d = 1; d <= size(); ++d)
      if (head(d) != 0) out.push_back({head(d), d});
    return out;
  }

  // Labels are compared too; two unlabeled trees compare by heads only.
  friend bool operator==(const DepTree& a, const DepTree& b) {
    return a.heads_ == b.heads_ && a.labels_ == b.labels_;
  }

 private:
  friend DepTree validate_tree(std::vector<int>, std::vector<std::string>);
  DepTree() = default;

  std::vector<int> heads_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Node>> children_;  // index 0 holds the root
  Node root_ = 0;
};

// Builds a DepTree from heads[i-1] = head of node i. Throws InvalidTree.
inline DepTree validate_tree(std::vector<int> heads, std::vector<std::string> labels) {
  const int n = static_cast<int>(heads.size());
  if (n == 0) throw InvalidTree(TreeErrorKind::Empty, "a tree needs at least one node");
  if (!labels.empty() && labels.size() != heads.size())
    throw Error("label count " + std::to_string(labels.size()) + " does not match node count " +
                std::to_string(n));

  Node root = 0;
  int roots = 0;
  for (Node i = 1; i <= n; ++i) {
    const int h = heads[static_cast<std::size_t>(i - 1)];
    if (h < 0 || h > n)
      throw InvalidTree(TreeErrorKind::OutOfRange,
                        "head " + std::to_string(h) + " of node " + std::to_string(i) +
                            " is outside 0.." + std::to_string(n));
    if (h == 0) {
      ++roots;
      root = i;
    }
  }
  if (roots > 1)
    throw InvalidTree(TreeErrorKind::MultipleRoots,
                      std::to_string(roots) + " nodes have head 0");
  // With no root every head chain loops, so the zero-root case is a cycle.
  if (roots == 0) throw InvalidTree(TreeErrorKind::Cycle, "no node has head 0");

  // 0 = unvisited, 1 = on current path, 2 = known to reach the root.
  std::vector<char> state(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Node> path;
  for (Node start = 1; start <= n; ++start) {
    path.clear();
    Node v = start;
    while (v != 0 && state[static_cast<std::size_t>(v)] == 0) {
      state[static_cast<std::size_t>(v)] = 1;
      path.push_back(v);
      v = heads[static_cast<std::size_t>(v - 1)];
    }
    if (v != 0 && state[static_cast<std::size_t>(v)] == 1)
      throw InvalidTree(TreeErrorKind::Cycle,
                        "following heads from node " + std::to_string(start) +
                            " never reaches the root");
    for (Node p : path) state[static_cast<std::size_t>(p)] = 2;
  }

  DepTree t;
  t.heads_ = std::move(heads);
  t.labels_ = std::move(labels);
  t.root_ = root;
  t.children_.assign(static_cast<std::size_t>(n) + 1, {});
  for (Node d = 1; d <= n; ++d) t.children_[static_cast<std::size_t>(t.head(d))].push_back(d);
  return t;
}

// All nodes j with i ->* j, ascending. i itself is included.
inline std::vector<Node> projection(const DepTree& t, Node i) {
  std::vector<Node> out;
  for (Node j = 1; j <= t.size(); ++j) {
    for (Node v = j; v != 0; v = t.head(v)) {
      if (v == i) {
        out.push_back(j);
        break;
      }
    }
  }
  return out;
}

// Projections of every node; result[i] is the sorted projection of node i
// (result[0] is unused and empty).
inline std::vector<std::vector<Node>> all_projections(const DepTree& t) {
  std::vector<std::vector<Node>> out(static_cast<std::size_t>(t.size()) + 1);
  for (Node j = 1; j <= t.size(); ++j)
    for (Node v = j; v != 0; v = t.head(v)) out[static_cast<std::size_t>(v)].push_back(j);
  return out;
}

inline bool is_descendant(const DepTree& t, Node ancestor, Node node) {
  for (Node v = node; v != 0; v = t.head(v))
    if (v == ancestor) return true;
  return false;
}

struct Interval {
  Node first = 0;
  Node last = 0;
  friend constexpr bool operator==(const Interval&, const Interval&) = default;
};

// A node set as its ascending list of maximal intervals.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {}

  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  std::size_t count() const noexcept { return intervals_.size(); }
  int gap_count() const noexcept {
    return intervals_.empty() ? 0 : static_cast<int>(intervals_.size()) - 1;
  }
  bool contains(Node v) const {
    return std::any_of(intervals_.begin(), intervals_.end(),
                       [v](const Interval& iv) { return iv.first <= v && v <= iv.last; });
  }
  // The missing stretches between consecutive intervals.
  std::vector<Interval> gaps() const {
    std::vector<Interval> out;
    for (std::size_t k = 1; k < intervals_.size(); ++k)
      out.push_back({intervals_[k - 1].last + 1, intervals_[k].first - 1});
    return out;
  }
  std::vector<Node> flatten() const {
    std::vector<Node> out;
    for (const Interval& iv : intervals_)
      for (Node v = iv.first; v <= iv.last; ++v) out.push_back(v);
    return out;
  }

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> intervals_;
};

// Nodes need not be sorted or unique.
inline IntervalSet interval_decomposition(std::vector<Node> nodes) {
  if (nodes.empty()) throw EmptySet();
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  std::vector<Interval> out;
  Interval cur{nodes.front(), nodes.front()};
  for (std::size_t k = 1; k < nodes.size(); ++k) {
    if (nodes[k] == cur.last + 1) {
      cur.last = nodes[k];
    } else {
      out.push_back(cur);
      cur = {nodes[k], nodes[k]};
    }
  }
  out.push_back(cur);
  return IntervalSet(std::move(out));
}

constexpr bool arc_covers(const Arc& a, Node m) noexcept {
  return a.left() < m && m < a.right();
}

constexpr bool arcs_cross(const Arc& a, const Arc& b) noexcept {
  return (a.left() < b.left() && b.left() < a.right() && a.right() < b.right()) ||
         (b.left() < a.left() && a.left() < b.right() && b.right() < a.right());
}

constexpr int dependency_length(const Arc& a) noexcept { return a.right() - a.left(); }

// Arcs as vertices, crossing pairs as edges. Edge pairs are (i, j) with i < j,
// sorted lexicographically.
struct CrossingGraph {
  std::vector<Arc> vertices;
  std::vector<std::pair<int, int>> edges;

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(vertices.size());
    for (auto [a, b] : edges) {
      adj[static_cast<std::size_t>(a)].push_back(b);
      adj[static_cast<std::size_t>(b)].push_back(a);
    }
    return adj;
  }
};

inline CrossingGraph crossing_graph(const DepTree& t) {
  CrossingGraph g;
  g.vertices = t.arcs();
  const int m = static_cast<int>(g.vertices.size());
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (arcs_cross(g.vertices[static_cast<std::size_t>(a)], g.vertices[static_cast<std::size_t>(b)]))
        g.edges.emplace_back(a, b);
  return g;
}

inline int crossing_count(const DepTree& t) {
  return static_cast<int>(crossing_graph(t).edges.size());
}

inline int max_dependency_length(const DepTree& t) {
  int best = 0;
  for (const Arc& a : t.arcs()) best = std::max(best, dependency_length(a));
  return best;
}

// "0,4,1,1" style rendering used by the CLI and test diagnostics.
inline std::string heads_to_string(std::span<const int> heads) {
  std::string out;
  for (std::size_t i = 0; i < heads.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(heads[i]);
  }
  return out;
}

inline std::string heads_to_string(const DepTree& t) { return heads_to_string(t.heads()); }

}  // namespace deptree
