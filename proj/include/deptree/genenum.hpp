#pragma once

// Exhaustive enumeration and seeded random generation of rooted labeled
// trees, plus brute-force oracles that follow the class definitions
// literally. The oracles share no code path with the fast deciders.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <queue>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "deptree/errors.hpp"
#include "deptree/tree.hpp"

namespace deptree {

inline constexpr int kMaxEnumerationN = 8;
inline constexpr int kBruteForceEnumerationN = 6;
inline constexpr int kMaxOracleN = 12;

namespace detail {

inline void check_enumeration_size(int n) {
  if (n < 1) throw Error("tree enumeration needs n >= 1");
  if (n > kMaxEnumerationN)
    throw TooLarge("tree enumeration is limited to n <= " + std::to_string(kMaxEnumerationN));
}

}  // namespace detail

// Every head array in {0..n}^n, lexicographic with node 1 most significant,
// filtered by validate_tree.
template <typename Visit>
void for_each_tree_brute_force(int n, Visit&& visit) {
  detail::check_enumeration_size(n);
  std::vector<int> heads(static_cast<std::size_t>(n), 0);
  for (;;) {
    try {
      const DepTree t = validate_tree(heads);
      visit(t);
    } catch (const InvalidTree&) {
    }
    int i = n - 1;
    while (i >= 0 && heads[static_cast<std::size_t>(i)] == n) heads[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) return;
    ++heads[static_cast<std::size_t>(i)];
  }
}

// Same order as the brute force, but cycles and second roots are pruned as
// soon as the offending head is assigned.
template <typename Visit>
void for_each_tree_constructive(int n, Visit&& visit) {
  detail::check_enumeration_size(n);
  std::vector<int> heads(static_cast<std::size_t>(n), -1);
  bool root_used = false;
  auto closes_cycle = [&](Node i) {
    for (Node v = heads[static_cast<std::size_t>(i - 1)]; v > 0; v = heads[static_cast<std::size_t>(v - 1)])
      if (v == i) return true;
    return false;
  };
  auto rec = [&](auto&& self, Node i) -> void {
    if (i > n) {
      if (root_used) visit(validate_tree(heads));
      return;
    }
    auto& h = heads[static_cast<std::size_t>(i - 1)];
    for (int cand = 0; cand <= n; ++cand) {
      if (cand == i) continue;
      if (cand == 0 && root_used) continue;
      h = cand;
      if (cand == 0) {
        root_used = true;
        self(self, i + 1);
        root_used = false;
      } else if (!closes_cycle(i)) {
        self(self, i + 1);
      }
    }
    h = -1;
  };
  rec(rec, 1);
}

// All n^(n-1) rooted labeled trees on n positions, each exactly once.
template <typename Visit>
void for_each_tree(int n, Visit&& visit) {
  if (n <= kBruteForceEnumerationN)
    for_each_tree_brute_force(n, std::forward<Visit>(visit));
  else
    for_each_tree_constructive(n, std::forward<Visit>(visit));
}

inline std::vector<DepTree> enumerate_trees(int n) {
  std::vector<DepTree> out;
  for_each_tree(n, [&](const DepTree& t) { out.push_back(t); });
  return out;
}

// Uniform over rooted labeled trees: a uniform Pruefer sequence gives a
// uniform unrooted tree, then the root is drawn uniformly.
template <typename Rng>
DepTree random_tree(int n, Rng& rng) {
  if (n < 1) throw Error("random_tree needs n >= 1");
  if (n == 1) return validate_tree({0});
  std::uniform_int_distribution<int> node(1, n);
  std::vector<int> pruefer(static_cast<std::size_t>(n - 2));
  for (int& v : pruefer) v = node(rng);
  const Node root = node(rng);

  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
  for (int v : pruefer) ++degree[static_cast<std::size_t>(v)];
  std::vector<std::vector<Node>> adj(static_cast<std::size_t>(n) + 1);
  std::priority_queue<Node, std::vector<Node>, std::greater<>> leaves;
  for (Node v = 1; v <= n; ++v)
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);
  for (int v : pruefer) {
    const Node leaf = leaves.top();
    leaves.pop();
    adj[static_cast<std::size_t>(leaf)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(leaf);
    if (--degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);
  }
  const Node a = leaves.top();
  leaves.pop();
  const Node b = leaves.top();
  adj[static_cast<std::size_t>(a)].push_back(b);
  adj[static_cast<std::size_t>(b)].push_back(a);

  std::vector<int> heads(static_cast<std::size_t>(n), -1);
  heads[static_cast<std::size_t>(root - 1)] = 0;
  std::queue<Node> q;
  q.push(root);
  while (!q.empty()) {
    const Node v = q.front();
    q.pop();
    for (Node w : adj[static_cast<std::size_t>(v)])
      if (heads[static_cast<std::size_t>(w - 1)] == -1) {
        heads[static_cast<std::size_t>(w - 1)] = v;
        q.push(w);
      }
  }
  return validate_tree(std::move(heads));
}

inline DepTree random_tree(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_tree(n, rng);
}

// random_tree with arc labels drawn uniformly from `alphabet`.
template <typename Rng>
DepTree random_labeled_tree(int n, Rng& rng, const std::vector<std::string>& alphabet) {
  const DepTree t = random_tree(n, rng);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (auto& l : labels) l = alphabet[pick(rng)];
  return validate_tree(std::vector<int>(t.heads().begin(), t.heads().end()), std::move(labels));
}

// ---------------------------------------------------------------------------
// Oracles

// Projective iff for every arc h -> d, every node strictly between h and d
// descends from h.
inline bool oracle_projective_by_cover(const DepTree& t) {
  for (Node d = 1; d <= t.size(); ++d) {
    const Node h = t.head(d);
    if (h == 0) continue;
    for (Node m = std::min(h, d) + 1; m < std::max(h, d); ++m) {
      bool below = false;
      for (Node v = m; v != 0; v = t.head(v))
        if (v == h) below = true;
      if (!below) return false;
    }
  }
  return true;
}

// Tries every assignment of the crossing-involved arcs to two pages.
inline bool oracle_two_planar(const DepTree& t) {
  if (t.size() > kMaxOracleN)
    throw TooLarge("oracle_two_planar is limited to n <= " + std::to_string(kMaxOracleN));
  const auto arcs = t.arcs();
  auto crosses = [](const Arc& a, const Arc& b) {
    const int i = std::min(a.head, a.dep), j = std::max(a.head, a.dep);
    const int k = std::min(b.head, b.dep), l = std::max(b.head, b.dep);
    return (i < k && k < j && j < l) || (k < i && i < l && l < j);
  };
  std::vector<Arc> involved;
  for (std::size_t a = 0; a < arcs.size(); ++a)
    for (std::size_t b = 0; b < arcs.size(); ++b)
      if (a != b && crosses(arcs[a], arcs[b])) {
        involved.push_back(arcs[a]);
        break;
      }
  const std::size_t m = involved.size();
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    bool ok = true;
    for (std::size_t a = 0; a < m && ok; ++a)
      for (std::size_t b = a + 1; b < m && ok; ++b)
        if (((mask >> a) & 1u) == ((mask >> b) & 1u) && crosses(involved[a], involved[b])) ok = false;
    if (ok) return true;
  }
  return false;
}

}  // namespace deptree
