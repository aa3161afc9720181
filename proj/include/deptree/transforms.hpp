#pragma once

// Pseudo-projective lifting with "head" label annotation, its inverse, and
// projective rearrangement of word order.
//
// A lifted dependent's label becomes  escape(deprel) SEP escape(head_label),
// where head_label is the label of the arc entering its original syntactic
// head. Inside labels the separator and the backslash are escaped with a
// backslash, so the first unescaped separator always marks the annotation.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "deptree/errors.hpp"
#include "deptree/tree.hpp"

namespace deptree {

inline constexpr char kDefaultLiftSeparator = '%';

struct LiftAnnotation {
  std::string deprel;
  std::optional<std::string> head_label;  // set only for lifted dependents
};

inline std::string escape_label(const std::string& s, char sep = kDefaultLiftSeparator) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '\\' || c == sep) out += '\\';
    out += c;
  }
  return out;
}

inline std::string encode_label(const LiftAnnotation& a, char sep = kDefaultLiftSeparator) {
  std::string out = escape_label(a.deprel, sep);
  if (a.head_label) {
    out += sep;
    out += escape_label(*a.head_label, sep);
  }
  return out;
}

inline LiftAnnotation decode_label(const std::string& s, char sep = kDefaultLiftSeparator) {
  LiftAnnotation a;
  std::string* cur = &a.deprel;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '\\' && i + 1 < s.size()) {
      *cur += s[++i];
    } else if (c == sep && !a.head_label) {
      a.head_label.emplace();
      cur = &*a.head_label;
    } else {
      *cur += c;
    }
  }
  return a;
}

// ---------------------------------------------------------------------------
// Pseudo-projectivization

struct LiftResult {
  DepTree tree;
  int lifts = 0;
};

namespace detail {

// Non-projective arc (some covered node does not descend from the head) with
// the shortest length, leftmost dependent on ties. Returns its dependent.
inline std::optional<Node> shortest_nonprojective_dependent(const std::vector<int>& heads) {
  const int n = static_cast<int>(heads.size());
  auto head = [&](Node v) { return heads[static_cast<std::size_t>(v - 1)]; };
  auto descends = [&](Node anc, Node v) {
    for (; v != 0; v = head(v))
      if (v == anc) return true;
    return false;
  };
  std::optional<Node> best;
  int best_len = std::numeric_limits<int>::max();
  for (Node d = 1; d <= n; ++d) {
    const Node h = head(d);
    if (h == 0) continue;
    const int len = std::abs(h - d);
    if (len >= best_len) continue;
    for (Node m = std::min(h, d) + 1; m < std::max(h, d); ++m) {
      if (!descends(h, m)) {
        best = d;
        best_len = len;
        break;
      }
    }
  }
  return best;
}

}  // namespace detail

// Lifts non-projective dependents to their grandparents until the tree is
// projective. Output labels are always in escaped form.
inline LiftResult pseudo_projectivize(const DepTree& t, char sep = kDefaultLiftSeparator) {
  const int n = t.size();
  std::vector<int> heads(t.heads().begin(), t.heads().end());
  std::vector<LiftAnnotation> ann(static_cast<std::size_t>(n));
  for (Node i = 1; i <= n; ++i) ann[static_cast<std::size_t>(i - 1)].deprel = t.label(i);

  int lifts = 0;
  while (auto d = detail::shortest_nonprojective_dependent(heads)) {
    auto& hd = heads[static_cast<std::size_t>(*d - 1)];
    // A non-projective arc never leaves the root, so the grandparent exists.
    const Node h = hd;
    auto& a = ann[static_cast<std::size_t>(*d - 1)];
    if (!a.head_label) a.head_label = ann[static_cast<std::size_t>(h - 1)].deprel;
    hd = heads[static_cast<std::size_t>(h - 1)];
    ++lifts;
  }

  std::vector<std::string> labels;
  labels.reserve(ann.size());
  for (const auto& a : ann) labels.push_back(encode_label(a, sep));
  return {validate_tree(std::move(heads), std::move(labels)), lifts};
}

struct LowerResult {
  DepTree tree;
  int unresolved = 0;  // annotations with no landing site; stripped, arc kept
};

// Inverse of pseudo_projectivize. Annotated dependents are visited top-down
// (breadth-first from the root, left to right). Each is reattached to the
// first node, breadth-first and left to right among the descendants of its
// current head, whose deprel matches the recorded head label. A dependent with
// no match yet is retried after the others have moved; once a full pass makes
// no progress the leftovers are counted as unresolved.
inline LowerResult deprojectivize(const DepTree& t, char sep = kDefaultLiftSeparator) {
  const int n = t.size();
  std::vector<int> heads(t.heads().begin(), t.heads().end());
  std::vector<LiftAnnotation> ann;
  ann.reserve(static_cast<std::size_t>(n));
  for (Node i = 1; i <= n; ++i) ann.push_back(decode_label(t.label(i), sep));

  auto children_of = [&](Node v) {
    std::vector<Node> out;
    for (Node c = 1; c <= n; ++c)
      if (heads[static_cast<std::size_t>(c - 1)] == v) out.push_back(c);
    return out;
  };
  auto top_down = [&] {
    std::vector<Node> order;
    std::queue<Node> q;
    q.push(t.root());
    while (!q.empty()) {
      const Node v = q.front();
      q.pop();
      order.push_back(v);
      for (Node c : children_of(v)) q.push(c);
    }
    return order;
  };
  auto landing_site = [&](Node d) -> std::optional<Node> {
    const std::string& want = *ann[static_cast<std::size_t>(d - 1)].head_label;
    std::queue<Node> q;
    for (Node c : children_of(heads[static_cast<std::size_t>(d - 1)]))
      if (c != d) q.push(c);
    while (!q.empty()) {
      const Node v = q.front();
      q.pop();
      if (ann[static_cast<std::size_t>(v - 1)].deprel == want) return v;
      for (Node c : children_of(v)) q.push(c);
    }
    return std::nullopt;
  };

  for (bool progress = true; progress;) {
    progress = false;
    for (Node d : top_down()) {
      auto& a = ann[static_cast<std::size_t>(d - 1)];
      if (!a.head_label) continue;
      if (auto v = landing_site(d)) {
        heads[static_cast<std::size_t>(d - 1)] = *v;
        a.head_label.reset();
        progress = true;
      }
    }
  }
  int unresolved = 0;
  for (auto& a : ann)
    if (a.head_label) {
      a.head_label.reset();
      ++unresolved;
    }

  std::vector<std::string> labels;
  if (t.has_labels())
    for (const auto& a : ann) labels.push_back(a.deprel);
  return {validate_tree(std::move(heads), std::move(labels)), unresolved};
}

// ---------------------------------------------------------------------------
// Word-order permutations

// Bijection old position -> new position over 1..n.
class Permutation {
 public:
  // new_positions[i-1] is the new position of old node i.
  explicit Permutation(std::vector<int> new_positions) : map_(std::move(new_positions)) {
    const auto n = map_.size();
    std::vector<char> seen(n + 1, 0);
    for (int p : map_) {
      if (p < 1 || static_cast<std::size_t>(p) > n || seen[static_cast<std::size_t>(p)])
        throw NotBijective("permutation is not a bijection over 1.." + std::to_string(n));
      seen[static_cast<std::size_t>(p)] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(p));
  }

  int size() const noexcept { return static_cast<int>(map_.size()); }
  int operator()(Node old_pos) const { return map_[static_cast<std::size_t>(old_pos - 1)]; }
  const std::vector<int>& new_positions() const noexcept { return map_; }
  bool is_identity() const {
    for (std::size_t i = 0; i < map_.size(); ++i)
      if (map_[i] != static_cast<int>(i) + 1) return false;
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> map_;
};

inline DepTree apply_permutation(const DepTree& t, const Permutation& p) {
  if (p.size() != t.size())
    throw NotBijective("permutation over " + std::to_string(p.size()) + " positions applied to a " +
                       std::to_string(t.size()) + "-node tree");
  const auto n = static_cast<std::size_t>(t.size());
  std::vector<int> heads(n, 0);
  std::vector<std::string> labels(t.has_labels() ? n : 0);
  for (Node i = 1; i <= t.size(); ++i) {
    const auto slot = static_cast<std::size_t>(p(i) - 1);
    heads[slot] = t.head(i) == 0 ? 0 : p(t.head(i));
    if (t.has_labels()) labels[slot] = t.label(i);
  }
  return validate_tree(std::move(heads), std::move(labels));
}

// Canonical projective layout: every node is placed between the blocks of
// its left children and its right children, children keeping their original
// relative order. Identity on projective trees.
inline Permutation projective_rearrangement(const DepTree& t) {
  std::vector<int> pos(static_cast<std::size_t>(t.size()));
  int next = 0;
  auto place = [&](auto&& self, Node v) -> void {
    bool emitted = false;
    for (Node c : t.children(v)) {
      if (c > v && !emitted) {
        pos[static_cast<std::size_t>(v - 1)] = ++next;
        emitted = true;
      }
      self(self, c);
    }
    if (!emitted) pos[static_cast<std::size_t>(v - 1)] = ++next;
  };
  place(place, t.root());
  return Permutation(std::move(pos));
}

}  // namespace deptree
