#pragma once

// Attardi-degree membership by search over stack-based derivations.
//
// Transition inventory for degree d:
//   Shift          push the buffer front onto the stack
//   LeftArc(s)     top -> element at stack depth 1+s, that element is removed
//   RightArc(s)    element at stack depth 1+s -> top, the top is popped
// with s in [0, d). Degree 1 is plain arc-standard. An arc transition only
// fires when the arc belongs to the target tree and its dependent already has
// all of its own dependents attached. A derivation succeeds when the buffer
// is empty and the stack holds only the root.
//
// Taking such an arc as soon as it is available never loses a derivation: the
// removed node is finished, and removing it only brings deeper stack elements
// closer to the top. The search is therefore greedy, one pass of at most 2n
// transitions.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "deptree/errors.hpp"
#include "deptree/tree.hpp"

namespace deptree {

// Upper bound on transitions tried per search.
inline constexpr std::size_t kDefaultAttardiBudget = 1'000'000;

struct Transition {
  enum class Kind : std::uint8_t { Shift, LeftArc, RightArc };
  Kind kind = Kind::Shift;
  int skip = 0;

  friend constexpr bool operator==(const Transition&, const Transition&) = default;
};

inline std::string to_string(const Transition& tr) {
  switch (tr.kind) {
    case Transition::Kind::Shift: return "SH";
    case Transition::Kind::LeftArc: return "LA" + std::to_string(tr.skip);
    case Transition::Kind::RightArc: return "RA" + std::to_string(tr.skip);
  }
  return "?";
}

struct Configuration {
  std::vector<Node> stack;  // top at the back
  Node buffer_front = 1;
  std::vector<Arc> built_arcs;
};

// Applies a transition without consulting any target tree. Returns false when
// the transition is not applicable in the configuration.
inline bool apply_transition(Configuration& c, int n, const Transition& tr) {
  const auto m = c.stack.size();
  switch (tr.kind) {
    case Transition::Kind::Shift:
      if (c.buffer_front > n) return false;
      c.stack.push_back(c.buffer_front++);
      return true;
    case Transition::Kind::LeftArc: {
      if (tr.skip < 0 || m < static_cast<std::size_t>(tr.skip) + 2) return false;
      const auto idx = m - 2 - static_cast<std::size_t>(tr.skip);
      c.built_arcs.push_back({c.stack.back(), c.stack[idx]});
      c.stack.erase(c.stack.begin() + static_cast<std::ptrdiff_t>(idx));
      return true;
    }
    case Transition::Kind::RightArc: {
      if (tr.skip < 0 || m < static_cast<std::size_t>(tr.skip) + 2) return false;
      const auto idx = m - 2 - static_cast<std::size_t>(tr.skip);
      c.built_arcs.push_back({c.stack[idx], c.stack.back()});
      c.stack.pop_back();
      return true;
    }
  }
  return false;
}

// Replays a derivation from the initial configuration and returns the head
// array it builds (0 for nodes never attached), or nullopt when some
// transition is inapplicable or the derivation does not terminate cleanly.
inline std::optional<std::vector<int>> replay_derivation(int n, const std::vector<Transition>& seq) {
  Configuration c;
  for (const Transition& tr : seq)
    if (!apply_transition(c, n, tr)) return std::nullopt;
  if (c.buffer_front != n + 1 || c.stack.size() != 1) return std::nullopt;
  std::vector<int> heads(static_cast<std::size_t>(n), 0);
  for (const Arc& a : c.built_arcs) {
    if (heads[static_cast<std::size_t>(a.dep - 1)] != 0) return std::nullopt;
    heads[static_cast<std::size_t>(a.dep - 1)] = a.head;
  }
  return heads;
}

enum class Reachability { Reachable, Unreachable, BudgetExceeded };

struct ReachResult {
  Reachability status = Reachability::Unreachable;
  std::vector<Transition> derivation;  // filled when Reachable
  std::size_t states = 0;              // transitions applied
};

namespace detail {

class AttardiSearch {
 public:
  AttardiSearch(const DepTree& t, int degree, std::size_t budget)
      : t_(t), n_(t.size()), degree_(degree), budget_(budget),
        pending_(static_cast<std::size_t>(n_) + 1, 0) {
    for (Node d = 1; d <= n_; ++d)
      if (t.head(d) != 0) ++pending_[static_cast<std::size_t>(t.head(d))];
  }

  ReachResult run() {
    ReachResult r;
    for (;;) {
      if (path_.size() >= budget_) {
        r.status = Reachability::BudgetExceeded;
        break;
      }
      if (arc() || shift()) continue;
      r.status = stack_.size() == 1 ? Reachability::Reachable : Reachability::Unreachable;
      break;
    }
    if (r.status == Reachability::Reachable) r.derivation = path_;
    r.states = path_.size();
    return r;
  }

 private:
  bool complete(Node v) const { return pending_[static_cast<std::size_t>(v)] == 0; }

  bool arc() {
    const std::size_t m = stack_.size();
    if (m < 2) return false;
    const Node top = stack_.back();
    for (int s = 0; s < degree_ && m >= static_cast<std::size_t>(s) + 2; ++s) {
      const std::size_t idx = m - 2 - static_cast<std::size_t>(s);
      const Node other = stack_[idx];
      if (t_.head(other) == top && complete(other)) {
        stack_.erase(stack_.begin() + static_cast<std::ptrdiff_t>(idx));
        --pending_[static_cast<std::size_t>(top)];
        path_.push_back({Transition::Kind::LeftArc, s});
        return true;
      }
      if (t_.head(top) == other && complete(top)) {
        stack_.pop_back();
        --pending_[static_cast<std::size_t>(other)];
        path_.push_back({Transition::Kind::RightArc, s});
        return true;
      }
    }
    return false;
  }

  bool shift() {
    if (buffer_front_ > n_) return false;
    stack_.push_back(buffer_front_++);
    path_.push_back({Transition::Kind::Shift, 0});
    return true;
  }

  const DepTree& t_;
  int n_;
  int degree_;
  std::size_t budget_;
  std::vector<int> pending_;  // dependents not yet attached, per node
  std::vector<Node> stack_;
  Node buffer_front_ = 1;
  std::vector<Transition> path_;
};

}  // namespace detail

// Whether some degree-`degree` derivation builds exactly the arcs of t.
inline ReachResult attardi_search(const DepTree& t, int degree,
                                  std::size_t budget = kDefaultAttardiBudget) {
  if (degree < 1) throw Error("Attardi degree must be positive");
  if (budget < 1) throw Error("Attardi budget must be positive");
  return detail::AttardiSearch(t, degree, budget).run();
}

// Throws BudgetExceeded instead of returning a third state.
inline bool attardi_reachable(const DepTree& t, int degree,
                              std::size_t budget = kDefaultAttardiBudget) {
  const ReachResult r = attardi_search(t, degree, budget);
  if (r.status == Reachability::BudgetExceeded)
    throw BudgetExceeded("Attardi search for degree " + std::to_string(degree) +
                         " exceeded " + std::to_string(budget) + " transitions");
  return r.status == Reachability::Reachable;
}

// Smallest d <= cap with t in AD_d; nullopt means above cap.
inline std::optional<int> attardi_degree(const DepTree& t, int cap,
                                         std::size_t budget = kDefaultAttardiBudget) {
  if (cap < 1) throw Error("Attardi cap must be positive");
  for (int d = 1; d <= cap; ++d)
    if (attardi_reachable(t, d, budget)) return d;
  return std::nullopt;
}

}  // namespace deptree
