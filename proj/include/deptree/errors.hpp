#pragma once

#include <stdexcept>
#include <string>

namespace deptree {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class TreeErrorKind { Empty, MultipleRoots, Cycle, OutOfRange };

inline const char* to_string(TreeErrorKind kind) {
  switch (kind) {
    case TreeErrorKind::Empty: return "Empty";
    case TreeErrorKind::MultipleRoots: return "MultipleRoots";
    case TreeErrorKind::Cycle: return "Cycle";
    case TreeErrorKind::OutOfRange: return "OutOfRange";
  }
  return "Unknown";
}

// A head array that does not describe a rooted tree.
class InvalidTree : public Error {
 public:
  InvalidTree(TreeErrorKind kind, const std::string& what)
      : Error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  TreeErrorKind kind() const noexcept { return kind_; }

 private:
  TreeErrorKind kind_;
};

class EmptySet : public Error {
 public:
  EmptySet() : Error("EmptySet: interval decomposition of an empty node set") {}
};

class MultipleGaps : public Error {
 public:
  explicit MultipleGaps(int node)
      : Error("MultipleGaps: projection of node " + std::to_string(node) +
              " has more than one gap"),
        node_(node) {}
  int node() const noexcept { return node_; }

 private:
  int node_;
};

// A bounded search ran out of states before reaching a verdict.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class NotBijective : public Error {
 public:
  using Error::Error;
};

}  // namespace deptree
