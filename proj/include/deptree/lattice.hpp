#pragma once

// Exhaustive verification of the class inclusion lattice and of the
// definitional equivalences between deciders and oracles.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deptree/checkers.hpp"
#include "deptree/errors.hpp"
#include "deptree/genenum.hpp"
#include "deptree/transition.hpp"
#include "deptree/tree.hpp"

namespace deptree {

inline constexpr int kMaxLatticeN = 7;

using TreePredicate = std::function<bool(const DepTree&)>;

// The deciders under test. Tests swap single members for corrupted versions
// to exercise the failure path.
struct Deciders {
  TreePredicate projective = [](const DepTree& t) { return is_projective(t); };
  TreePredicate projective_by_cover = [](const DepTree& t) { return oracle_projective_by_cover(t); };
  TreePredicate planar1 = [](const DepTree& t) { return is_planar1(t); };
  TreePredicate root_covered = [](const DepTree& t) { return is_root_covered(t); };
  std::function<int(const DepTree&)> gap_degree = [](const DepTree& t) { return deptree::gap_degree(t); };
  std::function<bool(const DepTree&, int)> in_wg = [](const DepTree& t, int k) { return deptree::in_wg(t, k); };
  TreePredicate well_nested = [](const DepTree& t) { return is_well_nested(t); };
  TreePredicate gap_minding = [](const DepTree& t) { return is_gap_minding(t); };
  TreePredicate mild_plus_one_inherit = [](const DepTree& t) { return is_mild_plus_one_inherit(t); };
  TreePredicate head_split_wg1 = [](const DepTree& t) { return is_head_split_wg1(t); };
  std::function<bool(const DepTree&, int)> k_planar = [](const DepTree& t, int k) { return is_k_planar(t, k); };
  TreePredicate two_planar_oracle = [](const DepTree& t) { return oracle_two_planar(t); };
  TreePredicate one_endpoint_crossing = [](const DepTree& t) { return is_one_endpoint_crossing(t); };
  std::function<bool(const DepTree&, int)> attardi = [](const DepTree& t, int d) {
    return attardi_reachable(t, d);
  };
};

struct PropertyResult {
  std::string name;
  bool existential = false;  // passes when some tree satisfies it
  std::size_t checked = 0;
  std::size_t hits = 0;  // violations, or witnesses when existential
  std::optional<std::vector<int>> example;  // first counterexample / witness

  bool passed() const { return existential ? hits > 0 : hits == 0; }
};

struct LatticeReport {
  std::size_t trees = 0;
  std::vector<PropertyResult> properties;

  bool passed() const {
    for (const auto& p : properties)
      if (!p.passed()) return false;
    return true;
  }
  const PropertyResult* find(const std::string& name) const {
    for (const auto& p : properties)
      if (p.name == name) return &p;
    return nullptr;
  }
};

// Accumulates property outcomes tree by tree.
class LatticeChecker {
 public:
  explicit LatticeChecker(Deciders d = {}) : d_(std::move(d)) {}

  void check(const DepTree& t) {
    ++report_.trees;
    const bool proj = d_.projective(t);
    const bool cover = d_.projective_by_cover(t);
    const bool p1 = d_.planar1(t);
    const bool planar_uncovered = p1 && !d_.root_covered(t);
    const bool gap0 = d_.gap_degree(t) == 0;
    const bool wg0 = d_.in_wg(t, 0);

    const bool wg1 = d_.in_wg(t, 1);
    const bool wg2 = d_.in_wg(t, 2);
    const bool m0i = d_.gap_minding(t);
    const bool m1i = d_.mild_plus_one_inherit(t);
    const bool hs = d_.head_split_wg1(t);
    const bool k2 = d_.k_planar(t, 2);
    const bool k3 = d_.k_planar(t, 3);
    const bool ec = d_.one_endpoint_crossing(t);
    const bool wn = d_.well_nested(t);
    const bool ad1 = d_.attardi(t, 1);
    const bool ad2 = d_.attardi(t, 2);
    const bool ad3 = d_.attardi(t, 3);

    universal(t, "projective: interval == covered-descendant", proj == cover);
    universal(t, "projective: interval == 1-planar and root uncovered", proj == planar_uncovered);
    universal(t, "projective: interval == gap degree 0", proj == gap0);
    universal(t, "projective: interval == WG_0", proj == wg0);
    universal(t, "projective: covered-descendant == 1-planar and root uncovered", cover == planar_uncovered);
    universal(t, "projective: covered-descendant == gap degree 0", cover == gap0);
    universal(t, "projective: 1-planar and root uncovered == gap degree 0", planar_uncovered == gap0);

    universal(t, "M0I subset M1I", !m0i || m1i);
    universal(t, "M1I subset WG_1", !m1i || wg1);
    universal(t, "WG_1 subset WG_2", !wg1 || wg2);
    universal(t, "head-split WG_1 subset WG_1", !hs || wg1);
    universal(t, "projective subset 1-planar", !proj || p1);
    universal(t, "1-planar subset 2-planar", !p1 || k2);
    universal(t, "2-planar subset 3-planar", !k2 || k3);
    universal(t, "1EC subset 2-planar", !ec || k2);
    universal(t, "AD_1 == projective", ad1 == proj);
    universal(t, "AD_1 subset AD_2", !ad1 || ad2);
    universal(t, "AD_2 subset AD_3", !ad2 || ad3);
    universal(t, "2-planar == brute-force 2-partition", k2 == d_.two_planar_oracle(t));

    bool wg_monotone = true, planar_monotone = true;
    for (int k = 0; k < t.size(); ++k)
      if (d_.in_wg(t, k) && !d_.in_wg(t, k + 1)) wg_monotone = false;
    for (int k = 1; k < t.size(); ++k)
      if (d_.k_planar(t, k) && !d_.k_planar(t, k + 1)) planar_monotone = false;
    universal(t, "WG_k subset WG_k+1", wg_monotone);
    universal(t, "k-planar subset (k+1)-planar", planar_monotone);

    existential(t, "witness: 1EC and ill-nested", ec && !wn);
    existential(t, "witness: well-nested and not 1EC", wn && !ec);
  }

  const LatticeReport& report() const { return report_; }

 private:
  PropertyResult& slot(const std::string& name, bool existential) {
    for (auto& p : report_.properties)
      if (p.name == name) return p;
    report_.properties.push_back({name, existential, 0, 0, std::nullopt});
    return report_.properties.back();
  }
  void record(const DepTree& t, const std::string& name, bool existential, bool hit) {
    PropertyResult& p = slot(name, existential);
    ++p.checked;
    if (!hit) return;
    if (++p.hits == 1) p.example = std::vector<int>(t.heads().begin(), t.heads().end());
  }
  void universal(const DepTree& t, const std::string& name, bool holds) { record(t, name, false, !holds); }
  void existential(const DepTree& t, const std::string& name, bool holds) { record(t, name, true, holds); }

  Deciders d_;
  LatticeReport report_;
};

// Runs every property over all trees with 1 <= n <= max_n.
inline LatticeReport verify_lattice(int max_n, Deciders deciders = {}) {
  if (max_n < 1) throw Error("verify_lattice needs max_n >= 1");
  if (max_n > kMaxLatticeN)
    throw TooLarge("lattice verification is limited to n <= " + std::to_string(kMaxLatticeN));
  LatticeChecker checker(std::move(deciders));
  for (int n = 1; n <= max_n; ++n) for_each_tree(n, [&](const DepTree& t) { checker.check(t); });
  return checker.report();
}

}  // namespace deptree
