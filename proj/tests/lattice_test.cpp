#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "deptree/lattice.hpp"

namespace deptree {
namespace {

TEST(Lattice, UniversalPropertiesHoldUpToFive) {
  const LatticeReport r = verify_lattice(5);
  EXPECT_EQ(r.trees, 1 + 2 + 9 + 64 + 625);
  for (const auto& p : r.properties)
    if (!p.existential) { EXPECT_TRUE(p.passed()) << p.name; }
}

TEST(Lattice, WitnessesAtFiveAndSix) {
  const LatticeReport five = verify_lattice(5);
  const PropertyResult* ill = five.find("witness: 1EC and ill-nested");
  ASSERT_NE(ill, nullptr);
  EXPECT_TRUE(ill->existential);
  ASSERT_TRUE(ill->example.has_value());
  EXPECT_EQ(*ill->example, (std::vector<int>{0, 1, 1, 2, 3}));

  const LatticeReport six = verify_lattice(6);
  const PropertyResult* wn = six.find("witness: well-nested and not 1EC");
  ASSERT_NE(wn, nullptr);
  ASSERT_TRUE(wn->example.has_value());
  EXPECT_EQ(*wn->example, (std::vector<int>{0, 1, 1, 1, 3, 2}));
  EXPECT_TRUE(six.passed());
}

TEST(Lattice, CorruptedDeciderIsCaught) {
  Deciders broken;
  // Claims every tree with a root at position 1 is 1-planar.
  broken.planar1 = [](const DepTree& t) { return t.root() == 1 || is_planar1(t); };
  const LatticeReport r = verify_lattice(4, broken);
  EXPECT_FALSE(r.passed());
  const PropertyResult* p = r.find("projective: interval == 1-planar and root uncovered");
  ASSERT_NE(p, nullptr);
  EXPECT_FALSE(p->passed());
  ASSERT_TRUE(p->example.has_value());
  const DepTree witness = validate_tree(*p->example);
  EXPECT_EQ(*p->example, (std::vector<int>{0, 1, 1, 2}));
  EXPECT_TRUE(broken.planar1(witness));
  EXPECT_FALSE(is_projective(witness));
}

TEST(Lattice, CorruptedAttardiIsCaught) {
  Deciders broken;
  broken.attardi = [](const DepTree&, int d) { return d >= 2; };
  const LatticeReport r = verify_lattice(3, broken);
  const PropertyResult* p = r.find("AD_1 == projective");
  ASSERT_NE(p, nullptr);
  EXPECT_FALSE(p->passed());
}

TEST(Lattice, MissingWitnessFails) {
  // No tree with n <= 4 is both 1EC and ill-nested.
  const LatticeReport r = verify_lattice(4);
  const PropertyResult* p = r.find("witness: 1EC and ill-nested");
  ASSERT_NE(p, nullptr);
  EXPECT_EQ(p->hits, 0);
  EXPECT_FALSE(p->passed());
}

TEST(Lattice, SizeGuards) {
  EXPECT_THROW(verify_lattice(8), TooLarge);
  EXPECT_THROW(verify_lattice(0), Error);
}

}  // namespace
}  // namespace deptree
