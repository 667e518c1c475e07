#include <gtest/gtest.h>

#include <algorithm>

#include "zconvex/census.hpp"
#include "zconvex/grid.hpp"
#include "zconvex/pathmetry.hpp"

namespace zconvex {
namespace {

Polyomino grid(const char* text) { return from_text(text); }

TEST(Pathmetry, TurnsWithinSimpleShapes) {
  const Polyomino bar = grid("####");
  EXPECT_EQ(min_monotone_turns(bar, {0, 0}, {0, 0}), TurnCount(0));
  EXPECT_EQ(min_monotone_turns(bar, {0, 0}, {3, 0}), TurnCount(0));

  const Polyomino square = grid("##\n##");
  EXPECT_EQ(min_monotone_turns(square, {0, 0}, {1, 1}), TurnCount(1));
  EXPECT_EQ(min_monotone_turns(square, {1, 1}, {0, 0}), TurnCount(1));

  const Polyomino stair = grid("##.\n.##\n..#");
  EXPECT_EQ(min_monotone_turns(stair, {0, 2}, {2, 0}), TurnCount(3));
  EXPECT_EQ(min_monotone_turns(stair, {1, 2}, {2, 1}), TurnCount(1));
}

TEST(Pathmetry, UnreachableInNonConvexShape) {
  const Polyomino u = grid("#.#\n###");
  const TurnCount t = min_monotone_turns(u, {0, 1}, {2, 1});
  EXPECT_FALSE(t.reachable());
  EXPECT_EQ(t.str(), "unreachable");
  EXPECT_EQ(min_monotone_turns(u, {0, 1}, {2, 0}), TurnCount(1));
}

TEST(Pathmetry, RejectsCellsOutside) {
  const Polyomino bar = grid("##");
  EXPECT_THROW(min_monotone_turns(bar, {0, 0}, {0, 1}), PathError);
  EXPECT_THROW(min_monotone_turns(bar, {5, 0}, {0, 0}), PathError);
}

TEST(Pathmetry, DegreeExamples) {
  EXPECT_EQ(convexity_degree(grid("#")), 0);
  EXPECT_EQ(convexity_degree(grid("###")), 0);
  EXPECT_EQ(convexity_degree(grid("##\n##")), 1);
  EXPECT_EQ(convexity_degree(grid("#.\n##")), 1);
  EXPECT_EQ(convexity_degree(grid("##.\n.##\n..#")), 3);
  EXPECT_EQ(convexity_degree(grid(".#.\n###\n.#.")), 1);
  EXPECT_THROW(convexity_degree(grid("#.#\n###")), PathError);
}

TEST(Pathmetry, WitnessAttainsDegree) {
  const Polyomino stair = grid("##.\n.##\n..#");
  const DegreeWitness w = convexity_witness(stair);
  EXPECT_EQ(w.degree, 3);
  EXPECT_EQ(min_monotone_turns(stair, w.a, w.b), TurnCount(3));
}

TEST(Pathmetry, ClassPredicates) {
  const Polyomino stair = grid("##.\n.##\n..#");
  EXPECT_FALSE(is_l_convex(stair));
  EXPECT_FALSE(is_z_convex(stair));
  EXPECT_TRUE(is_k_convex(stair, 3));
  EXPECT_TRUE(is_k_convex(stair, 7));
  EXPECT_TRUE(is_z_convex(grid("##.\n.##")));
  EXPECT_FALSE(is_l_convex(grid("##.\n.##")));
  EXPECT_TRUE(is_l_convex(grid(".#.\n###")));
}

TEST(Pathmetry, SweepAgreesWithPairwiseSearch) {
  enumerate_convex(7, [](const Polyomino& p) {
    int worst = 0;
    for (const Cell& a : p.cells())
      for (const Cell& b : p.cells()) {
        const TurnCount ab = min_monotone_turns(p, a, b);
        ASSERT_TRUE(ab.reachable());
        EXPECT_EQ(ab, min_monotone_turns(p, b, a));
        worst = std::max(worst, ab.value());
      }
    EXPECT_EQ(convexity_degree(p), worst) << to_text(p);
  });
}

TEST(Pathmetry, DegreeIsInvariantUnderSymmetry) {
  enumerate_convex(8, [](const Polyomino& p) {
    const int k = convexity_degree(p);
    for (const Polyomino& q : symmetries(p)) EXPECT_EQ(convexity_degree(q), k);
    EXPECT_EQ(k == 0, p.width() == 1 || p.height() == 1);
    EXPECT_EQ(is_k_convex(p, k), true);
    if (k > 0) EXPECT_FALSE(is_k_convex(p, k - 1));
  });
}

TEST(Pathmetry, ClassCountsAtSemiPerimeterSix) {
  int l = 0, z = 0, total = 0;
  enumerate_convex(6, [&](const Polyomino& p) {
    if (semi_perimeter(p) != 6) return;
    ++total;
    l += is_l_convex(p);
    z += is_z_convex(p);
  });
  EXPECT_EQ(total, 120);
  EXPECT_EQ(l, 82);
  EXPECT_EQ(z, 116);
}

}  // namespace
}  // namespace zconvex
