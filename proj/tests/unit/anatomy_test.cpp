#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "zconvex/anatomy.hpp"
#include "zconvex/census.hpp"
#include "zconvex/grid.hpp"
#include "zconvex/pathmetry.hpp"

namespace zconvex {
namespace {

Polyomino grid(const char* text) { return from_text(text); }

const Polyomino kStair = from_text("##.\n.##\n..#");

TEST(Anatomy, CenteredExamples) {
  EXPECT_TRUE(is_centered(grid("###\n###")));
  EXPECT_TRUE(is_centered(grid("#.\n##")));
  EXPECT_TRUE(is_centered(grid(".#.\n###\n.#.")));
  EXPECT_FALSE(is_centered(kStair));
  EXPECT_FALSE(is_centered(grid("##.\n.##")));
}

TEST(Anatomy, ClassifyExamples) {
  EXPECT_EQ(classify(grid("###")), ClassLabel::Centered);
  EXPECT_EQ(classify(kStair), ClassLabel::Descending);
  EXPECT_EQ(classify(reflect_vertically(kStair)), ClassLabel::Ascending);
  EXPECT_EQ(to_string(ClassLabel::Descending), "Descending");
  EXPECT_THROW(classify(grid("#.#\n###")), AnatomyError);
}

TEST(Anatomy, ReflectionSwapsAscendingAndDescending) {
  std::map<std::pair<int, int>, int> asc, desc;
  enumerate_convex(8, [&](const Polyomino& p) {
    const ClassLabel c = classify(p);
    const ClassLabel r = classify(reflect_vertically(p));
    if (c == ClassLabel::Centered) EXPECT_EQ(r, ClassLabel::Centered);
    if (c == ClassLabel::Ascending) {
      EXPECT_EQ(r, ClassLabel::Descending);
      ++asc[{p.width(), p.height()}];
    }
    if (c == ClassLabel::Descending) {
      EXPECT_EQ(r, ClassLabel::Ascending);
      ++desc[{p.width(), p.height()}];
    }
  });
  EXPECT_EQ(asc, desc);
  EXPECT_FALSE(desc.empty());
}

TEST(Anatomy, CenteredPathShapeCharacterisesCentered) {
  enumerate_convex(8, [](const Polyomino& p) { EXPECT_EQ(has_centered_paths(p), is_centered(p)) << to_text(p); });
}

TEST(Anatomy, CenteredIsZConvex) {
  enumerate_convex(8, [](const Polyomino& p) {
    if (is_centered(p)) EXPECT_TRUE(is_z_convex(p)) << to_text(p);
  });
}

TEST(Anatomy, StaircaseRegions) {
  const Regions r = regions(kStair);
  EXPECT_EQ(r.row_x, 2);
  EXPECT_EQ(r.row_y, 2);
  EXPECT_EQ(r.col_s, 1);
  EXPECT_EQ(r.col_t, 1);
  EXPECT_TRUE(r.omega.empty());
  EXPECT_TRUE(r.lambda.empty());
  EXPECT_EQ(std::set<Cell>(r.theta.begin(), r.theta.end()), (std::set<Cell>{{2, 0}, {2, 1}}));
  EXPECT_EQ(std::set<Cell>(r.xi.begin(), r.xi.end()), (std::set<Cell>{{0, 2}, {1, 2}, {1, 1}}));
  EXPECT_THROW(regions(grid("##\n##")), AnatomyError);
}

TEST(Anatomy, RegionsPartitionTheCells) {
  enumerate_convex(8, [](const Polyomino& p) {
    if (classify(p) != ClassLabel::Descending) return;
    const Regions r = regions(p);
    std::multiset<Cell> all;
    for (const auto* part : {&r.omega, &r.xi, &r.theta, &r.lambda}) all.insert(part->begin(), part->end());
    EXPECT_EQ(all.size(), p.size());
    EXPECT_EQ(std::set<Cell>(all.begin(), all.end()), std::set<Cell>(p.cells().begin(), p.cells().end()));
    for (const Cell& c : r.omega) EXPECT_GT(c.y, r.row_x);
    for (const Cell& c : r.theta) EXPECT_GT(c.x, r.col_t);
    EXPECT_GE(r.row_x, r.row_y);
    EXPECT_LE(r.col_s, r.col_t);
  });
}

TEST(Anatomy, RenderRegionsMarksEveryCell) {
  const std::string s = render_regions(kStair, regions(kStair));
  EXPECT_EQ(std::count(s.begin(), s.end(), 'x'), 3);
  EXPECT_EQ(std::count(s.begin(), s.end(), 't'), 2);
  EXPECT_EQ(std::count(s.begin(), s.end(), 'l'), 0);
}

TEST(Anatomy, ReductionIsIdentityWithoutLambda) {
  const Reduced red = reduce(kStair);
  EXPECT_EQ(red.image, kStair);
  EXPECT_THROW(reduce(grid("###")), AnatomyError);
}

TEST(Anatomy, ReductionCriterion) {
  long checked = 0;
  enumerate_convex(9, [&](const Polyomino& p) {
    if (classify(p) != ClassLabel::Descending) return;
    ++checked;
    if (!check_property1(p)) {
      EXPECT_FALSE(is_z_convex(p)) << to_text(p);
      return;
    }
    const Reduced red = reduce(p);
    EXPECT_TRUE(is_convex(red.image));
    EXPECT_LE(red.image.size(), p.size());
    EXPECT_EQ(is_z_convex(p), is_z_convex(red.image)) << to_text(p);
  });
  EXPECT_GT(checked, 0);
}

TEST(Anatomy, ReductionHookIsListed) {
  enumerate_convex(8, [](const Polyomino& p) {
    if (classify(p) != ClassLabel::Descending || !is_z_convex(p)) return;
    const Reduced red = reduce(p);
    const std::vector<HookSpec> hooks = enumerate_hooks(red.image);
    EXPECT_NE(std::find(hooks.begin(), hooks.end(), red.hook), hooks.end()) << to_text(p);
  });
}

TEST(Anatomy, DominoHooks) {
  const Polyomino domino = grid("##");
  const std::vector<HookSpec> any = enumerate_hooks(domino, HookRule::AnyCorner);
  ASSERT_EQ(any.size(), 1u);
  EXPECT_EQ(any[0].arm_row, 0);
  EXPECT_EQ(any[0].corner_col, 0);
  EXPECT_EQ(any[0].type, HookType::A);
  EXPECT_EQ(any[0].k_stat, 0);
  // The next column is not strictly below the arm.
  EXPECT_TRUE(enumerate_hooks(domino, HookRule::Reduction).empty());
}

TEST(Anatomy, SingleCellHasNoHook) {
  EXPECT_TRUE(enumerate_hooks(grid("#"), HookRule::AnyCorner).empty());
  EXPECT_TRUE(enumerate_hooks(grid("#"), HookRule::Reduction).empty());
}

TEST(Anatomy, ReductionHooksAreNonNegative) {
  const HookedCensus h = hooked_census(10, HookRule::Reduction);
  for (const auto* counts : {&h.all_a, &h.all_b})
    for (const auto& [key, n] : *counts) {
      EXPECT_GE(std::get<2>(key), 0);
      EXPECT_GT(n, 0);
    }
}

TEST(Anatomy, AnyCornerAdmitsNegativeStatistic) {
  bool negative = false;
  enumerate_convex(8, [&](const Polyomino& p) {
    if (classify(p) == ClassLabel::Ascending) return;
    for (const HookSpec& h : enumerate_hooks(p, HookRule::AnyCorner)) negative = negative || h.k_stat < 0;
  });
  EXPECT_TRUE(negative);
}

TEST(Anatomy, HookedCensusSplitsCentered) {
  const HookedCensus h = hooked_census(8);
  for (const auto& [key, n] : h.centered_a) EXPECT_LE(n, h.all_a.at(key));
  for (const auto& [key, n] : h.centered_b) EXPECT_LE(n, h.all_b.at(key));
}

}  // namespace
}  // namespace zconvex
