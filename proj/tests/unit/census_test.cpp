#include <gtest/gtest.h>

#include <map>
#include <set>
#include <vector>

#include "zconvex/census.hpp"
#include "zconvex/grid.hpp"
#include "zconvex/verify.hpp"

namespace zconvex {
namespace {

std::map<int, long long> counts_by_sp(int max_sp) {
  std::map<int, long long> n;
  enumerate_convex(max_sp, [&](const Polyomino& p) { ++n[semi_perimeter(p)]; });
  return n;
}

TEST(Census, SmallConvexCounts) {
  const auto n = counts_by_sp(8);
  const std::map<int, long long> expected{{2, 1}, {3, 2}, {4, 7}, {5, 28}, {6, 120}, {7, 528}, {8, 2344}};
  EXPECT_EQ(n, expected);
}

TEST(Census, EnumeratesDistinctConvexPolyominoes) {
  std::set<Polyomino> seen;
  long long visits = 0;
  enumerate_convex(7, [&](const Polyomino& p) {
    ++visits;
    EXPECT_TRUE(is_convex(p));
    EXPECT_LE(semi_perimeter(p), 7);
    seen.insert(p);
  });
  EXPECT_EQ(static_cast<long long>(seen.size()), visits);
}

TEST(Census, MatchesExhaustiveSearchInsideBoxes) {
  // Every convex subset of a w x h box touching all four sides, by brute force.
  for (int w = 1; w <= 3; ++w)
    for (int h = 1; w + h <= 6 && h <= 4; ++h) {
      long long brute = 0;
      const int n = w * h;
      for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<Cell> cells;
        for (int k = 0; k < n; ++k)
          if (mask & (1u << k)) cells.push_back({k % w, k / w});
        if (!is_connected(cells)) continue;
        const Polyomino p = Polyomino::from_cells(cells);
        if (p.width() == w && p.height() == h && is_convex(p)) ++brute;
      }
      long long enumerated = 0;
      enumerate_convex(w + h, [&](const Polyomino& p) {
        if (p.width() == w && p.height() == h) ++enumerated;
      });
      EXPECT_EQ(enumerated, brute) << w << "x" << h;
    }
}

TEST(Census, PartitionsCoverWidthAndFirstColumn) {
  const auto parts = census_partitions(5);
  std::set<std::pair<int, int>> keys;
  for (const auto& p : parts) {
    EXPECT_GE(p.width, 1);
    EXPECT_GE(p.first_column_height, 1);
    EXPECT_LE(p.width + p.first_column_height, 5);
    keys.insert({p.width, p.first_column_height});
  }
  EXPECT_EQ(keys.size(), parts.size());
  EXPECT_TRUE(keys.count({4, 1}));
  EXPECT_TRUE(keys.count({1, 4}));
}

TEST(Census, ColumnProfileRoundTrip) {
  const Polyomino p = from_text("##.\n.##\n..#");
  const ColumnProfile prof = ColumnProfile::from_polyomino(p);
  EXPECT_EQ(prof.width(), 3);
  EXPECT_EQ(prof.height(), 3);
  EXPECT_EQ(prof.semi_perimeter(), 6);
  EXPECT_EQ(prof.columns()[0], (Interval{2, 2}));
  EXPECT_EQ(prof.to_polyomino(), p);
}

TEST(Census, ColumnProfileValidation) {
  EXPECT_THROW(ColumnProfile(std::vector<Interval>{}), GridError);
  EXPECT_THROW(ColumnProfile(std::vector<Interval>{{2, 1}}), GridError);
  // Not connected: columns do not overlap.
  EXPECT_THROW(ColumnProfile(std::vector<Interval>{{0, 0}, {1, 1}}), GridError);
  // Shifted so the lowest bottom is 0.
  const ColumnProfile shifted(std::vector<Interval>{{3, 4}, {4, 5}});
  EXPECT_EQ(shifted.columns()[0], (Interval{0, 1}));
}

TEST(Census, TableByWidthAndHeight) {
  const CensusTable t = census_table(4, label_filter({"convex"}));
  EXPECT_EQ(t.at({4, 2, 2, "convex"}), 5);
  EXPECT_EQ(t.at({4, 1, 3, "convex"}), 1);
  EXPECT_EQ(t.at({4, 3, 1, "convex"}), 1);
  EXPECT_EQ(totals_by_semiperimeter(t, "convex").at(4), 7);
}

TEST(Census, ZConvexAtSemiPerimeterSix) {
  const CensusTable t = census_table(6, label_filter({"z-convex", "l-convex"}));
  EXPECT_EQ(totals_by_semiperimeter(t, "z-convex").at(6), 116);
  EXPECT_EQ(totals_by_semiperimeter(t, "l-convex").at(6), 82);
}

TEST(Census, CenteredAtSemiPerimeterFive) {
  const CensusTable t = census_table(5, label_filter({"centered"}));
  EXPECT_EQ(totals_by_semiperimeter(t, "centered").at(5), 26);
}

TEST(Census, ClassCountsAreTransposeSymmetric) {
  const CensusTable t = census_table(8, label_filter({"convex", "l-convex", "z-convex", "degree"}));
  for (const auto& [k, n] : t) {
    const auto it = t.find({k.semiperimeter, k.height, k.width, k.class_label});
    ASSERT_NE(it, t.end()) << k.class_label;
    EXPECT_EQ(it->second, n) << k.class_label << " " << k.width << "x" << k.height;
  }
}

TEST(Census, ParallelMatchesSequential) {
  const Classifier c = standard_classifier();
  EXPECT_EQ(census_table(8, c, 1), census_table(8, c, 3));
}

TEST(Census, ClassifierErrorsNameThePolyomino) {
  const Classifier bad = [](const Polyomino& p) -> std::vector<std::string> {
    if (p.size() == 3 && p.width() == 2) throw std::runtime_error("boom");
    return {"convex"};
  };
  try {
    census_table(4, bad, 2);
    FAIL() << "expected CensusError";
  } catch (const CensusError& e) {
    EXPECT_NE(std::string(e.what()).find("cells"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("boom"), std::string::npos);
  }
}

TEST(Census, RejectsBadArguments) {
  EXPECT_THROW(census_table(1, label_filter({"convex"})), CensusError);
  EXPECT_THROW(census_table(4, label_filter({"convex"}), 0), CensusError);
  EXPECT_THROW(label_filter({"no-such-class"}), CensusError);
}

TEST(Census, CsvRoundTrip) {
  const CensusTable t = census_table(7, standard_classifier());
  const std::string csv = to_csv(t);
  EXPECT_EQ(csv.rfind("semiperimeter,width,height,class,count\n", 0), 0u);
  EXPECT_EQ(census_from_csv(csv), t);
  EXPECT_THROW(census_from_csv("semiperimeter,width,height,class,count\n1,2,x,convex,3\n"), CensusError);
  EXPECT_THROW(census_from_csv("bad header\n"), CensusError);
}

TEST(Census, JsonRows) {
  const std::string js = to_json(census_table(2, label_filter({"convex"})));
  EXPECT_NE(js.find("\"semiperimeter\":2"), std::string::npos);
  EXPECT_NE(js.find("\"count\""), std::string::npos);
}

TEST(Census, ClosedFormCount) {
  const auto n = counts_by_sp(10);
  for (const auto& [sp, count] : n) EXPECT_EQ(convex_count_formula(sp), static_cast<long>(count)) << sp;
  EXPECT_EQ(convex_count_formula(12), 894312);
  EXPECT_THROW(convex_count_formula(1), std::invalid_argument);
}

}  // namespace
}  // namespace zconvex
