#include <gtest/gtest.h>

#include <map>

#include "zconvex/anatomy.hpp"
#include "zconvex/census.hpp"
#include "zconvex/gf.hpp"
#include "zconvex/pathmetry.hpp"

namespace zconvex {
namespace {

std::vector<Integer> diag(const BiSeries& f, int from) {
  std::vector<Integer> out;
  const UniSeries d = diagonal(f);
  for (int n = from; n <= d.order(); ++n) out.push_back(d[n].get_num());
  return out;
}

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

// Coefficient-wise comparison a <= b.
bool dominated(const BiSeries& a, const BiSeries& b) {
  for (int n = 0; n <= a.order(); ++n)
    for (int i = 0; i <= n; ++i)
      if (a(i, n - i) > b(i, n - i)) return false;
  return true;
}

TEST(Gf, ConvexSeries) {
  const BiSeries f = gf_convex(9);
  EXPECT_EQ(diag(f, 2), ints({1, 2, 7, 28, 120, 528, 2344, 10416}));
  EXPECT_EQ(f, f.transposed());
  EXPECT_EQ(f(1, 1), 1);
  EXPECT_EQ(f(2, 2), 5);
  EXPECT_EQ(f(0, 3), 0);
}

TEST(Gf, LConvexUnivariate) {
  const UniSeries g = gf_lconvex_univariate(9);
  const long expected[] = {0, 0, 1, 2, 7, 24, 82, 280, 956, 3264};
  for (int n = 0; n <= 9; ++n) EXPECT_EQ(g[n], expected[n]) << n;
}

TEST(Gf, StacksMatchCensus) {
  const int n = 8;
  const StackSeries s = gf_stack(n);
  std::map<std::pair<int, int>, long> stacks, strict;
  enumerate_convex(n, [&](const Polyomino& p) {
    for (int x = 0; x < p.width(); ++x)
      if (p.column_extent(x).low != 0) return;
    ++stacks[{p.width(), p.height()}];
    if (p.height() == 1 || p.row_count(1) < p.width()) ++strict[{p.width(), p.height()}];
  });
  // y marks the rows above the baseline.
  for (int i = 1; i <= n; ++i)
    for (int j = 0; i + j + 1 <= n; ++j) {
      EXPECT_EQ(s.stack(i, j), stacks[std::pair(i, j + 1)]) << i << "," << j;
      EXPECT_EQ(s.stack_strict(i, j), strict[std::pair(i, j + 1)]) << i << "," << j;
    }
  EXPECT_EQ(s.stack(1, 5), 1);
}

TEST(Gf, CenteredSeries) {
  const int n = 9;
  const BiSeries c = gf_centered(n);
  EXPECT_EQ(diag(c, 2), ints({1, 2, 7, 26, 100, 392, 1552, 6176}));
  EXPECT_EQ(c, gf_centered_closed(n));
  EXPECT_EQ(c, gf_centered_hadamard(n));
  std::map<std::pair<int, int>, long> census;
  enumerate_convex(n, [&](const Polyomino& p) {
    if (is_centered(p)) ++census[{p.width(), p.height()}];
  });
  for (int i = 1; i <= n; ++i)
    for (int j = 1; i + j <= n; ++j) EXPECT_EQ(c(i, j), census[std::pair(i, j)]) << i << "," << j;
  // Centered is not a transpose-invariant class.
  EXPECT_NE(c, c.transposed());
}

TEST(Gf, HookedCenteredMatchesBruteForce) {
  const int n = 8;
  const HookedCentered h = gf_centered_hooked(n);
  EXPECT_TRUE(u_degree_bounded_by_rows(h.type_a));
  EXPECT_TRUE(u_degree_bounded_by_rows(h.type_b));
  // The horizontal domino carries no reduction hook.
  EXPECT_TRUE(h.type_a(2, 1).is_zero());
  const HookedCensus brute = hooked_census(n);
  auto check = [&](const USeries& s, const HookCounts& counts) {
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j)
        for (int k = 0; k <= std::max(0, s(i, j).degree()); ++k) {
          const auto it = counts.find({i, j, k});
          const long expected = it == counts.end() ? 0 : static_cast<long>(it->second);
          EXPECT_EQ(s(i, j).coeff(k), expected) << i << "," << j << " u^" << k;
        }
    for (const auto& [key, count] : counts) {
      const auto [i, j, k] = key;
      if (i + j <= n) EXPECT_EQ(s(i, j).coeff(k), static_cast<long>(count));
    }
  };
  check(h.type_a, brute.centered_a);
  check(h.type_b, brute.centered_b);
}

TEST(Gf, ZConvexClosedForm) {
  const int n = 10;
  const BiSeries p = gf_zconvex_closed(n);
  EXPECT_EQ(diag(p, 2), ints({1, 2, 7, 28, 116, 484, 2022, 8448, 35290}));
  EXPECT_EQ(p, p.transposed());
  EXPECT_EQ(diagonal(p), gf_zconvex_univariate_closed(n));
  EXPECT_TRUE(dominated(gf_centered(n), p));
  EXPECT_TRUE(dominated(p, gf_convex(n)));
}

TEST(Gf, SystemMatchesClosedForm) {
  const int n = 11;
  const SystemState s = solve_system(n);
  EXPECT_EQ(s.p, gf_zconvex_closed(n));
  EXPECT_LE(s.iterations, n + 2);
  for (int v : s.residual_valuations) EXPECT_EQ(v, n + 1);
  EXPECT_TRUE(u_degree_bounded_by_rows(s.a));
  EXPECT_TRUE(u_degree_bounded_by_rows(s.b));
}

TEST(Gf, PrintedTypeBEquationsOvercountFromNine) {
  SystemOptions o;
  o.b_equations = BEquations::Printed;
  const SystemState s = solve_system(10, o);
  const std::vector<Integer> d = diag(s.p, 2);
  EXPECT_EQ(d[6], 2022);  // sp 8 still agrees
  EXPECT_EQ(d[7], 8450);  // sp 9: two extra
}

TEST(Gf, SystemVariantsDisagree) {
  const int n = 9;
  const BiSeries closed = gf_zconvex_closed(n);
  SystemOptions single;
  single.multiplicity = 1;
  EXPECT_EQ(diag(solve_system(n, single).p, 2)[3], 27);
  // The expanded B1 display first over-counts at semi-perimeter 10.
  SystemOptions expanded;
  expanded.b1 = B1Variant::ExpandedDisplay;
  EXPECT_EQ(diag(solve_system(10, expanded).p, 2)[8], 35288);
  EXPECT_EQ(solve_system(n, expanded).p, closed);
}

TEST(Gf, SeriesByName) {
  for (const std::string& name : series_targets()) EXPECT_NO_THROW(series_by_name(name, 5)) << name;
  EXPECT_THROW(series_by_name("nonsense", 5), GfError);
  EXPECT_EQ(std::get<BiSeries>(series_by_name("convex", 6)), gf_convex(6));
  EXPECT_TRUE(std::holds_alternative<USeries>(series_by_name("hooked-A", 4)));
}

}  // namespace
}  // namespace zconvex
