#include <gtest/gtest.h>

#include "zconvex/series.hpp"

namespace zconvex {
namespace {

constexpr int kOrder = 10;

Integer binom(unsigned long n, unsigned long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

TEST(Series, ConstructionAndIndexing) {
  const BiSeries x = BiSeries::x(4);
  EXPECT_EQ(x(1, 0), 1);
  EXPECT_EQ(x(0, 1), 0);
  EXPECT_EQ(x.valuation(), 1);
  EXPECT_EQ(BiSeries(4).valuation(), 5);
  EXPECT_THROW(x(5, 0), SeriesError);
  EXPECT_EQ(x.coeff_or_zero(5, 0), 0);
  EXPECT_THROW(BiSeries(-1), SeriesError);
  EXPECT_TRUE(BiSeries::monomial(4, 3, 3).is_zero());
}

TEST(Series, BinomialExpansion) {
  const BiSeries x = BiSeries::x(kOrder), y = BiSeries::y(kOrder);
  const BiSeries s = pow(x + y, 6);
  for (int i = 0; i <= 6; ++i) EXPECT_EQ(s(i, 6 - i), binom(6, static_cast<unsigned long>(i)));
  EXPECT_EQ(s.valuation(), 6);
}

TEST(Series, MultiplicationCommutesAndTruncates) {
  const BiSeries x = BiSeries::x(kOrder), y = BiSeries::y(kOrder);
  const BiSeries a = x + Rational(3) * y * y, b = BiSeries::one(kOrder) - x * y;
  EXPECT_EQ(a * b, b * a);
  EXPECT_TRUE(pow(x, kOrder + 1).is_zero());
  EXPECT_THROW(BiSeries::x(3) * BiSeries::x(4), SeriesError);
}

TEST(Series, InverseAndStar) {
  const BiSeries x = BiSeries::x(kOrder), y = BiSeries::y(kOrder);
  const BiSeries one = BiSeries::one(kOrder);
  const BiSeries geo = invert(one - x - y);
  for (int i = 0; i <= kOrder; ++i)
    for (int j = 0; i + j <= kOrder; ++j) EXPECT_EQ(geo(i, j), binom(static_cast<unsigned long>(i + j), static_cast<unsigned long>(i)));
  EXPECT_EQ(star(x + y), geo);
  EXPECT_EQ(plus(x + y), geo - one);
  EXPECT_EQ(invert(geo) * geo, one);
  EXPECT_THROW(invert(x), SeriesError);
  EXPECT_THROW(star(one), SeriesError);
}

TEST(Series, TransposeAndTruncate) {
  const BiSeries x = BiSeries::x(kOrder), y = BiSeries::y(kOrder);
  const BiSeries f = x * star(Rational(2) * y);
  EXPECT_EQ(f.transposed(), y * star(Rational(2) * x));
  EXPECT_EQ(f.truncated(3), BiSeries::x(3) * star(Rational(2) * BiSeries::y(3)));
  EXPECT_THROW(f.truncated(kOrder + 1), SeriesError);
}

TEST(Series, UPolyArithmetic) {
  const UPoly u = UPoly::monomial(1);
  const UPoly p = (UPoly(1) + u) * (UPoly(1) - u);
  EXPECT_EQ(p, UPoly(std::vector<Rational>{1, 0, -1}));
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.evaluate(3), -8);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(to_string(UPoly(0)), "0");
}

TEST(Series, UnivariateOps) {
  const UniSeries t = UniSeries::t(8);
  const UniSeries g = invert(UniSeries::one(8) - t - t * t);
  // Fibonacci.
  const int fib[] = {1, 1, 2, 3, 5, 8, 13, 21, 34};
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(g[n], fib[n]);
}

TEST(Series, DiagonalSumsAntidiagonals) {
  const BiSeries x = BiSeries::x(6), y = BiSeries::y(6);
  const UniSeries d = diagonal(star(x + y));
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(d[n], Integer(1) << n);
}

TEST(Series, UVariableHelpers) {
  const int n = 6;
  const USeries u = u_monomial(n);
  const USeries f = lift_u(BiSeries::x(n)) * u + lift_u(BiSeries::y(n)) * u * u;
  EXPECT_EQ(u_degree(f), 2);
  EXPECT_EQ(u_coefficient(f, 1), BiSeries::x(n));
  EXPECT_EQ(u_coefficient(f, 2), BiSeries::y(n));
  EXPECT_FALSE(u_degree_bounded_by_rows(f));
  EXPECT_TRUE(u_degree_bounded_by_rows(lift_u(BiSeries::y(n)) * u));
  // f(u = y) = xy + y^3.
  EXPECT_EQ(eval_u(f, BiSeries::y(n)), BiSeries::x(n) * BiSeries::y(n) + pow(BiSeries::y(n), 3));
}

TEST(Series, DiagonalOperators) {
  const int n = 6;
  // a_n = 1 for every n: sum_n sum_{i+j=n} u^i V^j = 1/((1-u)(1-V)).
  const USeries a = lift_u(BiSeries::one(n)) + u_monomial(n) + u_monomial(n, 2) + u_monomial(n, 3);
  const BiSeries v = BiSeries::x(n);
  const USeries d2 = diag2(a, v);
  EXPECT_EQ(u_coefficient(d2, 0), BiSeries::one(n) + v + pow(v, 2) + pow(v, 3));
  EXPECT_EQ(u_coefficient(d2, 1), BiSeries::one(n) + v + pow(v, 2));
  EXPECT_EQ(diag2_eval(a, v, v), BiSeries::one(n) + Rational(2) * v + Rational(3) * pow(v, 2) + Rational(4) * pow(v, 3));
  const USeries d3 = diag3(u_monomial(n, 2), v);
  // n = 2: (3 V^2 + 2 V u + u^2).
  EXPECT_EQ(u_coefficient(d3, 0), Rational(3) * pow(v, 2));
  EXPECT_EQ(u_coefficient(d3, 1), Rational(2) * v);
  EXPECT_EQ(u_coefficient(d3, 2), BiSeries::one(n));
}

TEST(Series, HadamardProduct) {
  const int n = 6;
  const TriSeries w = aux_monomial(n);
  const TriSeries f = lift_aux(BiSeries::y(n)) * star(w);
  const TriSeries g = lift_aux(BiSeries::x(n)) * star(w * lift_aux(BiSeries::y(n)));
  // sum_k y w^k (.) sum_k x y^k w^k = xy sum_k y^k = xy/(1-y).
  EXPECT_EQ(collapse(hadamard(f, g)), lift_u(BiSeries::x(n) * BiSeries::y(n) * star(BiSeries::y(n))));
}

TEST(Series, CatalanRefinements) {
  const BiSeries d = solve_d(kOrder);
  const BiSeries x = BiSeries::x(kOrder), y = BiSeries::y(kOrder);
  EXPECT_EQ(d, (x + d) * (y + d));
  EXPECT_EQ(d(1, 1), 1);
  // Narayana numbers: parallelogram polyominoes by width and height.
  EXPECT_EQ(d(2, 2), 3);
  EXPECT_EQ(d(2, 3), 6);
  EXPECT_EQ(d(3, 3), 20);
  const BiSeries c = solve_kernel_root(kOrder);
  EXPECT_EQ(d, y * (c - BiSeries::one(kOrder)));
  const BiSeries lhs = BiSeries::one(kOrder) - x - y - Rational(2) * d;
  EXPECT_EQ(lhs * lhs, delta(kOrder));
  const UniSeries cat = diagonal(c);
  for (int k = 0; k <= kOrder; ++k)
    EXPECT_EQ(cat[k], binom(2 * static_cast<unsigned long>(k), static_cast<unsigned long>(k)) / (k + 1));
}

TEST(Series, TableRendering) {
  const std::string s = to_table(Rational(1, 2) * BiSeries::x(2));
  EXPECT_NE(s.find("1/2"), std::string::npos);
}

}  // namespace
}  // namespace zconvex
