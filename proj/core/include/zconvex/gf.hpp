#pragma once

// Generating functions for convex, L-convex, centered and Z-convex
// polyominoes, with x marking columns and y marking rows.
//
// Two independent routes produce the Z-convex series: the closed rational
// expression in x, y and d(x,y) (gf_zconvex_closed), and the inflation system
// over hooked polyominoes solved by fixed-point iteration (solve_system).

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "zconvex/series.hpp"

namespace zconvex {

// F(x,y) = 8x^2y^2 d / Delta^2 + xy(1-x-xy-y) / Delta.
BiSeries gf_convex(int order);

// t^2 (1-2t+t^2) / (1-4t+2t^2).
UniSeries gf_lconvex_univariate(int order);

struct StackSeries {
  BiSeries stack;         // S: x marks the baseline, y the height
  BiSeries stack_strict;  // S^>: first row above the baseline strictly shorter
};

// Closed rational forms of the stack series.
StackSeries gf_stack(int order);

// Stack series with the baseline marked by the Hadamard variable instead of
// x; with mark_columns the Hadamard variable is followed by x (aux -> aux x).
TriSeries stack_in_aux(int order, bool strict, bool mark_columns = false);

// C(x,y). Built as y^+ (S^> (.)_x S^>) through the Hadamard kernel and checked
// against the closed rational form; throws GfError if they disagree.
BiSeries gf_centered(int order);
// The closed rational form of C alone.
BiSeries gf_centered_closed(int order);
// y^+ (S^> (.)_x S^>) alone.
BiSeries gf_centered_hadamard(int order);

// Building blocks shared by the centered-hooked series and the system.
// z stands for x y^*: a column together with the rows ending in it.
struct Toolbox {
  explicit Toolbox(int order);

  int order;
  BiSeries x, y, one;
  BiSeries z, zstar, zplus;
  BiSeries ystar, yplus;
  USeries st;  // (z^* y u)^*, staircases with height marked by u
  BiSeries pi;  // ((z^*)^2 y)^+, non-empty piles
};

struct HookedCentered {
  USeries type_a;  // C_A(x,y,u)
  USeries type_b;  // C_B(x,y,u)
};

// Hooked centered polyominoes; u marks the statistic k of the hook.
HookedCentered gf_centered_hooked(int order);

// Which expansion of B1 to use: the product A2 z pi, or the expanded display
// carrying an additional staircase factor z^* y u.
enum class B1Variant { FromA2, ExpandedDisplay };

// The type-B equations as printed, or completed: B6 with z^+ in place of z^*
// (an empty run there duplicates B5) plus the term
//   B8 = x y^* y^+ (1 + pi z) z^+ (A(u,z^*) - A(u))
// for a leg on column T while column S reaches strictly lower.
enum class BEquations { Printed, Completed };

struct SystemOptions {
  B1Variant b1 = B1Variant::FromA2;
  BEquations b_equations = BEquations::Completed;
  // Factor applied to the sum of the P_i: 2 accounts for the ascending
  // polyominoes mirrored from the descending ones.
  int multiplicity = 2;
  // Cap on fixed-point passes; 0 means order + 2.
  int max_iterations = 0;
};

struct SystemState {
  USeries a;  // hooked polyominoes, hook of type A (centered included)
  USeries b;  // hooked polyominoes, hook of type B (centered included)
  BiSeries p;  // Z-convex polyominoes
  int iterations = 0;
  // Valuation of the last change of A, B and P (order+1 once stable).
  std::vector<int> residual_valuations;
  SystemOptions options;
};

class GfError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Solves the inflation system for A, B and P. Every recursive term carries a
// factor x, so the iteration stabilises within order+1 passes; otherwise
// GfError is thrown.
SystemState solve_system(int order, const SystemOptions& options = {});

// Closed form P(x,y) as a rational expression in x, y and d(x,y).
BiSeries gf_zconvex_closed(int order);

// The univariate closed form of P(t).
UniSeries gf_zconvex_univariate_closed(int order);

// Target names accepted by series_by_name().
const std::vector<std::string>& series_targets();

// l-convex is univariate; the hooked targets carry u; the rest are bivariate.
// hooked-A/B are the system's A and B, centered-hooked-A/B are C_A and C_B.
using AnySeries = std::variant<BiSeries, USeries, UniSeries>;
AnySeries series_by_name(const std::string& target, int order);

}  // namespace zconvex
