#pragma once

// Structure of convex polyominoes: centered / ascending / descending classes,
// the four-region split of a descending polyomino, hooks and the reduction
// map that turns a descending polyomino into a hooked one.
//
// For a non-centered polyomino, X and Y are the rows of the top and bottom
// cells of the leftmost column. S is the column holding the right end of row
// X, T the column holding the right end of row Y.

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "zconvex/grid.hpp"

namespace zconvex {

enum class ClassLabel { Centered, Ascending, Descending };

std::string to_string(ClassLabel label);

class AnatomyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Some row touches both vertical sides of the bounding box.
bool is_centered(const Polyomino& p);

// Descending: rightmost column entirely below row Y. Ascending: entirely above
// row X. Throws AnatomyError for non-convex input, or if a non-centered
// polyomino is neither.
ClassLabel classify(const Polyomino& p);

struct Regions {
  std::vector<Cell> omega;   // above row X
  std::vector<Cell> xi;      // below Y and left of S, plus the hook
  std::vector<Cell> theta;   // right of T
  std::vector<Cell> lambda;  // everything else
  int row_x = 0;
  int row_y = 0;
  int col_s = 0;
  int col_t = 0;
  Span extent_s;
  Span extent_t;
};

// Throws AnatomyError unless p is descending.
Regions regions(const Polyomino& p);

// Text grid with one letter per cell: w (omega), x (xi), t (theta), l (lambda).
std::string render_regions(const Polyomino& p, const Regions& r);

// No cell of theta lies strictly below the lowest cell of column S.
bool check_property1(const Polyomino& p);

enum class HookType { A, B };

struct HookSpec {
  int arm_row = 0;
  int corner_col = 0;
  HookType type = HookType::A;
  int k_stat = 0;

  friend bool operator==(const HookSpec&, const HookSpec&) = default;
};

std::string to_string(HookType type);

// Which corners count as hooks.
//
// Reduction: the hooks produced by reduce(). The arm is a whole row through
// the leftmost column and the corner is its right end; the next column lies
// strictly below the arm and nothing right of the corner is lower than the
// leg. These are the hooks counted by the hooked generating functions.
//
// AnyCorner: every column from the leftmost up to the end of the arm row with
// a nonempty region to its right; k may then be negative.
enum class HookRule { Reduction, AnyCorner };

// Hooks on a centered or descending polyomino, by arm row then corner.
std::vector<HookSpec> enumerate_hooks(const Polyomino& q, HookRule rule = HookRule::Reduction);

struct Reduced {
  Polyomino image;
  HookSpec hook;  // in the coordinates of image
};

// Deletes lambda, glues omega down onto row Y and theta left against column S.
// Throws AnatomyError unless p is descending.
Reduced reduce(const Polyomino& p);

// Independent test of the path shape characterising centered polyominoes:
// every pair of cells, taken from the upper one, is joined by a path going
// down, then horizontally, then down again.
bool has_centered_paths(const Polyomino& p);

// (width, height, k) -> count
using HookCounts = std::map<std::tuple<int, int, int>, long long>;

struct HookedCensus {
  HookCounts centered_a;
  HookCounts centered_b;
  HookCounts all_a;  // centered and descending
  HookCounts all_b;
};

// Counts hooks over Z-convex centered and descending polyominoes with
// semi-perimeter <= max_sp.
HookedCensus hooked_census(int max_sp, HookRule rule = HookRule::Reduction);

}  // namespace zconvex
