#pragma once

// Minimal numbers of direction changes along monotone paths.

#include <optional>
#include <stdexcept>
#include <string>

#include "zconvex/grid.hpp"

namespace zconvex {

class TurnCount {
 public:
  TurnCount() = default;  // unreachable
  explicit TurnCount(int value) : value_(value) {}
  static TurnCount unreachable() { return TurnCount(); }

  bool reachable() const { return value_.has_value(); }
  // Throws std::bad_optional_access when unreachable.
  int value() const { return value_.value(); }
  std::string str() const { return reachable() ? std::to_string(*value_) : "unreachable"; }

  friend bool operator==(const TurnCount&, const TurnCount&) = default;

 private:
  std::optional<int> value_;
};

class PathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 0-1 BFS over (cell, last step) with steps restricted to the two directions
// pointing from a towards b. Throws PathError if a or b is not a cell of p.
TurnCount min_monotone_turns(const Polyomino& p, Cell a, Cell b);

struct DegreeWitness {
  int degree = 0;
  Cell a;
  Cell b;
};

// Max over cell pairs of min_monotone_turns, with the first pair (in cell
// order) attaining it. Throws PathError for non-convex input.
DegreeWitness convexity_witness(const Polyomino& p);
int convexity_degree(const Polyomino& p);

// convexity_degree(p) <= k, stopping at the first pair that needs more turns.
bool is_k_convex(const Polyomino& p, int k);
bool is_l_convex(const Polyomino& p);
bool is_z_convex(const Polyomino& p);

}  // namespace zconvex
