#pragma once

// Exhaustive generation of convex polyominoes by semi-perimeter.
//
// A convex polyomino is generated as its sequence of column intervals. The
// bottoms form a valley (non-increasing, then non-decreasing), the tops a
// mountain, and consecutive intervals overlap; any prefix violating this is
// pruned, so non-convex candidates are never built.

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "zconvex/grid.hpp"
#include "zconvex/series.hpp"

namespace zconvex {

struct Interval {
  int bottom = 0;
  int top = 0;

  int length() const { return top - bottom + 1; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

class ColumnProfile {
 public:
  ColumnProfile() = default;
  // Validates the convexity invariants and shifts to min bottom = 0.
  explicit ColumnProfile(std::vector<Interval> columns);
  // Throws GridError if p is not convex.
  static ColumnProfile from_polyomino(const Polyomino& p);

  const std::vector<Interval>& columns() const { return columns_; }
  int width() const { return static_cast<int>(columns_.size()); }
  int height() const;
  int semi_perimeter() const { return width() + height(); }
  Polyomino to_polyomino() const;

  friend bool operator==(const ColumnProfile&, const ColumnProfile&) = default;

 private:
  friend class ProfileBuilder;
  std::vector<Interval> columns_;
};

// Work unit for parallel enumeration: every convex polyomino of the given
// width whose leftmost column has the given height.
struct CensusPartition {
  int width = 0;
  int first_column_height = 0;
};

std::vector<CensusPartition> census_partitions(int max_sp);

using ProfileVisitor = std::function<void(const ColumnProfile&)>;
using PolyominoVisitor = std::function<void(const Polyomino&)>;

void enumerate_partition(int max_sp, const CensusPartition& part, const ProfileVisitor& visit);

// Every convex polyomino with semi-perimeter <= max_sp, exactly once, in a
// deterministic order. max_sp must be >= 2.
void enumerate_convex_profiles(int max_sp, const ProfileVisitor& visit);
void enumerate_convex(int max_sp, const PolyominoVisitor& visit);

struct CensusKey {
  int semiperimeter = 0;
  int width = 0;
  int height = 0;
  std::string class_label;

  friend auto operator<=>(const CensusKey&, const CensusKey&) = default;
};

using CensusTable = std::map<CensusKey, Integer>;

// Labels a convex polyomino; one count is recorded per label.
using Classifier = std::function<std::vector<std::string>(const Polyomino&)>;

class CensusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact counts grouped by (semi-perimeter, width, height, label). Partitions
// are processed by `workers` threads with private tables merged by addition,
// so the result does not depend on the worker count. A classifier exception
// is rethrown as CensusError naming the polyomino in JSON form.
CensusTable census_table(int max_sp, const Classifier& classify, int workers = 1);

// Sum of counts per semi-perimeter for one label.
std::map<int, Integer> totals_by_semiperimeter(const CensusTable& table, const std::string& label);

// CSV with header "semiperimeter,width,height,class,count", rows in key order.
std::string to_csv(const CensusTable& table);
CensusTable census_from_csv(const std::string& csv);
// {"rows":[{"semiperimeter":..,"width":..,"height":..,"class":..,"count":..}]}
std::string to_json(const CensusTable& table);

}  // namespace zconvex
