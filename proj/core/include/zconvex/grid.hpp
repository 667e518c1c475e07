#pragma once

// Cell sets on the square lattice and the translation-canonical polyomino.
//
// Coordinates: x is the column abscissa (east-positive), y the row ordinate
// (north-positive). A Polyomino is always translated so that its minimum x
// and minimum y are both 0.

#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zconvex {

struct Cell {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct BoundingRect {
  int width = 0;
  int height = 0;

  friend bool operator==(const BoundingRect&, const BoundingRect&) = default;
};

// Contiguous run [low, high] along one axis; low > high marks an empty line.
struct Span {
  int low = 0;
  int high = -1;

  bool empty() const { return low > high; }
  int length() const { return empty() ? 0 : high - low + 1; }
  bool contains(int v) const { return low <= v && v <= high; }
  friend bool operator==(const Span&, const Span&) = default;
};

class GridError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Polyomino {
 public:
  // Single cell at the origin.
  Polyomino();

  // Translates, deduplicates and validates. Throws GridError on empty or
  // disconnected input.
  static Polyomino from_cells(std::span<const Cell> cells);

  // Cells sorted by (x, y).
  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  BoundingRect bounds() const { return {width_, height_}; }
  int width() const { return width_; }
  int height() const { return height_; }

  bool contains(Cell c) const;
  bool contains(int x, int y) const { return contains(Cell{x, y}); }

  // Lowest and highest ordinate in column x; only meaningful as an interval
  // when the column is contiguous (see is_column_convex).
  Span column_extent(int x) const { return columns_.at(static_cast<std::size_t>(x)); }
  Span row_extent(int y) const { return rows_.at(static_cast<std::size_t>(y)); }
  int column_count(int x) const { return column_counts_.at(static_cast<std::size_t>(x)); }
  int row_count(int y) const { return row_counts_.at(static_cast<std::size_t>(y)); }

  friend bool operator==(const Polyomino& a, const Polyomino& b) { return a.cells_ == b.cells_; }
  friend auto operator<=>(const Polyomino& a, const Polyomino& b) { return a.cells_ <=> b.cells_; }

 private:
  void index();

  std::vector<Cell> cells_;
  int width_ = 0;
  int height_ = 0;
  std::vector<Span> columns_;
  std::vector<Span> rows_;
  std::vector<int> column_counts_;
  std::vector<int> row_counts_;
  std::vector<unsigned char> occupied_;  // row-major, width_ * height_
};

// Same as Polyomino::from_cells.
Polyomino canonicalize(std::span<const Cell> cells);

bool is_connected(std::span<const Cell> cells);

bool is_column_convex(const Polyomino& p);
bool is_row_convex(const Polyomino& p);
bool is_convex(const Polyomino& p);

// Half the number of unit edges on the boundary. Equals width + height for
// convex polyominoes.
int semi_perimeter(const Polyomino& p);

// The 8 images under the dihedral group of the square, canonicalized, in the
// order: identity, rot90, rot180, rot270, mirror-x, mirror-y, transpose,
// anti-transpose.
std::vector<Polyomino> symmetries(const Polyomino& p);

// Horizontal axis reflection (y -> -y).
Polyomino reflect_vertically(const Polyomino& p);
// x <-> y.
Polyomino transpose(const Polyomino& p);

// Text grid: '#' cell, '.' empty, first line is the top row, lines separated
// by '\n'. to_text pads every line to the full width and omits a trailing
// newline.
Polyomino from_text(std::string_view text);
std::string to_text(const Polyomino& p);

// {"cells":[[x,y],...]} with cells sorted by (x, y).
Polyomino from_json(std::string_view json);
std::string to_json(const Polyomino& p);

// Reads either format: text starting with '{' is JSON, anything else a grid.
Polyomino parse_polyomino(std::string_view input);

}  // namespace zconvex
