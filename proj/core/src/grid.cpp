#include "zconvex/grid.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace zconvex {

namespace {

std::vector<Cell> normalized(std::span<const Cell> cells) {
  std::vector<Cell> v(cells.begin(), cells.end());
  if (v.empty()) throw GridError("polyomino needs at least one cell");
  int min_x = std::numeric_limits<int>::max();
  int min_y = std::numeric_limits<int>::max();
  for (const Cell& c : v) {
    min_x = std::min(min_x, c.x);
    min_y = std::min(min_y, c.y);
  }
  for (Cell& c : v) {
    c.x -= min_x;
    c.y -= min_y;
  }
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// 4-neighbour flood fill over sorted, translated cells.
bool connected_sorted(const std::vector<Cell>& v) {
  int w = 0;
  int h = 0;
  for (const Cell& c : v) {
    w = std::max(w, c.x + 1);
    h = std::max(h, c.y + 1);
  }
  std::vector<unsigned char> grid(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), 0);
  auto at = [&](int x, int y) -> unsigned char& {
    return grid[static_cast<std::size_t>(y) * static_cast<std::size_t>(w) + static_cast<std::size_t>(x)];
  };
  for (const Cell& c : v) at(c.x, c.y) = 1;
  std::vector<Cell> stack = {v.front()};
  at(v.front().x, v.front().y) = 2;
  std::size_t seen = 1;
  constexpr int dx[] = {1, -1, 0, 0};
  constexpr int dy[] = {0, 0, 1, -1};
  while (!stack.empty()) {
    const Cell c = stack.back();
    stack.pop_back();
    for (int d = 0; d < 4; ++d) {
      const int nx = c.x + dx[d];
      const int ny = c.y + dy[d];
      if (nx < 0 || ny < 0 || nx >= w || ny >= h || at(nx, ny) != 1) continue;
      at(nx, ny) = 2;
      ++seen;
      stack.push_back({nx, ny});
    }
  }
  return seen == v.size();
}

}  // namespace

Polyomino::Polyomino() : cells_{Cell{0, 0}} { index(); }

Polyomino Polyomino::from_cells(std::span<const Cell> cells) {
  std::vector<Cell> v = normalized(cells);
  if (!connected_sorted(v)) throw GridError("cells are not edge-connected");
  Polyomino p;
  p.cells_ = std::move(v);
  p.index();
  return p;
}

void Polyomino::index() {
  width_ = 0;
  height_ = 0;
  for (const Cell& c : cells_) {
    width_ = std::max(width_, c.x + 1);
    height_ = std::max(height_, c.y + 1);
  }
  columns_.assign(static_cast<std::size_t>(width_), Span{height_, -1});
  rows_.assign(static_cast<std::size_t>(height_), Span{width_, -1});
  column_counts_.assign(static_cast<std::size_t>(width_), 0);
  row_counts_.assign(static_cast<std::size_t>(height_), 0);
  occupied_.assign(static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_), 0);
  for (const Cell& c : cells_) {
    Span& col = columns_[static_cast<std::size_t>(c.x)];
    col.low = std::min(col.low, c.y);
    col.high = std::max(col.high, c.y);
    Span& row = rows_[static_cast<std::size_t>(c.y)];
    row.low = std::min(row.low, c.x);
    row.high = std::max(row.high, c.x);
    ++column_counts_[static_cast<std::size_t>(c.x)];
    ++row_counts_[static_cast<std::size_t>(c.y)];
    occupied_[static_cast<std::size_t>(c.y) * static_cast<std::size_t>(width_) +
              static_cast<std::size_t>(c.x)] = 1;
  }
}

bool Polyomino::contains(Cell c) const {
  if (c.x < 0 || c.y < 0 || c.x >= width_ || c.y >= height_) return false;
  return occupied_[static_cast<std::size_t>(c.y) * static_cast<std::size_t>(width_) +
                   static_cast<std::size_t>(c.x)] != 0;
}

Polyomino canonicalize(std::span<const Cell> cells) { return Polyomino::from_cells(cells); }

bool is_connected(std::span<const Cell> cells) {
  if (cells.empty()) return false;
  return connected_sorted(normalized(cells));
}

bool is_column_convex(const Polyomino& p) {
  for (int x = 0; x < p.width(); ++x)
    if (p.column_count(x) != p.column_extent(x).length()) return false;
  return true;
}

bool is_row_convex(const Polyomino& p) {
  for (int y = 0; y < p.height(); ++y)
    if (p.row_count(y) != p.row_extent(y).length()) return false;
  return true;
}

bool is_convex(const Polyomino& p) { return is_column_convex(p) && is_row_convex(p); }

int semi_perimeter(const Polyomino& p) {
  // Every cell contributes 4 edges, every shared edge removes 2.
  int shared = 0;
  for (const Cell& c : p.cells()) {
    if (p.contains(c.x + 1, c.y)) ++shared;
    if (p.contains(c.x, c.y + 1)) ++shared;
  }
  const int boundary = 4 * static_cast<int>(p.size()) - 2 * shared;
  return boundary / 2;
}

namespace {

template <class F>
Polyomino mapped(const Polyomino& p, F f) {
  std::vector<Cell> v;
  v.reserve(p.size());
  for (const Cell& c : p.cells()) v.push_back(f(c));
  return Polyomino::from_cells(v);
}

}  // namespace

std::vector<Polyomino> symmetries(const Polyomino& p) {
  return {
      p,
      mapped(p, [](Cell c) { return Cell{-c.y, c.x}; }),
      mapped(p, [](Cell c) { return Cell{-c.x, -c.y}; }),
      mapped(p, [](Cell c) { return Cell{c.y, -c.x}; }),
      mapped(p, [](Cell c) { return Cell{-c.x, c.y}; }),
      mapped(p, [](Cell c) { return Cell{c.x, -c.y}; }),
      mapped(p, [](Cell c) { return Cell{c.y, c.x}; }),
      mapped(p, [](Cell c) { return Cell{-c.y, -c.x}; }),
  };
}

Polyomino reflect_vertically(const Polyomino& p) {
  return mapped(p, [](Cell c) { return Cell{c.x, -c.y}; });
}

Polyomino transpose(const Polyomino& p) {
  return mapped(p, [](Cell c) { return Cell{c.y, c.x}; });
}

Polyomino from_text(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw GridError("empty grid");

  std::vector<Cell> cells;
  const int rows = static_cast<int>(lines.size());
  for (int r = 0; r < rows; ++r) {
    const std::string_view line = lines[static_cast<std::size_t>(r)];
    for (std::size_t x = 0; x < line.size(); ++x) {
      const char ch = line[x];
      if (ch == '#') {
        cells.push_back({static_cast<int>(x), rows - 1 - r});
      } else if (ch != '.') {
        throw GridError(std::string("invalid grid character '") + ch + "'");
      }
    }
  }
  if (cells.empty()) throw GridError("grid has no cells");
  return Polyomino::from_cells(cells);
}

std::string to_text(const Polyomino& p) {
  std::string out;
  out.reserve(static_cast<std::size_t>((p.width() + 1) * p.height()));
  for (int y = p.height() - 1; y >= 0; --y) {
    for (int x = 0; x < p.width(); ++x) out.push_back(p.contains(x, y) ? '#' : '.');
    if (y > 0) out.push_back('\n');
  }
  return out;
}

Polyomino from_json(std::string_view json) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw GridError(std::string("invalid polyomino JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("cells") || !doc["cells"].is_array())
    throw GridError("polyomino JSON needs a \"cells\" array");
  std::vector<Cell> cells;
  for (const auto& entry : doc["cells"]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
        !entry[1].is_number_integer())
      throw GridError("each cell must be an [x, y] integer pair");
    cells.push_back({entry[0].get<int>(), entry[1].get<int>()});
  }
  return Polyomino::from_cells(cells);
}

std::string to_json(const Polyomino& p) {
  std::ostringstream os;
  os << "{\"cells\":[";
  bool first = true;
  for (const Cell& c : p.cells()) {
    if (!first) os << ",";
    first = false;
    os << "[" << c.x << "," << c.y << "]";
  }
  os << "]}";
  return os.str();
}

Polyomino parse_polyomino(std::string_view input) {
  const std::size_t first = input.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw GridError("empty polyomino input");
  if (input[first] == '{') return from_json(input);
  return from_text(input.substr(first));
}

}  // namespace zconvex
