#include "zconvex/anatomy.hpp"

#include <algorithm>
#include <limits>

#include "zconvex/census.hpp"
#include "zconvex/pathmetry.hpp"

namespace zconvex {

std::string to_string(ClassLabel label) {
  switch (label) {
    case ClassLabel::Centered: return "Centered";
    case ClassLabel::Ascending: return "Ascending";
    case ClassLabel::Descending: return "Descending";
  }
  return "?";
}

std::string to_string(HookType type) { return type == HookType::A ? "A" : "B"; }

bool is_centered(const Polyomino& p) {
  for (int y = 0; y < p.height(); ++y) {
    const Span r = p.row_extent(y);
    if (r.low == 0 && r.high == p.width() - 1) return true;
  }
  return false;
}

ClassLabel classify(const Polyomino& p) {
  if (!is_convex(p)) throw AnatomyError("classification needs a convex polyomino");
  if (is_centered(p)) return ClassLabel::Centered;
  const Span first = p.column_extent(0);
  const Span last = p.column_extent(p.width() - 1);
  if (last.high < first.low) return ClassLabel::Descending;
  if (last.low > first.high) return ClassLabel::Ascending;
  throw AnatomyError("non-centered polyomino is neither ascending nor descending: " + to_json(p));
}

namespace {

void require_descending(const Polyomino& p) {
  if (classify(p) != ClassLabel::Descending)
    throw AnatomyError("expected a descending polyomino: " + to_json(p));
}

}  // namespace

Regions regions(const Polyomino& p) {
  require_descending(p);
  Regions r;
  const Span first = p.column_extent(0);
  r.row_x = first.high;
  r.row_y = first.low;
  r.col_s = p.row_extent(r.row_x).high;
  r.col_t = p.row_extent(r.row_y).high;
  r.extent_s = p.column_extent(r.col_s);
  r.extent_t = p.column_extent(r.col_t);

  // Right ends may only move east when walking down from X to Y.
  for (int y = r.row_x; y > r.row_y; --y)
    if (p.row_extent(y - 1).high < p.row_extent(y).high)
      throw AnatomyError("boundary between rows X and Y is not a south-east path: " + to_json(p));

  for (const Cell& c : p.cells()) {
    const bool hook = (c.y == r.row_y && c.x <= r.col_s) || (c.x == r.col_s && c.y <= r.row_y);
    if (c.y > r.row_x)
      r.omega.push_back(c);
    else if (c.x > r.col_t)
      r.theta.push_back(c);
    else if (hook || (c.y < r.row_y && c.x < r.col_s))
      r.xi.push_back(c);
    else
      r.lambda.push_back(c);
  }
  return r;
}

std::string render_regions(const Polyomino& p, const Regions& r) {
  std::string grid = to_text(p);
  const int stride = p.width() + 1;
  auto mark = [&](const std::vector<Cell>& cells, char ch) {
    for (const Cell& c : cells)
      grid[static_cast<std::size_t>((p.height() - 1 - c.y) * stride + c.x)] = ch;
  };
  mark(r.omega, 'w');
  mark(r.xi, 'x');
  mark(r.theta, 't');
  mark(r.lambda, 'l');
  return grid;
}

bool check_property1(const Polyomino& p) {
  const Regions r = regions(p);
  for (const Cell& c : r.theta)
    if (c.y < r.extent_s.low) return false;
  return true;
}

std::vector<HookSpec> enumerate_hooks(const Polyomino& q, HookRule rule) {
  std::vector<HookSpec> hooks;
  const int w = q.width();
  const Span first = q.column_extent(0);
  // suffix_low[c] = lowest cell strictly right of column c
  std::vector<int> suffix_low(static_cast<std::size_t>(w), std::numeric_limits<int>::max());
  for (int c = w - 2; c >= 0; --c)
    suffix_low[static_cast<std::size_t>(c)] =
        std::min(suffix_low[static_cast<std::size_t>(c + 1)], q.column_extent(c + 1).low);

  for (int row = first.low; row <= first.high; ++row) {
    const int end = q.row_extent(row).high;
    const int from = rule == HookRule::Reduction ? end : 0;
    for (int c = from; c <= end && c < w - 1; ++c) {
      const Span leg = q.column_extent(c);
      const Span next = q.column_extent(c + 1);
      if (rule == HookRule::Reduction) {
        if (next.high >= row) continue;
        if (suffix_low[static_cast<std::size_t>(c)] < leg.low) continue;
      }
      hooks.push_back({row, c, leg.low == 0 ? HookType::A : HookType::B, next.low - leg.low});
    }
  }
  return hooks;
}

Reduced reduce(const Polyomino& p) {
  const Regions r = regions(p);
  const int drop = r.row_x - r.row_y;
  const int shift = r.col_t - r.col_s;
  std::vector<Cell> cells;
  cells.reserve(p.size() - r.lambda.size());
  for (const Cell& c : r.xi) cells.push_back(c);
  for (const Cell& c : r.omega) cells.push_back({c.x, c.y - drop});
  for (const Cell& c : r.theta) cells.push_back({c.x - shift, c.y});

  int min_y = std::numeric_limits<int>::max();
  for (const Cell& c : cells) min_y = std::min(min_y, c.y);
  Polyomino image = Polyomino::from_cells(cells);

  const int arm = r.row_y - min_y;
  const Span leg = image.column_extent(r.col_s);
  HookSpec hook{arm, r.col_s, leg.low == 0 ? HookType::A : HookType::B, 0};
  if (r.col_s + 1 < image.width()) hook.k_stat = image.column_extent(r.col_s + 1).low - leg.low;
  return {std::move(image), hook};
}

bool has_centered_paths(const Polyomino& p) {
  const auto& cells = p.cells();
  auto column_run = [&](int x, int lo, int hi) {
    for (int y = lo; y <= hi; ++y)
      if (!p.contains(x, y)) return false;
    return true;
  };
  auto row_run = [&](int y, int x0, int x1) {
    for (int x = std::min(x0, x1); x <= std::max(x0, x1); ++x)
      if (!p.contains(x, y)) return false;
    return true;
  };
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      Cell a = cells[i];
      Cell b = cells[j];
      if (a.y < b.y) std::swap(a, b);
      bool found = false;
      for (int row = b.y; row <= a.y && !found; ++row)
        found = column_run(a.x, row, a.y) && row_run(row, a.x, b.x) && column_run(b.x, b.y, row);
      if (!found) return false;
    }
  }
  return true;
}

HookedCensus hooked_census(int max_sp, HookRule rule) {
  HookedCensus out;
  enumerate_convex(max_sp, [&](const Polyomino& p) {
    const ClassLabel label = classify(p);
    if (label == ClassLabel::Ascending) return;
    if (!is_z_convex(p)) return;
    for (const HookSpec& h : enumerate_hooks(p, rule)) {
      const auto key = std::make_tuple(p.width(), p.height(), h.k_stat);
      if (h.type == HookType::A) {
        ++out.all_a[key];
        if (label == ClassLabel::Centered) ++out.centered_a[key];
      } else {
        ++out.all_b[key];
        if (label == ClassLabel::Centered) ++out.centered_b[key];
      }
    }
  });
  return out;
}

}  // namespace zconvex
