#include "zconvex/pathmetry.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <vector>

namespace zconvex {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

int sign(int v) { return (v > 0) - (v < 0); }

void require_cell(const Polyomino& p, Cell c, const char* which) {
  if (!p.contains(c))
    throw PathError(std::string(which) + " cell (" + std::to_string(c.x) + "," + std::to_string(c.y) +
                    ") is not in the polyomino");
}

// Per-source dynamic programme: within each quadrant around the source every
// monotone path moves away from it, so cells can be relaxed in sweep order.
// h[c] / v[c] hold the fewest turns reaching c with a last horizontal /
// vertical step.
class TurnSweep {
 public:
  explicit TurnSweep(const Polyomino& p)
      : p_(p), w_(p.width()), h_(p.height()), hor_(cells()), ver_(cells()) {}

  // Fills best(b) = min turns from a to b for every cell b.
  void run(Cell a) {
    best_.assign(cells(), kInf);
    for (int sx : {1, -1})
      for (int sy : {1, -1}) quadrant(a, sx, sy);
  }

  int best(Cell b) const { return best_[at(b.x, b.y)]; }

 private:
  std::size_t cells() const { return static_cast<std::size_t>(w_) * static_cast<std::size_t>(h_); }
  std::size_t at(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(w_) + static_cast<std::size_t>(x);
  }

  void quadrant(Cell a, int sx, int sy) {
    const int x_end = sx > 0 ? w_ : -1;
    const int y_end = sy > 0 ? h_ : -1;
    for (int y = a.y; y != y_end; y += sy) {
      for (int x = a.x; x != x_end; x += sx) {
        const std::size_t i = at(x, y);
        int hv = kInf;
        int vv = kInf;
        if (!p_.contains(x, y)) {
          hor_[i] = kInf;
          ver_[i] = kInf;
          continue;
        }
        if (x == a.x && y == a.y) {
          hv = 0;
          vv = 0;
        } else {
          if (x != a.x) {
            const std::size_t j = at(x - sx, y);
            hv = std::min(hor_[j], ver_[j] + 1);
          }
          if (y != a.y) {
            const std::size_t j = at(x, y - sy);
            vv = std::min(ver_[j], hor_[j] + 1);
          }
        }
        hor_[i] = hv;
        ver_[i] = vv;
        best_[i] = std::min(best_[i], std::min(hv, vv));
      }
    }
  }

  const Polyomino& p_;
  int w_;
  int h_;
  std::vector<int> hor_;
  std::vector<int> ver_;
  std::vector<int> best_;
};

// Largest turn count from sources in cell order; stops once it exceeds limit.
DegreeWitness sweep_degree(const Polyomino& p, int limit) {
  if (!is_convex(p)) throw PathError("convexity degree needs a convex polyomino");
  TurnSweep sweep(p);
  DegreeWitness out{0, p.cells().front(), p.cells().front()};
  const auto& cells = p.cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    sweep.run(cells[i]);
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      const int t = sweep.best(cells[j]);
      if (t >= kInf) throw PathError("convex polyomino with an unreachable cell pair");
      if (t > out.degree) out = {t, cells[i], cells[j]};
    }
    if (out.degree > limit) break;
  }
  return out;
}

}  // namespace

TurnCount min_monotone_turns(const Polyomino& p, Cell a, Cell b) {
  require_cell(p, a, "source");
  require_cell(p, b, "target");
  if (a == b) return TurnCount(0);

  struct Step {
    int dx;
    int dy;
  };
  std::vector<Step> steps;
  if (const int dx = sign(b.x - a.x)) steps.push_back({dx, 0});
  if (const int dy = sign(b.y - a.y)) steps.push_back({0, dy});

  const int w = p.width();
  const std::size_t n = static_cast<std::size_t>(w) * static_cast<std::size_t>(p.height());
  auto state = [&](Cell c, std::size_t d) {
    return (static_cast<std::size_t>(c.y) * static_cast<std::size_t>(w) + static_cast<std::size_t>(c.x)) * 2 + d;
  };
  std::vector<int> dist(2 * n, kInf);
  std::deque<std::pair<Cell, std::size_t>> queue;
  for (std::size_t d = 0; d < steps.size(); ++d) {
    const Cell next{a.x + steps[d].dx, a.y + steps[d].dy};
    if (!p.contains(next)) continue;
    dist[state(next, d)] = 0;
    queue.push_back({next, d});
  }
  while (!queue.empty()) {
    const auto [c, d] = queue.front();
    queue.pop_front();
    const int here = dist[state(c, d)];
    if (c == b) return TurnCount(here);
    for (std::size_t e = 0; e < steps.size(); ++e) {
      const Cell next{c.x + steps[e].dx, c.y + steps[e].dy};
      if (!p.contains(next)) continue;
      const int cost = here + (e == d ? 0 : 1);
      int& slot = dist[state(next, e)];
      if (cost >= slot) continue;
      slot = cost;
      if (e == d)
        queue.push_front({next, e});
      else
        queue.push_back({next, e});
    }
  }
  return TurnCount::unreachable();
}

DegreeWitness convexity_witness(const Polyomino& p) {
  return sweep_degree(p, std::numeric_limits<int>::max());
}

int convexity_degree(const Polyomino& p) { return convexity_witness(p).degree; }

bool is_k_convex(const Polyomino& p, int k) {
  if (k < 0) throw PathError("k must be non-negative");
  return sweep_degree(p, k).degree <= k;
}

bool is_l_convex(const Polyomino& p) { return is_k_convex(p, 1); }
bool is_z_convex(const Polyomino& p) { return is_k_convex(p, 2); }

}  // namespace zconvex
