#include "zconvex/gf.hpp"

#include <algorithm>

namespace zconvex {

namespace {

BiSeries sq(const BiSeries& f) { return f * f; }

}  // namespace

BiSeries gf_convex(int order) {
  const BiSeries x = BiSeries::x(order);
  const BiSeries y = BiSeries::y(order);
  const BiSeries one = BiSeries::one(order);
  const BiSeries d = solve_d(order);
  const BiSeries inv_delta = invert(delta(order));
  const BiSeries xy = x * y;
  return Rational(8) * sq(xy) * d * sq(inv_delta) + xy * (one - x - xy - y) * inv_delta;
}

UniSeries gf_lconvex_univariate(int order) {
  const UniSeries t = UniSeries::t(order);
  const UniSeries one = UniSeries::one(order);
  const UniSeries t2 = t * t;
  const UniSeries numerator = t2 * (one - Rational(2) * t + t2);
  return numerator * invert(one - Rational(4) * t + Rational(2) * t2);
}

StackSeries gf_stack(int order) {
  const BiSeries x = BiSeries::x(order);
  const BiSeries y = BiSeries::y(order);
  const BiSeries one = BiSeries::one(order);
  const BiSeries inv_den = invert(sq(one - x) - y);
  BiSeries s = x * (one - x) * inv_den;
  BiSeries s_strict = x * (one - x) * (one - y) * inv_den;
  return {std::move(s), std::move(s_strict)};
}

TriSeries stack_in_aux(int order, bool strict, bool mark_columns) {
  TriSeries w = aux_monomial(order);
  if (mark_columns) w = w * lift_aux(BiSeries::x(order));
  const TriSeries y = lift_aux(BiSeries::y(order));
  const TriSeries wstar = star(w);
  // Baseline w^+, then rows each narrower than the one below.
  TriSeries s = plus(w) * star(wstar * wstar * y);
  if (strict) s = s * (TriSeries::one(order) - y);
  return s;
}

BiSeries gf_centered_hadamard(int order) {
  const TriSeries product =
      hadamard(stack_in_aux(order, true, true), stack_in_aux(order, true, false));
  const USeries collapsed = collapse(product);
  if (u_degree(collapsed) > 0) throw GfError("centered Hadamard product picked up a u term");
  return plus(BiSeries::y(order)) * u_coefficient(collapsed, 0);
}

BiSeries gf_centered_closed(int order) {
  const BiSeries x = BiSeries::x(order);
  const BiSeries y = BiSeries::y(order);
  const BiSeries one = BiSeries::one(order);
  const BiSeries numerator = x * y * (one - y - x * y - Rational(2) * x + sq(x)) * (one - y);
  const BiSeries den = (one - x - y) *
                       (sq(x) - Rational(2) * x * y - Rational(2) * x + sq(y) - Rational(2) * y + one);
  return numerator * invert(den);
}

BiSeries gf_centered(int order) {
  BiSeries via_hadamard = gf_centered_hadamard(order);
  if (!(via_hadamard == gf_centered_closed(order)))
    throw GfError("centered series: Hadamard construction and closed form disagree");
  return via_hadamard;
}

Toolbox::Toolbox(int n)
    : order(n),
      x(BiSeries::x(n)),
      y(BiSeries::y(n)),
      one(BiSeries::one(n)),
      ystar(star(y)),
      yplus(plus(y)) {
  z = x * ystar;
  zstar = star(z);
  zplus = plus(z);
  st = star(lift_u(zstar * y) * u_monomial(n));
  pi = plus(sq(zstar) * y);
}

HookedCentered gf_centered_hooked(int order) {
  // Inside F_A the Hadamard variable marks the columns left of the leg; each
  // of them also counts as a column, hence z -> aux x.
  const TriSeries x = lift_aux(BiSeries::x(order));
  const TriSeries y = lift_aux(BiSeries::y(order));
  const TriSeries u = lift_aux(u_monomial(order));
  const TriSeries z = aux_monomial(order) * x;
  const TriSeries zstar = star(z);
  const TriSeries st = star(zstar * y * u);
  const TriSeries pi = plus(zstar * zstar * y);
  const TriSeries columns_right = plus(x * star(y) * star(y * zstar));

  const TriSeries f_a = y * y * plus(z) * st * columns_right;
  const TriSeries f_b = f_a * z * pi;

  const TriSeries stack = stack_in_aux(order, false, false);
  return {collapse(hadamard(stack, f_a)), collapse(hadamard(stack, f_b))};
}

SystemState solve_system(int order, const SystemOptions& options) {
  if (options.multiplicity < 1) throw GfError("multiplicity must be positive");
  const Toolbox tb(order);
  const HookedCentered centered = gf_centered_hooked(order);
  const BiSeries c = gf_centered(order);

  const USeries st = tb.st;
  const BiSeries ys2 = sq(tb.ystar);
  const BiSeries yp2 = sq(tb.yplus);
  const BiSeries zp2 = sq(tb.zplus);
  const BiSeries x = tb.x;
  const BiSeries pile_step = tb.one + tb.pi * tb.z;  // 1 + pi z
  const USeries u_stair = lift_u(tb.zstar * tb.y) * u_monomial(order);

  // Coefficients that do not depend on the unknowns.
  const USeries k_a1 = lift_u(x * ys2);
  const USeries k_a2 = lift_u(x * tb.ystar * tb.yplus * tb.zplus) * st;
  const USeries k_a3 = lift_u(x * tb.ystar * tb.yplus * tb.zplus);
  const USeries k_a4 = lift_u(x * yp2 * tb.pi * zp2) * st;
  const USeries k_a5 = lift_u(x * yp2 * zp2) * st;
  const USeries zpi = lift_u(tb.z * tb.pi);
  const USeries k_b1 = options.b1 == B1Variant::FromA2 ? k_a2 * zpi : k_a2 * zpi * u_stair;
  const USeries k_b4 = lift_u(x * yp2 * pile_step * zp2);
  const USeries k_b5 = lift_u(x * ys2);
  const bool completed = options.b_equations == BEquations::Completed;
  const USeries k_b6 =
      lift_u(Rational(2) * x * tb.ystar * tb.yplus * (completed ? tb.zplus : tb.zstar));
  const USeries k_b8 = lift_u(x * tb.ystar * tb.yplus * pile_step * tb.zplus);
  const USeries k_b7 = lift_u(x * yp2 * zp2);

  USeries a(order);
  USeries b(order);
  BiSeries p(order);
  SystemState state;
  state.options = options;

  const int max_passes = options.max_iterations > 0 ? options.max_iterations : order + 2;
  for (int pass = 1; pass <= max_passes; ++pass) {
    const USeries a_diag = diag2(a, tb.zstar);
    const BiSeries a_at_zstar = eval_u(a, tb.zstar);

    USeries next_a = centered.type_a + k_a1 * a + k_a2 * a + k_a3 * a_diag +
                     k_a4 * lift_u(a_at_zstar) + k_a5 * a_diag;

    const USeries b_diag = diag2(b, tb.zstar);
    USeries next_b = centered.type_b + k_b1 * a + zpi * k_a4 * lift_u(a_at_zstar) +
                     zpi * k_a5 * a_diag + k_b4 * (diag3(a, tb.zstar) - a_diag) + k_b5 * b +
                     k_b6 * b_diag + k_b7 * diag3(b, tb.zstar);
    if (completed) next_b += k_b8 * (a_diag - a);

    const BiSeries a_at_one = eval_u(next_a, tb.one);
    const BiSeries b_at_one = eval_u(next_b, tb.one);
    const BiSeries p1 = x * tb.ystar * a_at_one;
    const BiSeries p2 = x * tb.yplus * tb.pi * tb.z * a_at_one;
    const BiSeries p3 = x * tb.yplus * pile_step * (tb.zstar * eval_u(next_a, tb.zstar) - a_at_one);
    const BiSeries p4 = x * tb.ystar * b_at_one;
    const BiSeries p5 = x * tb.yplus * (tb.zstar * eval_u(next_b, tb.zstar) - b_at_one);
    BiSeries next_p = c + Rational(options.multiplicity) * (p1 + p2 + p3 + p4 + p5);

    if (!u_degree_bounded_by_rows(next_a) || !u_degree_bounded_by_rows(next_b))
      throw GfError("u-degree exceeded the row count during the system solve");

    state.residual_valuations = {(next_a - a).valuation(), (next_b - b).valuation(),
                                 (next_p - p).valuation()};
    const bool stable = next_a == a && next_b == b && next_p == p;
    a = std::move(next_a);
    b = std::move(next_b);
    p = std::move(next_p);
    if (stable) {
      state.a = std::move(a);
      state.b = std::move(b);
      state.p = std::move(p);
      return state;
    }
    state.iterations = pass;
  }
  throw GfError("inflation system did not stabilise within " + std::to_string(max_passes) +
                " passes at order " + std::to_string(order));
}

BiSeries gf_zconvex_closed(int order) {
  const BiSeries x = BiSeries::x(order);
  const BiSeries y = BiSeries::y(order);
  const BiSeries one = BiSeries::one(order);
  const BiSeries d = solve_d(order);
  const BiSeries inv_delta = invert(delta(order));
  const BiSeries xy = x * y;
  const BiSeries s = one - x - y;
  const BiSeries s2 = sq(s);
  const BiSeries inv_q = invert(s2 - xy);
  const BiSeries first = Rational(2) * sq(xy) * d * sq(inv_delta) * s2 * inv_q;
  const BiSeries second =
      (xy * s2 * (s - xy) - sq(xy) * (s - Rational(3) * xy)) * inv_delta * inv_q;
  return first + second;
}

UniSeries gf_zconvex_univariate_closed(int order) {
  const UniSeries t = UniSeries::t(order);
  const UniSeries one = UniSeries::one(order);
  UniSeries d = diagonal(solve_d(order));
  const UniSeries t2 = t * t;
  const UniSeries t4 = t2 * t2;
  const UniSeries one_2t = one - Rational(2) * t;
  const UniSeries one_4t = one - Rational(4) * t;
  const UniSeries one_3t = one - Rational(3) * t;
  const UniSeries one_t = one - t;
  const UniSeries inv_common = invert(one_4t * one_3t * one_t);
  const UniSeries first = Rational(2) * t4 * one_2t * one_2t * d * invert(one_4t) * inv_common;
  const UniSeries second = t2 *
                           (one - Rational(6) * t + Rational(10) * t2 - Rational(2) * t2 * t - t4) *
                           inv_common;
  return first + second;
}

const std::vector<std::string>& series_targets() {
  static const std::vector<std::string> targets = {
      "convex",   "l-convex", "centered",          "z-convex-closed",  "z-convex-system",
      "d",        "catalan",  "centered-hooked-A", "centered-hooked-B", "hooked-A",
      "hooked-B"};
  return targets;
}

AnySeries series_by_name(const std::string& target, int order) {
  if (target == "convex") return gf_convex(order);
  if (target == "l-convex") return gf_lconvex_univariate(order);
  if (target == "centered") return gf_centered(order);
  if (target == "z-convex-closed") return gf_zconvex_closed(order);
  if (target == "z-convex-system") return solve_system(order).p;
  if (target == "d") return solve_d(order);
  if (target == "catalan") return solve_kernel_root(order);
  if (target == "centered-hooked-A") return gf_centered_hooked(order).type_a;
  if (target == "centered-hooked-B") return gf_centered_hooked(order).type_b;
  if (target == "hooked-A") return solve_system(order).a;
  if (target == "hooked-B") return solve_system(order).b;
  throw GfError("unknown series target '" + target + "'");
}

}  // namespace zconvex
