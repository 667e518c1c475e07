#include "zconvex/series.hpp"

#include <algorithm>
#include <sstream>

namespace zconvex {

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(const Rational& c) {
  if (sgn(c) != 0) c_.push_back(c);
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (Rational& c : c_) c.canonicalize();
  trim();
}

UPoly UPoly::monomial(int degree, const Rational& c) {
  if (degree < 0) throw SeriesError("negative u-degree");
  UPoly p;
  if (sgn(c) == 0) return p;
  p.c_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
  p.c_.back() = c;
  return p;
}

Rational UPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return c_[static_cast<std::size_t>(k)];
}

Rational UPoly::evaluate(const Rational& u) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * u + *it;
  return r;
}

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    c_.clear();
    return *this;
  }
  for (Rational& c : c_) c *= s;
  return *this;
}

void UPoly::add_product(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return;
  const std::size_t need = a.c_.size() + b.c_.size() - 1;
  if (c_.size() < need) c_.resize(need, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c_[i + j] += a.c_[i] * b.c_[j];
  }
  trim();
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  UPoly r;
  r.add_product(a, b);
  return r;
}

std::string to_string(const UPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    const Rational c = p.coeff(k);
    if (sgn(c) == 0) continue;
    if (!first) os << (sgn(c) > 0 ? "+" : "");
    first = false;
    if (k == 0) {
      os << c;
    } else {
      if (c == -1) {
        os << "-";
      } else if (c != 1) {
        os << c << "*";
      }
      os << "u";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const UPoly& p) { return os << to_string(p); }

// ---------------------------------------------------------------- AuxPoly

AuxPoly::AuxPoly(const UPoly& c) {
  if (!c.is_zero()) c_.push_back(c);
}

AuxPoly::AuxPoly(std::vector<UPoly> coeffs) : c_(std::move(coeffs)) { trim(); }

AuxPoly AuxPoly::monomial(int degree, const UPoly& c) {
  if (degree < 0) throw SeriesError("negative Hadamard degree");
  AuxPoly p;
  if (c.is_zero()) return p;
  p.c_.assign(static_cast<std::size_t>(degree) + 1, UPoly());
  p.c_.back() = c;
  return p;
}

UPoly AuxPoly::coeff(int m) const {
  if (m < 0 || m > degree()) return UPoly();
  return c_[static_cast<std::size_t>(m)];
}

void AuxPoly::truncate(int max_degree) {
  if (degree() > max_degree) c_.resize(static_cast<std::size_t>(max_degree) + 1);
  trim();
}

void AuxPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

AuxPoly& AuxPoly::operator+=(const AuxPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

AuxPoly& AuxPoly::operator-=(const AuxPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

AuxPoly& AuxPoly::operator*=(const Rational& s) {
  for (UPoly& c : c_) c *= s;
  trim();
  return *this;
}

void AuxPoly::add_product(const AuxPoly& a, const AuxPoly& b) {
  if (a.is_zero() || b.is_zero()) return;
  const std::size_t need = a.c_.size() + b.c_.size() - 1;
  if (c_.size() < need) c_.resize(need);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c_[i + j].add_product(a.c_[i], b.c_[j]);
  }
  trim();
}

AuxPoly operator*(const AuxPoly& a, const AuxPoly& b) {
  AuxPoly r;
  r.add_product(a, b);
  return r;
}

// ---------------------------------------------------------------- inverses

namespace {

template <class C>
TruncatedSeries<C> invert_scalar_constant(const TruncatedSeries<C>& f, const Rational& c0) {
  if (sgn(c0) == 0) throw SeriesError("invert() needs a nonzero constant term");
  const Rational inv0 = 1 / c0;
  // 1/F = (1/c0) * 1/(1 - G) with G = 1 - F/c0.
  TruncatedSeries<C> g = TruncatedSeries<C>::one(f.order()) - f * inv0;
  g.set(0, 0, C());
  return star(g) * inv0;
}

}  // namespace

BiSeries invert(const BiSeries& f) { return invert_scalar_constant(f, f(0, 0)); }

USeries invert(const USeries& f) {
  const UPoly& c = f(0, 0);
  if (c.degree() > 0) throw SeriesError("invert() needs a u-free constant term");
  return invert_scalar_constant(f, c.coeff(0));
}

BiSeries pow(const BiSeries& f, int k) {
  if (k < 0) throw SeriesError("negative power");
  BiSeries r = BiSeries::one(f.order());
  for (int i = 0; i < k; ++i) r = r * f;
  return r;
}

// ---------------------------------------------------------------- UniSeries

UniSeries::UniSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.resize(1);
}

UniSeries UniSeries::t(int order) {
  UniSeries s(order);
  if (order >= 1) s.c_[1] = 1;
  return s;
}

UniSeries UniSeries::one(int order) {
  UniSeries s(order);
  s.c_[0] = 1;
  return s;
}

UniSeries& UniSeries::operator+=(const UniSeries& o) {
  if (o.order() != order()) throw SeriesError("order mismatch");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

UniSeries& UniSeries::operator-=(const UniSeries& o) {
  if (o.order() != order()) throw SeriesError("order mismatch");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

UniSeries operator*(const UniSeries& a, const UniSeries& b) {
  if (a.order() != b.order()) throw SeriesError("order mismatch");
  UniSeries r(a.order());
  const std::size_t n = a.c_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

UniSeries operator*(const Rational& s, UniSeries a) {
  for (Rational& c : a.c_) c *= s;
  return a;
}

UniSeries invert(const UniSeries& f) {
  if (sgn(f[0]) == 0) throw SeriesError("invert() needs a nonzero constant term");
  UniSeries r(f.order());
  r[0] = 1 / f[0];
  for (int n = 1; n <= f.order(); ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) acc += f[k] * r[n - k];
    r[n] = -acc * r[0];
  }
  return r;
}

UniSeries diagonal(const BiSeries& f) {
  UniSeries r(f.order());
  for (int n = 0; n <= f.order(); ++n)
    for (int i = 0; i <= n; ++i) r[n] += f(i, n - i);
  return r;
}

// ---------------------------------------------------------------- conversions

USeries lift_u(const BiSeries& f) {
  USeries r(f.order());
  for (int n = 0; n <= f.order(); ++n)
    for (int i = 0; i <= n; ++i) r.set(i, n - i, UPoly(f(i, n - i)));
  return r;
}

TriSeries lift_aux(const USeries& f) {
  TriSeries r(f.order());
  for (int n = 0; n <= f.order(); ++n)
    for (int i = 0; i <= n; ++i) r.set(i, n - i, AuxPoly(f(i, n - i)));
  return r;
}

TriSeries lift_aux(const BiSeries& f) { return lift_aux(lift_u(f)); }

USeries u_monomial(int order, int degree) {
  return USeries::constant(order, UPoly::monomial(degree));
}

TriSeries aux_monomial(int order, int degree) {
  return TriSeries::constant(order, AuxPoly::monomial(degree));
}

BiSeries u_coefficient(const USeries& a, int k) {
  BiSeries r(a.order());
  for (int n = 0; n <= a.order(); ++n)
    for (int i = 0; i <= n; ++i) r.set(i, n - i, a(i, n - i).coeff(k));
  return r;
}

int u_degree(const USeries& a) {
  int d = -1;
  for (int n = 0; n <= a.order(); ++n)
    for (int i = 0; i <= n; ++i) d = std::max(d, a(i, n - i).degree());
  return d;
}

bool u_degree_bounded_by_rows(const USeries& a) {
  for (int n = 0; n <= a.order(); ++n)
    for (int i = 0; i <= n; ++i)
      if (a(i, n - i).degree() > n - i) return false;
  return true;
}

// ---------------------------------------------------------------- operators

TriSeries hadamard(const TriSeries& f, const TriSeries& g) {
  if (f.order() != g.order()) throw SeriesError("order mismatch");
  const int order = f.order();
  TriSeries r(order);
  for (int n1 = 0; n1 <= order; ++n1) {
    for (int i1 = 0; i1 <= n1; ++i1) {
      const AuxPoly& a = f(i1, n1 - i1);
      if (a.is_zero()) continue;
      for (int n2 = 0; n1 + n2 <= order; ++n2) {
        for (int i2 = 0; i2 <= n2; ++i2) {
          const AuxPoly& b = g(i2, n2 - i2);
          if (b.is_zero()) continue;
          const std::size_t top = std::min(a.coeffs().size(), b.coeffs().size());
          std::vector<UPoly> acc(top);
          for (std::size_t m = 0; m < top; ++m) acc[m].add_product(a.coeffs()[m], b.coeffs()[m]);
          AuxPoly term(std::move(acc));
          if (term.is_zero()) continue;
          const int i = i1 + i2;
          const int j = n1 - i1 + n2 - i2;
          r.set(i, j, r(i, j) + term);
        }
      }
    }
  }
  return r;
}

USeries collapse(const TriSeries& f) {
  USeries r(f.order());
  for (int n = 0; n <= f.order(); ++n) {
    for (int i = 0; i <= n; ++i) {
      UPoly acc;
      for (const UPoly& c : f(i, n - i).coeffs()) acc += c;
      r.set(i, n - i, std::move(acc));
    }
  }
  return r;
}

BiSeries eval_u(const USeries& a, const BiSeries& v) {
  if (a.order() != v.order()) throw SeriesError("order mismatch");
  const int top = u_degree(a);
  BiSeries r(a.order());
  for (int k = top; k >= 0; --k) r = r * v + u_coefficient(a, k);
  return r;
}

namespace {

// T_i = sum_{n >= i} a_n V^{n-i}, built by T_i = a_i + V T_{i+1}.
std::vector<BiSeries> tail_sums(const USeries& a, const BiSeries& v) {
  const int top = u_degree(a);
  std::vector<BiSeries> t(static_cast<std::size_t>(std::max(top, 0) + 1), BiSeries(a.order()));
  BiSeries acc(a.order());
  for (int k = top; k >= 0; --k) {
    acc = u_coefficient(a, k) + v * acc;
    t[static_cast<std::size_t>(k)] = acc;
  }
  return t;
}

USeries assemble_u(const std::vector<BiSeries>& by_u_degree, int order) {
  USeries r(order);
  for (int n = 0; n <= order; ++n) {
    for (int i = 0; i <= n; ++i) {
      std::vector<Rational> c(by_u_degree.size());
      for (std::size_t k = 0; k < by_u_degree.size(); ++k) c[k] = by_u_degree[k](i, n - i);
      r.set(i, n - i, UPoly(std::move(c)));
    }
  }
  return r;
}

}  // namespace

USeries diag2(const USeries& a, const BiSeries& v) {
  if (a.order() != v.order()) throw SeriesError("order mismatch");
  return assemble_u(tail_sums(a, v), a.order());
}

BiSeries diag2_eval(const USeries& a, const BiSeries& v1, const BiSeries& v2) {
  if (a.order() != v1.order() || a.order() != v2.order()) throw SeriesError("order mismatch");
  // sum_i V1^i T_i(V2).
  const std::vector<BiSeries> t = tail_sums(a, v2);
  BiSeries r(a.order());
  for (auto it = t.rbegin(); it != t.rend(); ++it) r = r * v1 + *it;
  return r;
}

USeries diag3(const USeries& a, const BiSeries& v) {
  if (a.order() != v.order()) throw SeriesError("order mismatch");
  // D_l = sum_m (m+1) a_{l+m} V^m satisfies D_l = T_l + V D_{l+1}.
  const std::vector<BiSeries> t = tail_sums(a, v);
  std::vector<BiSeries> d(t.size(), BiSeries(a.order()));
  BiSeries acc(a.order());
  for (std::size_t k = t.size(); k-- > 0;) {
    acc = t[k] + v * acc;
    d[k] = acc;
  }
  return assemble_u(d, a.order());
}

// ---------------------------------------------------------------- algebraic roots

BiSeries solve_d(int order) {
  if (order < 0) throw SeriesError("negative order");
  const BiSeries x = BiSeries::x(order);
  const BiSeries y = BiSeries::y(order);
  BiSeries d(order);
  // Valuation of the error grows by one per pass.
  for (int pass = 0; pass <= order + 1; ++pass) {
    BiSeries next = (x + d) * (y + d);
    if (next == d) return d;
    d = std::move(next);
  }
  throw SeriesError("solve_d did not converge");
}

BiSeries solve_kernel_root(int order) {
  if (order < 0) throw SeriesError("negative order");
  const BiSeries x = BiSeries::x(order);
  const BiSeries y = BiSeries::y(order);
  const BiSeries one = BiSeries::one(order);
  BiSeries c = one;
  for (int pass = 0; pass <= order + 1; ++pass) {
    BiSeries next = one + (x - y) * c + y * c * c;
    if (next == c) return c;
    c = std::move(next);
  }
  throw SeriesError("solve_kernel_root did not converge");
}

BiSeries delta(int order) {
  const BiSeries x = BiSeries::x(order);
  const BiSeries y = BiSeries::y(order);
  const BiSeries s = BiSeries::one(order) - x - y;
  return s * s - Rational(4) * x * y;
}

// ---------------------------------------------------------------- rendering

namespace {

template <class C, class Fmt>
std::string table_impl(const TruncatedSeries<C>& f, Fmt fmt) {
  std::ostringstream os;
  for (int n = 0; n <= f.order(); ++n) {
    os << n << ":";
    for (int i = n; i >= 0; --i) os << " (" << i << "," << n - i << ")=" << fmt(f(i, n - i));
    os << "\n";
  }
  return os.str();
}

}  // namespace

std::string to_table(const BiSeries& f) {
  return table_impl(f, [](const Rational& c) { return c.get_str(); });
}

std::string to_table(const USeries& f) {
  return table_impl(f, [](const UPoly& c) { return to_string(c); });
}

}  // namespace zconvex
