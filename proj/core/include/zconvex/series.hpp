#pragma once

// Exact truncated power series in two variables x (columns) and y (rows).
//
// Truncation is by total degree: a series of order N stores the coefficients
// of x^i y^j for i + j <= N and every operation discards anything above N.
// Coefficients are drawn from one of three exact rings:
//
//   Rational  -> BiSeries   plain bivariate series
//   UPoly     -> USeries    coefficients are polynomials in an auxiliary u
//   AuxPoly   -> TriSeries  coefficients are polynomials in a Hadamard
//                           variable (aux) whose coefficients are UPolys
//
// All types are values; operators never mutate their inputs.

#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace zconvex {

using Integer = mpz_class;
using Rational = mpq_class;

class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Polynomial in u with rational coefficients. Trailing zeros are trimmed so
// that equality is structural.
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Rational& c);  // NOLINT: constants promote implicitly
  UPoly(long c) : UPoly(Rational(c)) {}  // NOLINT
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly monomial(int degree, const Rational& c = 1);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational evaluate(const Rational& u) const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const Rational& s);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(UPoly a) { return a *= Rational(-1); }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  // Adds a*b into *this without a temporary.
  void add_product(const UPoly& a, const UPoly& b);

 private:
  void trim();
  std::vector<Rational> c_;
};

// Polynomial in the Hadamard variable over UPoly. Degree capping happens in
// the owning series (see truncate_coeff).
class AuxPoly {
 public:
  AuxPoly() = default;
  AuxPoly(const UPoly& c);  // NOLINT
  AuxPoly(long c) : AuxPoly(UPoly(c)) {}  // NOLINT
  explicit AuxPoly(std::vector<UPoly> coeffs);

  static AuxPoly monomial(int degree, const UPoly& c = UPoly(1));

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  UPoly coeff(int m) const;
  const std::vector<UPoly>& coeffs() const { return c_; }
  void truncate(int max_degree);

  AuxPoly& operator+=(const AuxPoly& o);
  AuxPoly& operator-=(const AuxPoly& o);
  AuxPoly& operator*=(const Rational& s);
  friend AuxPoly operator+(AuxPoly a, const AuxPoly& b) { return a += b; }
  friend AuxPoly operator-(AuxPoly a, const AuxPoly& b) { return a -= b; }
  friend AuxPoly operator-(AuxPoly a) { return a *= Rational(-1); }
  friend AuxPoly operator*(const AuxPoly& a, const AuxPoly& b);
  friend bool operator==(const AuxPoly& a, const AuxPoly& b) { return a.c_ == b.c_; }

  void add_product(const AuxPoly& a, const AuxPoly& b);

 private:
  void trim();
  std::vector<UPoly> c_;
};

// Ring hooks used by TruncatedSeries.
inline bool coeff_is_zero(const Rational& c) { return sgn(c) == 0; }
inline bool coeff_is_zero(const UPoly& c) { return c.is_zero(); }
inline bool coeff_is_zero(const AuxPoly& c) { return c.is_zero(); }
inline void coeff_add_product(Rational& acc, const Rational& a, const Rational& b) { acc += a * b; }
inline void coeff_add_product(UPoly& acc, const UPoly& a, const UPoly& b) { acc.add_product(a, b); }
inline void coeff_add_product(AuxPoly& acc, const AuxPoly& a, const AuxPoly& b) { acc.add_product(a, b); }
inline void truncate_coeff(Rational&, int) {}
inline void truncate_coeff(UPoly&, int) {}
// The Hadamard variable never exceeds the series order.
inline void truncate_coeff(AuxPoly& c, int order) { c.truncate(order); }
// A (0,0) coefficient admissible for star(): zero in every ring, except that
// a pure Hadamard-variable term is allowed because its degree is capped.
inline bool coeff_is_star_safe(const Rational& c) { return coeff_is_zero(c); }
inline bool coeff_is_star_safe(const UPoly& c) { return c.is_zero(); }
inline bool coeff_is_star_safe(const AuxPoly& c) { return c.coeff(0).is_zero(); }

template <class C>
class TruncatedSeries {
 public:
  using coeff_type = C;

  TruncatedSeries() : TruncatedSeries(0) {}
  explicit TruncatedSeries(int order) : order_(order) {
    if (order < 0) throw SeriesError("series order must be non-negative");
    data_.resize(static_cast<std::size_t>(index(0, order) + 1));
  }

  static TruncatedSeries constant(int order, const C& c) {
    TruncatedSeries s(order);
    s.data_[0] = c;
    truncate_coeff(s.data_[0], order);
    return s;
  }
  static TruncatedSeries monomial(int order, int i, int j, const C& c = C(1)) {
    TruncatedSeries s(order);
    if (i + j <= order) {
      s.data_[index(i, j)] = c;
      truncate_coeff(s.data_[index(i, j)], order);
    }
    return s;
  }
  static TruncatedSeries x(int order) { return monomial(order, 1, 0); }
  static TruncatedSeries y(int order) { return monomial(order, 0, 1); }
  static TruncatedSeries one(int order) { return constant(order, C(1)); }

  int order() const { return order_; }

  const C& operator()(int i, int j) const {
    check_index(i, j);
    return data_[index(i, j)];
  }
  // Zero for indices above the order instead of throwing.
  C coeff_or_zero(int i, int j) const {
    if (i < 0 || j < 0 || i + j > order_) return C();
    return data_[index(i, j)];
  }
  void set(int i, int j, C c) {
    check_index(i, j);
    truncate_coeff(c, order_);
    data_[index(i, j)] = std::move(c);
  }

  bool is_zero() const {
    for (const C& c : data_)
      if (!coeff_is_zero(c)) return false;
    return true;
  }

  // Lowest total degree carrying a nonzero coefficient; order()+1 if zero.
  int valuation() const {
    for (int n = 0; n <= order_; ++n)
      for (int i = 0; i <= n; ++i)
        if (!coeff_is_zero(data_[index(i, n - i)])) return n;
    return order_ + 1;
  }

  // Re-truncates to a lower order.
  TruncatedSeries truncated(int order) const {
    if (order > order_) throw SeriesError("cannot raise truncation order");
    TruncatedSeries r(order);
    for (int n = 0; n <= order; ++n)
      for (int i = 0; i <= n; ++i) r.data_[index(i, n - i)] = data_[index(i, n - i)];
    return r;
  }

  // x <-> y.
  TruncatedSeries transposed() const {
    TruncatedSeries r(order_);
    for (int n = 0; n <= order_; ++n)
      for (int i = 0; i <= n; ++i) r.data_[index(n - i, i)] = data_[index(i, n - i)];
    return r;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    check_order(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    check_order(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  TruncatedSeries& operator*=(const Rational& s) {
    for (C& c : data_) c *= s;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator-(TruncatedSeries a) { return a *= Rational(-1); }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }
  friend TruncatedSeries operator*(const Rational& s, TruncatedSeries a) { return a *= s; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_order(b);
    const int n_max = a.order_;
    TruncatedSeries r(n_max);
    for (int n1 = 0; n1 <= n_max; ++n1) {
      for (int i1 = 0; i1 <= n1; ++i1) {
        const C& ca = a.data_[index(i1, n1 - i1)];
        if (coeff_is_zero(ca)) continue;
        for (int n2 = 0; n1 + n2 <= n_max; ++n2) {
          for (int i2 = 0; i2 <= n2; ++i2) {
            const C& cb = b.data_[index(i2, n2 - i2)];
            if (coeff_is_zero(cb)) continue;
            coeff_add_product(r.data_[index(i1 + i2, n1 - i1 + n2 - i2)], ca, cb);
          }
        }
      }
    }
    for (C& c : r.data_) truncate_coeff(c, n_max);
    return r;
  }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.order_ == b.order_ && a.data_ == b.data_;
  }

  static int index(int i, int j) {
    const int n = i + j;
    return n * (n + 1) / 2 + j;
  }

 private:
  void check_index(int i, int j) const {
    if (i < 0 || j < 0 || i + j > order_)
      throw SeriesError("coefficient index (" + std::to_string(i) + "," + std::to_string(j) +
                        ") outside truncation order " + std::to_string(order_));
  }
  void check_order(const TruncatedSeries& o) const {
    if (o.order_ != order_)
      throw SeriesError("order mismatch: " + std::to_string(order_) + " vs " +
                        std::to_string(o.order_));
  }

  int order_;
  std::vector<C> data_;
};

using BiSeries = TruncatedSeries<Rational>;
using USeries = TruncatedSeries<UPoly>;
using TriSeries = TruncatedSeries<AuxPoly>;

// 1/(1-F). Requires a zero constant term (up to a capped Hadamard part).
template <class C>
TruncatedSeries<C> star(const TruncatedSeries<C>& f) {
  if (!coeff_is_star_safe(f(0, 0)))
    throw SeriesError("star() needs a series with zero constant term");
  const auto one = TruncatedSeries<C>::one(f.order());
  TruncatedSeries<C> r = one;
  // Each pass fixes at least one more degree of total weight
  // (x,y)-degree + Hadamard degree, which is bounded by 2*order.
  const int max_passes = 2 * f.order() + 3;
  for (int pass = 0; pass < max_passes; ++pass) {
    TruncatedSeries<C> next = one + f * r;
    if (next == r) return r;
    r = std::move(next);
  }
  throw SeriesError("star() did not stabilise");
}

// F/(1-F).
template <class C>
TruncatedSeries<C> plus(const TruncatedSeries<C>& f) {
  return f * star(f);
}

// Multiplicative inverse; the constant term must be a nonzero scalar.
BiSeries invert(const BiSeries& f);
USeries invert(const USeries& f);

BiSeries pow(const BiSeries& f, int k);

// Univariate series in t, used for diagonals (x = y = t).
class UniSeries {
 public:
  UniSeries() : UniSeries(0) {}
  explicit UniSeries(int order) : c_(static_cast<std::size_t>(order) + 1) {}
  explicit UniSeries(std::vector<Rational> coeffs);

  static UniSeries t(int order);
  static UniSeries one(int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int n) const { return c_.at(static_cast<std::size_t>(n)); }
  Rational& operator[](int n) { return c_.at(static_cast<std::size_t>(n)); }
  const std::vector<Rational>& coeffs() const { return c_; }

  UniSeries& operator+=(const UniSeries& o);
  UniSeries& operator-=(const UniSeries& o);
  friend UniSeries operator+(UniSeries a, const UniSeries& b) { return a += b; }
  friend UniSeries operator-(UniSeries a, const UniSeries& b) { return a -= b; }
  friend UniSeries operator*(const UniSeries& a, const UniSeries& b);
  friend UniSeries operator*(const Rational& s, UniSeries a);
  friend bool operator==(const UniSeries& a, const UniSeries& b) { return a.c_ == b.c_; }

 private:
  std::vector<Rational> c_;
};

UniSeries invert(const UniSeries& f);

// Sum over i+j = n of the (i,j) coefficient: the specialisation x = y = t.
UniSeries diagonal(const BiSeries& f);

// ---- conversions between coefficient rings ----

// Embeds a u-free series.
USeries lift_u(const BiSeries& f);
// Embeds a series free of the Hadamard variable.
TriSeries lift_aux(const USeries& f);
TriSeries lift_aux(const BiSeries& f);
// The series u (a USeries with u at the (0,0) slot).
USeries u_monomial(int order, int degree = 1);
// The Hadamard variable itself.
TriSeries aux_monomial(int order, int degree = 1);

// Coefficient of u^k as a plain series.
BiSeries u_coefficient(const USeries& a, int k);
// Highest u-degree present (-1 for the zero series).
int u_degree(const USeries& a);
// True when the u-degree at (i,j) never exceeds j.
bool u_degree_bounded_by_rows(const USeries& a);

// ---- combinatorial operators ----

// Coefficient-wise product in the Hadamard variable.
TriSeries hadamard(const TriSeries& f, const TriSeries& g);
// Sets the Hadamard variable to 1.
USeries collapse(const TriSeries& f);

// sum_k a_k V^k.
BiSeries eval_u(const USeries& a, const BiSeries& v);
// A(u,V) = sum_n a_n sum_{i+j=n} u^i V^j.
USeries diag2(const USeries& a, const BiSeries& v);
// A(V1,V2) = sum_n a_n sum_{i+j=n} V1^i V2^j.
BiSeries diag2_eval(const USeries& a, const BiSeries& v1, const BiSeries& v2);
// A(V,V,u) = sum_n a_n sum_{l=0}^{n} (n-l+1) V^{n-l} u^l.
USeries diag3(const USeries& a, const BiSeries& v);

// d = (x+d)(y+d), the column/row refinement of the shifted Catalan series.
BiSeries solve_d(int order);
// c = 1 + (x-y)c + yc^2, the power series root of the kernel.
BiSeries solve_kernel_root(int order);
// (1-x-y)^2 - 4xy.
BiSeries delta(int order);

// Text rendering: one line per total degree, "p/q" rationals.
std::string to_table(const BiSeries& f);
std::string to_table(const USeries& f);
std::string to_string(const UPoly& p);
std::ostream& operator<<(std::ostream& os, const UPoly& p);

}  // namespace zconvex
