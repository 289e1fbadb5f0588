// Copyright (c) 2026 The treecensus authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TREECENSUS_SERIES_HPP
#define TREECENSUS_SERIES_HPP

#include <utility>
#include <vector>

#include "treecensus/dual.hpp"
#include "treecensus/errors.hpp"
#include "treecensus/rational.hpp"
#include "treecensus/upoly.hpp"

namespace treecensus {

// ---------------------------------------------------------------------------
// Coefficient ring hooks. A series coefficient must support +, ==, a zero
// default state, and the plethystic stretch that s_i -> f(x^i, u^i) induces on
// it: identity for plain rationals, u -> u^r for u-polynomials, and the chain
// rule factor r on the derivative slot for d/du dual rationals.
// ---------------------------------------------------------------------------

// Generic fallbacks serve plain numeric rings (e.g. high-precision reals in
// the numeric tail ladder, which injects substituted coefficients externally
// and never relies on a self-stretch).
template <class C>
bool coeff_is_zero(const C& c) {
  return c == 0;
}
template <class C>
C coeff_substituted(const C& c, int /*r*/) {
  return c;
}
template <class C>
void coeff_mul_add_substituted(C& acc, const C& a, int /*r*/, const C& b) {
  acc += a * b;
}
template <class C>
void coeff_div_int(C& c, int m) {
  c /= m;
}
template <class C>
C coeff_at_u1(const C& c) {
  return c;
}

inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const UPoly& c) { return c.is_zero(); }
template <class T, bool CR>
bool coeff_is_zero(const DualNumber<T, CR>& c) {
  return coeff_is_zero(c.v) && coeff_is_zero(c.d);
}

inline Rational coeff_substituted(const Rational& c, int /*r*/) { return c; }
inline UPoly coeff_substituted(const UPoly& c, int r) { return c.stretched(r); }
template <class T>
DualNumber<T, true> coeff_substituted(const DualNumber<T, true>& c, int r) {
  return {coeff_substituted(c.v, r), coeff_substituted(c.d, r) * T(r)};
}
template <class T>
DualNumber<T, false> coeff_substituted(const DualNumber<T, false>& c, int r) {
  return {coeff_substituted(c.v, r), coeff_substituted(c.d, r)};
}

/// acc += substituted(a, r) * b, fused to avoid temporaries on the hot path.
inline void coeff_mul_add_substituted(Rational& acc, const Rational& a, int /*r*/, const Rational& b) {
  acc += a * b;
}
inline void coeff_mul_add_substituted(UPoly& acc, const UPoly& a, int r, const UPoly& b) {
  acc.add_product_stretched(a, r, b);
}
template <class T, bool CR>
void coeff_mul_add_substituted(DualNumber<T, CR>& acc, const DualNumber<T, CR>& a, int r,
                               const DualNumber<T, CR>& b) {
  acc += coeff_substituted(a, r) * b;
}

inline void coeff_div_int(Rational& c, int m) { c /= m; }
inline void coeff_div_int(UPoly& c, int m) { c /= Rational(m); }
template <class T, bool CR>
void coeff_div_int(DualNumber<T, CR>& c, int m) {
  coeff_div_int(c.v, m);
  coeff_div_int(c.d, m);
}

inline Rational coeff_at_u1(const UPoly& c) { return c.at_u1(); }

// ---------------------------------------------------------------------------
// Truncated power series in x over a coefficient ring.
// ---------------------------------------------------------------------------

/// Truncated power series sum_{n=0}^{N} c_n x^n with a fixed truncation order N.
/// Binary operations require equal orders; there is no silent coercion.
template <class Coeff>
class TruncatedSeriesT {
 public:
  explicit TruncatedSeriesT(int truncation_order)
      : order_(truncation_order), c_(static_cast<size_t>(truncation_order) + 1) {
    if (truncation_order < 0) throw DomainError("truncation order must be >= 0");
  }

  int truncation_order() const { return order_; }

  const Coeff& operator[](int n) const { return c_[static_cast<size_t>(n)]; }
  Coeff& at(int n) { return c_[static_cast<size_t>(n)]; }

  /// The series x (zero when the order is 0).
  static TruncatedSeriesT x(int order) {
    TruncatedSeriesT s(order);
    if (order >= 1) s.at(1) = Coeff(1);
    return s;
  }
  static TruncatedSeriesT one(int order) {
    TruncatedSeriesT s(order);
    s.at(0) = Coeff(1);
    return s;
  }

  friend bool operator==(const TruncatedSeriesT& a, const TruncatedSeriesT& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }

 private:
  int order_;
  std::vector<Coeff> c_;
};

using TruncatedSeries = TruncatedSeriesT<Rational>;
using BivariateSeries = TruncatedSeriesT<UPoly>;

namespace detail {
template <class Coeff>
void require_same_order(const TruncatedSeriesT<Coeff>& a, const TruncatedSeriesT<Coeff>& b) {
  if (a.truncation_order() != b.truncation_order())
    throw OrderMismatchError(a.truncation_order(), b.truncation_order());
}
}  // namespace detail

template <class Coeff>
TruncatedSeriesT<Coeff> add(const TruncatedSeriesT<Coeff>& a, const TruncatedSeriesT<Coeff>& b) {
  detail::require_same_order(a, b);
  TruncatedSeriesT<Coeff> out(a.truncation_order());
  for (int n = 0; n <= a.truncation_order(); ++n) out.at(n) = a[n] + b[n];
  return out;
}

template <class Coeff>
TruncatedSeriesT<Coeff> subtract(const TruncatedSeriesT<Coeff>& a, const TruncatedSeriesT<Coeff>& b) {
  detail::require_same_order(a, b);
  TruncatedSeriesT<Coeff> out(a.truncation_order());
  for (int n = 0; n <= a.truncation_order(); ++n) out.at(n) = a[n] - b[n];
  return out;
}

/// Cauchy product truncated at the common order.
template <class Coeff>
TruncatedSeriesT<Coeff> multiply(const TruncatedSeriesT<Coeff>& a, const TruncatedSeriesT<Coeff>& b) {
  detail::require_same_order(a, b);
  const int N = a.truncation_order();
  TruncatedSeriesT<Coeff> out(N);
  for (int i = 0; i <= N; ++i) {
    if (coeff_is_zero(a[i])) continue;
    for (int j = 0; j + i <= N; ++j) {
      if (!coeff_is_zero(b[j])) coeff_mul_add_substituted(out.at(i + j), a[i], 1, b[j]);
    }
  }
  return out;
}

template <class Coeff, class Scalar>
TruncatedSeriesT<Coeff> scale(const TruncatedSeriesT<Coeff>& a, const Scalar& s) {
  TruncatedSeriesT<Coeff> out(a.truncation_order());
  for (int n = 0; n <= a.truncation_order(); ++n) out.at(n) = a[n] * s;
  return out;
}

/// f(x) -> f(x^r) (univariate) or f(x,u) -> f(x^r, u^r) (bivariate), truncated
/// at the caller's order.
template <class Coeff>
TruncatedSeriesT<Coeff> substitute_power(const TruncatedSeriesT<Coeff>& f, int r) {
  if (r < 1) throw DomainError("substitute_power requires r >= 1");
  if (r == 1) return f;
  const int N = f.truncation_order();
  TruncatedSeriesT<Coeff> out(N);
  for (int n = 0; n * r <= N; ++n) {
    if (!coeff_is_zero(f[n])) out.at(n * r) = coeff_substituted(f[n], r);
  }
  return out;
}

/// Multiplication by x (shifts coefficients up, dropping the top one).
template <class Coeff>
TruncatedSeriesT<Coeff> shift_up(const TruncatedSeriesT<Coeff>& f) {
  TruncatedSeriesT<Coeff> out(f.truncation_order());
  for (int n = 1; n <= f.truncation_order(); ++n) out.at(n) = f[n - 1];
  return out;
}

/// Coefficientwise specialization u = 1 of a bivariate series.
inline TruncatedSeries collapse_u1(const BivariateSeries& f) {
  TruncatedSeries out(f.truncation_order());
  for (int n = 0; n <= f.truncation_order(); ++n) out.at(n) = f[n].at_u1();
  return out;
}

/// Embeds a univariate series as a bivariate one with all marks at u^0.
inline BivariateSeries embed_bivariate(const TruncatedSeries& f) {
  BivariateSeries out(f.truncation_order());
  for (int n = 0; n <= f.truncation_order(); ++n) out.at(n) = UPoly::constant(f[n]);
  return out;
}

}  // namespace treecensus

#endif  // TREECENSUS_SERIES_HPP
