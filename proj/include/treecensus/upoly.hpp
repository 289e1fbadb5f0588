// Copyright (c) 2026 The treecensus authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TREECENSUS_UPOLY_HPP
#define TREECENSUS_UPOLY_HPP

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "treecensus/rational.hpp"

namespace treecensus {

/// Dense polynomial in the mark variable u with exact rational coefficients.
/// The zero polynomial is the empty coefficient vector; otherwise the leading
/// coefficient is nonzero.
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Rational& v) {  // NOLINT(google-explicit-constructor) -- ring embedding
    if (v != 0) c_.push_back(v);
  }
  UPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
  explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly constant(Rational v) {
    UPoly p;
    if (v != 0) p.c_.push_back(std::move(v));
    return p;
  }
  /// The monomial u^e.
  static UPoly monomial(int e, Rational coeff = 1) {
    UPoly p;
    if (coeff != 0) {
      p.c_.assign(static_cast<size_t>(e) + 1, Rational(0));
      p.c_.back() = std::move(coeff);
    }
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree of the zero polynomial is -1 by convention.
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  const Rational& operator[](size_t e) const {
    static const Rational kZero(0);
    return e < c_.size() ? c_[e] : kZero;
  }
  const std::vector<Rational>& coeffs() const { return c_; }

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t e = 0; e < o.c_.size(); ++e) c_[e] += o.c_[e];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t e = 0; e < o.c_.size(); ++e) c_[e] -= o.c_[e];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(const UPoly& a) {
    UPoly out = a;
    for (auto& v : out.c_) v = -v;
    return out;
  }

  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    UPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j] != 0) out.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return out;  // product of trimmed polys has nonzero leading coefficient
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  UPoly& operator*=(const Rational& s) {
    if (s == 0) {
      c_.clear();
    } else {
      for (auto& v : c_) v *= s;
    }
    return *this;
  }
  friend UPoly operator*(UPoly a, const Rational& s) { return a *= s; }

  UPoly& operator/=(const Rational& s) {
    for (auto& v : c_) v /= s;
    return *this;
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// *this += a(u^r) * b, in place (the census convolution kernel).
  void add_product_stretched(const UPoly& a, int r, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return;
    const size_t need = static_cast<size_t>(a.degree()) * r + b.degree() + 1;
    if (c_.size() < need) c_.resize(need, Rational(0));
    for (int i = 0; i <= a.degree(); ++i) {
      const Rational& av = a.c_[static_cast<size_t>(i)];
      if (av == 0) continue;
      const size_t off = static_cast<size_t>(i) * r;
      for (int j = 0; j <= b.degree(); ++j) {
        const Rational& bv = b.c_[static_cast<size_t>(j)];
        if (bv != 0) c_[off + j] += av * bv;
      }
    }
    trim();
  }

  /// u -> u^r (the plethystic stretch of the mark variable).
  UPoly stretched(int r) const {
    if (r == 1 || is_zero()) return *this;
    UPoly out;
    out.c_.assign((c_.size() - 1) * static_cast<size_t>(r) + 1, Rational(0));
    for (size_t e = 0; e < c_.size(); ++e) {
      if (c_[e] != 0) out.c_[e * static_cast<size_t>(r)] = c_[e];
    }
    return out;
  }

  /// Specialization at u = 1 (sum of coefficients).
  Rational at_u1() const {
    Rational s(0);
    for (const auto& v : c_) s += v;
    return s;
  }

  /// Horner evaluation at a point of any ring convertible from Rational.
  template <class S, class FromRational>
  S evaluate(const S& u, FromRational conv) const {
    S acc = conv(Rational(0));
    for (size_t e = c_.size(); e-- > 0;) acc = acc * u + conv(c_[e]);
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

}  // namespace treecensus

#endif  // TREECENSUS_UPOLY_HPP
