// Copyright (c) 2026 The treecensus authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TREECENSUS_DUAL_HPP
#define TREECENSUS_DUAL_HPP

namespace treecensus {

/// First-order dual number a + b*eps with eps^2 = 0, over any commutative ring T.
///
/// ChainRuleOnSubstitute selects what the plethystic substitution s_i -> f(x^i, u^i)
/// does to the derivative slot:
///   true  -- the dual direction is d/du at a point; substituting power r multiplies
///            the derivative by r (chain rule through u -> u^r),
///   false -- the dual direction is an additive series perturbation; substituting
///            power r leaves the derivative slot alone (both slots are stretched
///            identically by the enclosing series operation).
template <class T, bool ChainRuleOnSubstitute = false>
struct DualNumber {
  T v{};
  T d{};

  DualNumber() = default;
  DualNumber(T value) : v(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  DualNumber(T value, T deriv) : v(std::move(value)), d(std::move(deriv)) {}

  DualNumber& operator+=(const DualNumber& o) {
    v += o.v;
    d += o.d;
    return *this;
  }
  DualNumber& operator-=(const DualNumber& o) {
    v -= o.v;
    d -= o.d;
    return *this;
  }
  friend DualNumber operator+(DualNumber a, const DualNumber& b) { return a += b; }
  friend DualNumber operator-(DualNumber a, const DualNumber& b) { return a -= b; }
  friend DualNumber operator-(const DualNumber& a) { return {-a.v, -a.d}; }

  friend DualNumber operator*(const DualNumber& a, const DualNumber& b) {
    return {a.v * b.v, a.v * b.d + a.d * b.v};
  }
  DualNumber& operator*=(const DualNumber& o) { return *this = *this * o; }

  friend DualNumber operator/(const DualNumber& a, const DualNumber& b) {
    T q = a.v / b.v;
    return {q, (a.d - q * b.d) / b.v};
  }
  DualNumber& operator/=(const DualNumber& o) { return *this = *this / o; }

  friend bool operator==(const DualNumber& a, const DualNumber& b) { return a.v == b.v && a.d == b.d; }
};

template <class T, bool CR>
DualNumber<T, CR> pow(const DualNumber<T, CR>& base, int e) {
  DualNumber<T, CR> out{T(1), T(0)};
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace treecensus

#endif  // TREECENSUS_DUAL_HPP
