// Copyright (c) 2026 The treecensus authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TREECENSUS_RATIONAL_HPP
#define TREECENSUS_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace treecensus {

/// Exact arbitrary-precision rational, the coefficient ring of every counting series.
using Rational = mpq_class;
/// Exact arbitrary-precision integer (counts, distribution tables).
using Integer = mpz_class;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Lossless decimal emission; counting numbers exceed 64 bits early.
inline std::string to_decimal_string(const Integer& z) { return z.get_str(); }

/// "p/q" form, or a plain integer string when the denominator is 1.
inline std::string to_fraction_string(const Rational& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Integer pow_int(Integer base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

}  // namespace treecensus

#endif  // TREECENSUS_RATIONAL_HPP
