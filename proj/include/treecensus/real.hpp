// Copyright (c) 2026 The treecensus authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TREECENSUS_REAL_HPP
#define TREECENSUS_REAL_HPP

#include <mpfr.h>

#include <boost/multiprecision/mpfr.hpp>

#include <ios>
#include <string>

#include "treecensus/rational.hpp"

namespace treecensus {

/// Configurable-precision real (MPFR-backed, correctly rounded, deterministic).
/// Expression templates are disabled so intermediate precision is predictable.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

/// Scoped default-precision switch; every Real constructed inside the scope
/// carries this many decimal digits.
class PrecisionScope {
 public:
  explicit PrecisionScope(int digits10) : prev_(Real::default_precision()) {
    Real::default_precision(static_cast<unsigned>(digits10));
  }
  ~PrecisionScope() { Real::default_precision(prev_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned prev_;
};

inline Real to_real(const Rational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

inline Real to_real(const Integer& z) {
  Real r;
  mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

/// Decimal string with the given significant digit count; fixed format for
/// moderate magnitudes, scientific otherwise. Deterministic for identical
/// inputs and precision.
inline std::string format_real(const Real& v, int digits10) {
  if (v != 0) {
    Real a = abs(v);
    if (a >= Real("1e-6") && a < Real("1e9")) return v.str(digits10, std::ios_base::fixed);
  }
  return v.str(digits10, std::ios_base::scientific);
}

inline Real pow10(int e) { return pow(Real(10), e); }

}  // namespace treecensus

#endif  // TREECENSUS_REAL_HPP
