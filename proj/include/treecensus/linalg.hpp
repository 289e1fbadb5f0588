// Copyright (c) 2026 The treecensus authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TREECENSUS_LINALG_HPP
#define TREECENSUS_LINALG_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "treecensus/errors.hpp"
#include "treecensus/real.hpp"

namespace treecensus::linalg {

/// Dense row-major matrix on high-precision reals; only the tiny systems of
/// the extended solves pass through here (dimension <= delta + 1).
class Matrix {
 public:
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Real(0)) {}
  Real& operator()(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const Real& operator()(size_t r, size_t c) const { return a_[r * cols_ + c]; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

 private:
  size_t rows_, cols_;
  std::vector<Real> a_;
};

/// Determinant by LU with partial pivoting (deterministic pivot choice).
inline Real determinant(Matrix m) {
  const size_t n = m.rows();
  Real det(1);
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    for (size_t r = c + 1; r < n; ++r)
      if (abs(m(r, c)) > abs(m(piv, c))) piv = r;
    if (m(piv, c) == 0) return Real(0);
    if (piv != c) {
      for (size_t k = 0; k < n; ++k) std::swap(m(piv, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (size_t r = c + 1; r < n; ++r) {
      Real f = m(r, c) / m(c, c);
      for (size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

/// Solves A x = b by Gaussian elimination with partial pivoting.
inline std::vector<Real> solve(Matrix a, std::vector<Real> b) {
  const size_t n = a.rows();
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    for (size_t r = c + 1; r < n; ++r)
      if (abs(a(r, c)) > abs(a(piv, c))) piv = r;
    if (a(piv, c) == 0) throw SanityViolationError("singular Newton Jacobian");
    if (piv != c) {
      for (size_t k = 0; k < n; ++k) std::swap(a(piv, k), a(c, k));
      std::swap(b[piv], b[c]);
    }
    for (size_t r = c + 1; r < n; ++r) {
      Real f = a(r, c) / a(c, c);
      for (size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
      b[r] -= f * b[c];
    }
  }
  std::vector<Real> x(n, Real(0));
  for (size_t r = n; r-- > 0;) {
    Real s = b[r];
    for (size_t k = r + 1; k < n; ++k) s -= a(r, k) * x[k];
    x[r] = s / a(r, r);
  }
  return x;
}

/// Left null vector of M (v with v^T M = 0) for a matrix of numerical rank
/// n - 1, normalized so the first component is 1. Throws when the rank
/// deficiency differs from 1 at the given relative tolerance.
inline std::vector<Real> left_null_vector(const Matrix& m, const Real& rel_tol) {
  const size_t n = m.rows();
  Matrix a(n, n);  // a = m^T, so we seek the ordinary null vector of a
  Real scale(0);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) {
      a(r, c) = m(c, r);
      if (abs(a(r, c)) > scale) scale = abs(a(r, c));
    }
  if (scale == 0) throw RankDeficiencyError("zero matrix has full null space");
  std::vector<size_t> pivcols;  // pivcols[r] = pivot column of eliminated row r
  for (size_t c = 0; c < n && pivcols.size() < n; ++c) {
    const size_t rank = pivcols.size();
    size_t piv = rank;
    for (size_t r = rank + 1; r < n; ++r)
      if (abs(a(r, c)) > abs(a(piv, c))) piv = r;
    if (abs(a(piv, c)) <= rel_tol * scale) continue;  // numerically zero column
    if (piv != rank)
      for (size_t k = 0; k < n; ++k) std::swap(a(piv, k), a(rank, k));
    for (size_t r = rank + 1; r < n; ++r) {
      Real f = a(r, c) / a(rank, c);
      for (size_t k = c; k < n; ++k) a(r, k) -= f * a(rank, k);
    }
    pivcols.push_back(c);
  }
  if (pivcols.size() != n - 1)
    throw RankDeficiencyError("I - F_y rank deficiency is " + std::to_string(n - pivcols.size()) +
                              ", expected 1 (system not strongly connected?)");
  std::vector<bool> is_piv(n, false);
  for (size_t c : pivcols) is_piv[c] = true;
  size_t freec = 0;
  for (size_t c = 0; c < n; ++c)
    if (!is_piv[c]) freec = c;
  std::vector<Real> v(n, Real(0));
  v[freec] = Real(1);
  for (size_t r = pivcols.size(); r-- > 0;) {
    const size_t pc = pivcols[r];
    Real s(0);
    for (size_t k = pc + 1; k < n; ++k) s -= a(r, k) * v[k];
    v[pc] = s / a(r, pc);
  }
  if (v[0] == 0) throw RankDeficiencyError("left null vector has zero leading component");
  for (size_t i = n; i-- > 0;) v[i] /= v[0];
  return v;
}

}  // namespace treecensus::linalg

#endif  // TREECENSUS_LINALG_HPP
