// Copyright (c) 2026 The treecensus authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TREECENSUS_SINGULARITY_HPP
#define TREECENSUS_SINGULARITY_HPP

#include <utility>
#include <vector>

#include "treecensus/implicit_system.hpp"

namespace treecensus::singularity {

/// Polynomial extrapolation of (x_i, y_i) samples to x = 0 (Neville).
inline Real extrapolate_to_zero(std::vector<std::pair<Real, Real>> pts) {
  const size_t n = pts.size();
  std::vector<Real> v(n);
  for (size_t i = 0; i < n; ++i) v[i] = pts[i].second;
  for (size_t level = 1; level < n; ++level)
    for (size_t i = 0; i + level < n; ++i)
      v[i] = (pts[i].first * v[i + 1] - pts[i + level].first * v[i]) /
             (pts[i].first - pts[i + level].first);
  return v[0];
}

// ---------------------------------------------------------------------------
// Critical point and point evaluation
// ---------------------------------------------------------------------------

struct CriticalPoint {
  Real x0, p0;
  Real residual1, residual2;
  int tail_order = 0;
};

/// Newton on (x, p) for the planted fixed point together with the
/// characteristic condition p^(delta-1)(x0) = 1.
inline CriticalPoint find_x0(DegreeBound delta, int prec) {
  detail::CriticalData c = detail::solve_critical(delta, prec, prec + 30);
  return {c.x0, c.p0, c.residual1, c.residual2, c.n_top};
}

/// Solves p = x sum_{k<=delta-1} Z(S_k; p) for the value p(x) at a numeric
/// point 0 < x <= x0; scalar (damped) Newton with exact-series tails. At the
/// critical point itself the root is a double root, so convergence degrades
/// to linear there; the residual contract still holds.
inline Real eval_planted_point(DegreeBound delta, const Real& x, int prec) {
  if (!(x > 0)) throw DomainError("eval_planted_point requires x > 0");
  const int digits = prec + 30;
  PrecisionScope scope(digits);
  detail::CriticalData crit = detail::solve_critical(delta, prec, digits);
  if (x > crit.x0 * (Real(1) + pow10(-(prec - 2))))
    throw DomainError("eval_planted_point requires x <= x0");
  const int D = delta.delta;
  auto g_of = [&](const Real& y) {
    std::vector<Real> slots(static_cast<size_t>(D), Real(0));
    slots[1] = y;
    for (int r = 2; r <= D - 1; ++r) slots[static_cast<size_t>(r)] = detail::eval_tail(crit.p_coeffs, x, r);
    std::vector<Real> h = detail::h_from_slots(slots, D - 1);
    Real sum_full(0), sum_restricted(0);
    for (int k = 0; k <= D - 1; ++k) {
      sum_full += h[static_cast<size_t>(k)];
      if (k <= D - 2) sum_restricted += h[static_cast<size_t>(k)];
    }
    return std::pair<Real, Real>{y - x * sum_full, Real(1) - x * sum_restricted};
  };
  Real y = detail::eval_tail(crit.p_coeffs, x, 1);
  const Real target = pow10(-(prec - 5));
  Real res(1);
  for (int it = 0; it < 4000; ++it) {
    auto [g, dg] = g_of(y);
    res = abs(g);
    if (res < target) break;
    if (dg == 0) break;
    Real step = -g / dg;
    // keep the iterate on the combinatorial branch (y below the double root)
    Real yn = y + step;
    auto [g2, dg2] = g_of(yn);
    (void)dg2;
    if (abs(g2) > res && abs(step) > pow10(-(digits - 5))) {
      y = y + step / 2;
    } else {
      y = yn;
    }
    if (it == 3999)
      throw IterationLimitError("planted-point Newton hit the iteration limit", format_real(res, 3));
  }
  if (res >= target)
    throw IterationLimitError("planted-point Newton did not meet the residual contract",
                              format_real(res, 3));
  return y;
}

// ---------------------------------------------------------------------------
// Extended system: y = F(x, y, u), det(I - F_y(x, y, u)) = 0
// ---------------------------------------------------------------------------

struct ExtendedSolution {
  Real x;                ///< f(u)
  std::vector<Real> y;   ///< y(f(u), u)
  Real residual;         ///< final max-norm residual
  int iterations = 0;
};

/// Newton on the N+1 unknowns (y, x); the y-rows use the analytic Jacobian
/// blocks I - F_y and -F_x, the determinant row is centrally differenced.
/// Warm starts from the u = 1 solution.
inline ExtendedSolution solve_extended(ImplicitSystem& sys, const Real& u, int prec,
                                       const std::vector<Real>* warm = nullptr) {
  if (sys.zero_statistic())
    throw DomainError("extended solve is undefined for a zero-statistic marking");
  const int digits = sys.internal_digits();
  PrecisionScope scope(digits);
  if (abs(u - 1) > Real("0.05"))
    throw DomainError("extended solve expects u within 0.05 of 1");
  sys.prepare_u(u);
  const int dim = sys.dimension();
  const size_t n = static_cast<size_t>(dim) + 1;
  Real x = sys.x0();
  std::vector<Real> y = warm != nullptr ? *warm : sys.warm_start();
  if (warm != nullptr) {
    x = (*warm)[static_cast<size_t>(dim)];
    y.resize(static_cast<size_t>(dim));
  }

  auto residual_vec = [&](const Real& xx, const std::vector<Real>& yy) {
    std::vector<Real> res(n, Real(0));
    std::vector<Real> f = sys.F(xx, yy, u);
    for (int i = 0; i < dim; ++i) res[static_cast<size_t>(i)] = yy[static_cast<size_t>(i)] - f[static_cast<size_t>(i)];
    res[static_cast<size_t>(dim)] = linalg::determinant(sys.I_minus_Fy(xx, yy, u));
    return res;
  };
  auto norm_inf = [](const std::vector<Real>& v) {
    Real m(0);
    for (const Real& e : v)
      if (abs(e) > m) m = abs(e);
    return m;
  };

  const Real target = pow10(-(digits - 12));
  const Real fd = pow10(-(digits / 3));
  Real res_norm(1);
  int it = 0;
  for (; it < 120; ++it) {
    std::vector<Real> res = residual_vec(x, y);
    res_norm = norm_inf(res);
    if (res_norm < target) break;
    linalg::Matrix J(n, n);
    linalg::Matrix imfy = sys.I_minus_Fy(x, y, u);
    std::vector<Real> fx = sys.Fx(x, y, u);
    for (int r = 0; r < dim; ++r) {
      for (int c = 0; c < dim; ++c) J(static_cast<size_t>(r), static_cast<size_t>(c)) = imfy(static_cast<size_t>(r), static_cast<size_t>(c));
      J(static_cast<size_t>(r), static_cast<size_t>(dim)) = -fx[static_cast<size_t>(r)];
    }
    // determinant row by central differences of det(I - F_y)
    for (size_t c = 0; c < n; ++c) {
      auto det_at = [&](const Real& dx) {
        Real xx = x;
        std::vector<Real> yy = y;
        if (c < static_cast<size_t>(dim))
          yy[c] += dx;
        else
          xx += dx;
        return linalg::determinant(sys.I_minus_Fy(xx, yy, u));
      };
      J(static_cast<size_t>(dim), c) = (det_at(fd) - det_at(-fd)) / (2 * fd);
    }
    std::vector<Real> rhs(n);
    for (size_t i = 0; i < n; ++i) rhs[i] = -res[i];
    std::vector<Real> step = linalg::solve(J, rhs);
    Real damp(1);
    for (int halve = 0;; ++halve) {
      std::vector<Real> yn = y;
      for (int i = 0; i < dim; ++i) yn[static_cast<size_t>(i)] += damp * step[static_cast<size_t>(i)];
      Real xn = x + damp * step[static_cast<size_t>(dim)];
      Real rn = norm_inf(residual_vec(xn, yn));
      if (rn < res_norm || halve >= 45) {
        y = std::move(yn);
        x = xn;
        break;
      }
      damp /= 2;
    }
  }
  if (res_norm >= pow10(-(prec - 5)))
    throw IterationLimitError("extended-system Newton did not meet the residual contract",
                              format_real(res_norm, 3));
  return {x, std::move(y), res_norm, it};
}

// ---------------------------------------------------------------------------
// Asymptotic constants
// ---------------------------------------------------------------------------

/// (x0, f'(1), f''(1), mu, sigma, tau) for one marking, plus solver diagnostics.
struct AsymptoticConstants {
  int delta = 0;
  Marking marking;
  int precision = 0;
  Real x0;
  Real f_prime_1, f_double_prime_1;
  Real mu, sigma;
  Real tau_hat;  ///< filled by estimate_tau only
  struct Diagnostics {
    Real extended_residual;   ///< worst residual across the stencil solves
    Real richardson_err_f1;   ///< |level difference| of the f'(1) extrapolation
    Real richardson_err_f2;   ///< |level difference| of the f''(1) extrapolation
    Real h;                   ///< finite-difference step
  } diag;
};

/// f'(1) and f''(1) by central differences at steps h and h/2 with one
/// Richardson step; mu = -f'(1)/f(1), sigma = mu^2 + mu - f''(1)/f(1).
inline AsymptoticConstants mu_sigma(ImplicitSystem& sys, int prec, const Real& h,
                                    const Real& tol = Real("1e-6")) {
  if (prec < 30) throw DomainError("derivative computations require precision >= 30 digits");
  PrecisionScope scope(sys.internal_digits());
  AsymptoticConstants out;
  out.delta = sys.bound().delta;
  out.marking = sys.marking();
  out.precision = prec;
  out.x0 = sys.x0();
  out.diag.h = h;
  if (sys.zero_statistic()) {
    out.f_prime_1 = out.f_double_prime_1 = out.mu = out.sigma = Real(0);
    out.diag.extended_residual = out.diag.richardson_err_f1 = out.diag.richardson_err_f2 = Real(0);
    return out;
  }
  ExtendedSolution center = solve_extended(sys, Real(1), prec);
  Real worst = center.residual;
  auto f_at = [&](const Real& uu, const ExtendedSolution& start) {
    std::vector<Real> warm = start.y;
    warm.push_back(start.x);
    ExtendedSolution s = solve_extended(sys, uu, prec, &warm);
    if (s.residual > worst) worst = s.residual;
    return s;
  };
  ExtendedSolution ph2 = f_at(Real(1) + h / 2, center);
  ExtendedSolution ph = f_at(Real(1) + h, ph2);
  ExtendedSolution mh2 = f_at(Real(1) - h / 2, center);
  ExtendedSolution mh = f_at(Real(1) - h, mh2);
  const Real f0 = center.x;
  Real d1_h = (ph.x - mh.x) / (2 * h);
  Real d1_h2 = (ph2.x - mh2.x) / h;
  Real f1 = (4 * d1_h2 - d1_h) / 3;
  Real d2_h = (ph.x - 2 * f0 + mh.x) / (h * h);
  Real d2_h2 = (ph2.x - 2 * f0 + mh2.x) / (h * h / 4);
  Real f2 = (4 * d2_h2 - d2_h) / 3;
  out.diag.extended_residual = worst;
  out.diag.richardson_err_f1 = abs(f1 - d1_h2);
  out.diag.richardson_err_f2 = abs(f2 - d2_h2);
  out.f_prime_1 = f1;
  out.f_double_prime_1 = f2;
  out.mu = -f1 / f0;
  out.sigma = out.mu * out.mu + out.mu - f2 / f0;
  Real scale_mu = abs(out.mu) > 1 ? abs(out.mu) : Real(1);
  if (out.diag.richardson_err_f1 > tol * scale_mu || out.diag.richardson_err_f2 > tol * 100 * scale_mu)
    throw PrecisionInsufficientError(
        "finite-difference error estimate exceeds tolerance; raise precision or shrink h "
        "(err_f1 = " +
        format_real(out.diag.richardson_err_f1, 3) + ", err_f2 = " +
        format_real(out.diag.richardson_err_f2, 3) + ")");
  return out;
}

/// mu via the left null vector of I - F_y(x0, y0, 1) (the ratio formula of the
/// dependency-graph remark); completely independent of finite differencing.
struct NullVectorMu {
  Real mu;
  std::vector<Real> v;  ///< left null vector, normalized to v[0] = 1
};

inline NullVectorMu mu_via_null_vector(ImplicitSystem& sys, int prec) {
  PrecisionScope scope(sys.internal_digits());
  if (sys.zero_statistic()) return {Real(0), {Real(1)}};
  ExtendedSolution center = solve_extended(sys, Real(1), prec);
  linalg::Matrix m = sys.I_minus_Fy(center.x, center.y, Real(1));
  std::vector<Real> v;
  if (sys.dimension() == 1) {
    if (abs(m(0, 0)) > pow10(-(prec - 10)))
      throw RankDeficiencyError("1x1 system not singular at the critical point");
    v = {Real(1)};
  } else {
    v = linalg::left_null_vector(m, pow10(-(sys.internal_digits() / 2)));
  }
  std::vector<Real> fu = sys.Fu_at1(center.x, center.y);
  std::vector<Real> fx = sys.Fx(center.x, center.y, Real(1));
  Real num(0), den(0);
  for (size_t i = 0; i < v.size(); ++i) {
    num += v[i] * fu[i];
    den += v[i] * fx[i];
  }
  return {num / (center.x * den), std::move(v)};
}

// ---------------------------------------------------------------------------
// tau estimate
// ---------------------------------------------------------------------------

/// Richardson trace of s_n = t_n x0^n n^(5/2); the limit estimates tau in
/// t_n ~ tau x0^{-n} n^{-5/2}.
struct TauEstimate {
  Real tau_hat;
  std::vector<std::pair<int, Real>> trace;  ///< (n, s_n)
  std::vector<Real> extrapolants;           ///< aligned with trace
  bool diverging = false;
};

inline TauEstimate estimate_tau(DegreeBound delta, int order, int prec = 50) {
  if (order < 100) throw DomainError("tau estimation requires order >= 100");
  const int digits = prec + 30;
  PrecisionScope scope(digits);
  census::CensusTables tables = census::build_free(delta, order);
  CriticalPoint crit = find_x0(delta, prec);
  TauEstimate out;
  auto s_of = [&](int n) {
    Real nn(n);
    return to_real(tables.t[n]) * pow(crit.x0, n) * nn * nn * sqrt(nn);
  };
  for (int n = 1; n <= order; ++n) out.trace.emplace_back(n, s_of(n));
  auto extrap_at = [&](int n) {
    std::vector<std::pair<Real, Real>> pts;
    for (int m = n; m >= 2 && pts.size() < 4; m /= 2)
      pts.emplace_back(Real(1) / m, out.trace[static_cast<size_t>(m - 1)].second);
    if (pts.empty()) return out.trace[static_cast<size_t>(n - 1)].second;
    return extrapolate_to_zero(std::move(pts));
  };
  for (int n = 1; n <= order; ++n) out.extrapolants.push_back(extrap_at(n));
  out.tau_hat = out.extrapolants.back();
  // divergence probe: the extrapolant halving sequence should settle
  if (order >= 8) {
    Real d1 = abs(out.extrapolants[static_cast<size_t>(order - 1)] -
                  out.extrapolants[static_cast<size_t>(order / 2 - 1)]);
    Real d2 = abs(out.extrapolants[static_cast<size_t>(order / 2 - 1)] -
                  out.extrapolants[static_cast<size_t>(order / 4 - 1)]);
    out.diverging = d1 > d2;
  }
  return out;
}

}  // namespace treecensus::singularity

#endif  // TREECENSUS_SINGULARITY_HPP
