// Copyright (c) 2026 The treecensus authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TREECENSUS_IMPLICIT_SYSTEM_HPP
#define TREECENSUS_IMPLICIT_SYSTEM_HPP

#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "treecensus/census.hpp"
#include "treecensus/dual.hpp"
#include "treecensus/linalg.hpp"
#include "treecensus/real.hpp"

namespace treecensus::singularity {

using DualReal = DualNumber<Real, false>;
using DualRational = DualNumber<Rational, true>;

namespace detail {

template <class S>
S pow_si(const S& x, int r) {
  S out = S(1);
  for (int i = 0; i < r; ++i) out = out * x;
  return out;
}

/// sum_{i>=1} c_i (x^r)^i by Horner; coefficients real, the point generic.
template <class S>
S eval_tail(const std::vector<Real>& c, const S& x, int r) {
  S X = pow_si(x, r);
  S acc = S(0);
  for (size_t i = c.size(); i-- > 1;) acc = acc * X + S(c[i]);
  return acc * X;
}

/// h_0..h_K from slot values s_1..s_K: h_m = (1/m) sum_r s_r h_{m-r}.
template <class S>
std::vector<S> h_from_slots(const std::vector<S>& slots, int K) {
  std::vector<S> h(static_cast<size_t>(K) + 1, S(0));
  h[0] = S(1);
  for (int m = 1; m <= K; ++m) {
    S acc = S(0);
    for (int r = 1; r <= m; ++r) acc += slots[static_cast<size_t>(r)] * h[static_cast<size_t>(m - r)];
    h[static_cast<size_t>(m)] = acc / S(m);
  }
  return h;
}

inline int tail_order_for(double x_est, int prec) {
  const double q = x_est * 1.05;
  return static_cast<int>(2.0 * (prec + 12) * std::log(10.0) / std::log(1.0 / q)) + 16;
}

/// Exact planted series plus the critical point (x0, p0) of the unmarked
/// system: Newton on (x, y) for
///   y = x * sum_{k=0}^{D-1} Z(S_k; y, tails),
///   1 = x * sum_{k=0}^{D-2} Z(S_k; y, tails),
/// the second equation being the square-root branch condition p^(D-1)(x0) = 1.
struct CriticalData {
  int delta = 0;
  int n_top = 0;
  Real x0, p0;
  Real residual1, residual2;
  std::vector<Real> p_coeffs;
};

inline CriticalData solve_critical(DegreeBound delta, int prec, int digits) {
  PrecisionScope scope(digits);
  CriticalData out;
  out.delta = delta.delta;
  // Radius estimate from coefficient ratios (3-point Neville in 1/n strips
  // the O(1/n) bias), then the properly sized exact series build.
  auto probe = census::build_planted(delta, 120).first;
  Real r1 = to_real(probe[115]) / to_real(probe[116]);
  Real r2 = to_real(probe[117]) / to_real(probe[118]);
  Real r3 = to_real(probe[119]) / to_real(probe[120]);
  Real n1 = Real(1) / 116, n2 = Real(1) / 118, n3 = Real(1) / 120;
  Real p01 = (n1 * r2 - n2 * r1) / (n1 - n2);
  Real p12 = (n2 * r3 - n3 * r2) / (n2 - n3);
  Real x_est = (n1 * p12 - n3 * p01) / (n1 - n3);
  out.n_top = tail_order_for(static_cast<double>(x_est), prec);
  auto pser = census::build_planted(delta, out.n_top).first;
  out.p_coeffs.resize(static_cast<size_t>(out.n_top) + 1);
  for (int i = 0; i <= out.n_top; ++i) out.p_coeffs[static_cast<size_t>(i)] = to_real(pser[i]);

  const int D = delta.delta;
  auto residuals = [&](const auto& x, const auto& y) {
    using S = std::decay_t<decltype(x)>;
    std::vector<S> slots(static_cast<size_t>(D), S(0));
    slots[1] = y;
    for (int r = 2; r <= D - 1; ++r) slots[static_cast<size_t>(r)] = eval_tail(out.p_coeffs, x, r);
    std::vector<S> h = h_from_slots(slots, D - 1);
    S s_full = S(0), s_restricted = S(0);
    for (int k = 0; k <= D - 1; ++k) {
      s_full += h[static_cast<size_t>(k)];
      if (k <= D - 2) s_restricted += h[static_cast<size_t>(k)];
    }
    return std::pair<S, S>{y - x * s_full, x * s_restricted - S(1)};
  };

  Real x = x_est;
  Real y = eval_tail(out.p_coeffs, x, 1);
  const Real target = pow10(-(digits - 12));
  for (int it = 0; it < 200; ++it) {
    auto [g1, g2] = residuals(x, y);
    Real res = abs(g1) > abs(g2) ? abs(g1) : abs(g2);
    if (res < target) break;
    std::vector<Real> slots(static_cast<size_t>(D), Real(0));
    slots[1] = y;
    for (int r = 2; r <= D - 1; ++r) slots[static_cast<size_t>(r)] = eval_tail(out.p_coeffs, x, r);
    std::vector<Real> h = h_from_slots(slots, D - 1);
    Real dg1_dy(1), dg2_dy(0);
    for (int k = 1; k <= D - 1; ++k) {
      dg1_dy -= x * h[static_cast<size_t>(k - 1)];
      if (k <= D - 2) dg2_dy += x * h[static_cast<size_t>(k - 1)];
    }
    auto [G1, G2] = residuals(DualReal(x, Real(1)), DualReal(y, Real(0)));
    linalg::Matrix J(2, 2);
    J(0, 0) = dg1_dy;
    J(0, 1) = G1.d;
    J(1, 0) = dg2_dy;
    J(1, 1) = G2.d;
    std::vector<Real> step = linalg::solve(J, {-g1, -g2});
    Real damp(1);
    for (int halve = 0;; ++halve) {
      Real xn = x + damp * step[1], yn = y + damp * step[0];
      auto [t1, t2] = residuals(xn, yn);
      Real rn = abs(t1) > abs(t2) ? abs(t1) : abs(t2);
      if (rn < res || halve >= 45) {
        x = xn;
        y = yn;
        break;
      }
      damp /= 2;
    }
  }
  auto [g1, g2] = residuals(x, y);
  out.residual1 = abs(g1);
  out.residual2 = abs(g2);
  if (out.residual1 > pow10(-(prec - 5)) || out.residual2 > pow10(-(prec - 5)))
    throw IterationLimitError("critical-point Newton did not reach the residual contract",
                              format_real(out.residual1 + out.residual2, 3));
  if (!(x > 0) || x > Real("0.5000000001"))
    throw SanityViolationError("x0 outside (0, 1/2]: " + format_real(x, 20));
  out.x0 = x;
  out.p0 = y;
  return out;
}

/// Numeric series of the marked system at mark values u, u^2, u^3, ...:
/// scale s holds the x-series of every component at u^s, built to order
/// n_top / s by the same bottom-up pass as the exact census, reading its
/// plethystic substitutions from deeper scales.
class LadderFamily {
 public:
  LadderFamily(DegreeBound delta, Marking mark, Real u, int n_top)
      : delta_(delta), mark_(mark), u_(std::move(u)), n_top_(n_top) {}

  /// Component series at scale s: index 0 holds p; for edge systems indices
  /// 1..delta additionally hold a_k.
  const std::vector<std::vector<Real>>& scale(long s) {
    auto it = cache_.find(s);
    if (it == cache_.end()) {
      build(s);
      it = cache_.find(s);
    }
    return it->second;
  }

 private:
  void build(long s) {
    const int M = static_cast<int>(n_top_ / s);
    const bool edge = mark_.kind == Marking::Kind::edge_type;
    const size_t ncomp = edge ? static_cast<size_t>(delta_.delta) + 1 : 1;
    if (M < 1) {
      cache_.emplace(s, std::vector<std::vector<Real>>(ncomp, std::vector<Real>(1, Real(0))));
      return;
    }
    const int K = delta_.delta - 1;
    for (int r = 2; r <= K; ++r) scale(s * r);
    census::detail::MarkedSystemBuilder<Real> b(delta_, mark_, M, pow(u_, static_cast<int>(s)), K);
    b.set_substitution_source(
        [this, s](int base, int r, int idx) { return base_value(s * r, base, idx); });
    b.run();
    std::vector<std::vector<Real>> comps(ncomp);
    auto copy_series = [M](const auto& series, std::vector<Real>& dst) {
      dst.resize(static_cast<size_t>(M) + 1);
      for (int i = 0; i <= M; ++i) dst[static_cast<size_t>(i)] = series[i];
    };
    copy_series(b.planted(), comps[0]);
    if (edge)
      for (int k = 1; k <= delta_.delta; ++k)
        copy_series(b.component(k), comps[static_cast<size_t>(k)]);
    cache_.emplace(s, std::move(comps));
  }

  Real base_value(long scale_id, int base, int idx) {
    const auto& av = scale(scale_id);
    auto comp_at = [&](size_t k, int i) {
      const auto& v = av[k];
      return i >= 0 && static_cast<size_t>(i) < v.size() ? v[static_cast<size_t>(i)] : Real(0);
    };
    switch (base) {
      case census::detail::kP:
        return comp_at(0, idx);
      case census::detail::kAI:
        return comp_at(static_cast<size_t>(mark_.i), idx);
      case census::detail::kPmAI:
        return comp_at(0, idx) - comp_at(static_cast<size_t>(mark_.i), idx);
      case census::detail::kAJ:
        return comp_at(static_cast<size_t>(mark_.j), idx);
      case census::detail::kPmAJ:
        return comp_at(0, idx) - comp_at(static_cast<size_t>(mark_.j), idx);
      default:
        throw DomainError("unknown base id");
    }
  }

  DegreeBound delta_;
  Marking mark_;
  Real u_;
  long n_top_;
  std::map<long, std::vector<std::vector<Real>>> cache_;
};

}  // namespace detail

/// Numeric evaluators for the marked functional system y = F(x, y, u) at a
/// point: F itself, the Jacobian F_y (assembled through the cycle-index
/// derivative rule dZ(S_k)/ds_1 = Z(S_{k-1}), never by numeric differencing),
/// and the total derivatives F_x and -- at u = 1 -- F_u.
///
/// Dimension is 1 for vertex-degree markings (unknown p) and delta - 1 for
/// edge-type markings (unknowns a_2..a_delta). Plethystic tails at (x^r, u^r),
/// r >= 2, are deep inside the disk of convergence; they are summed from exact
/// truncated series at u = 1 (including the exact d/du series for F_u) and
/// from the numeric scale ladder off u = 1. Only the r = 1 slot is unknown.
class ImplicitSystem {
 public:
  ImplicitSystem(DegreeBound delta, Marking mark, int prec)
      : delta_(delta), mark_(mark), prec_(prec), digits_(prec + 30) {
    zero_ = (mark_.kind == Marking::Kind::vertex_degree && mark_.j > delta_.delta) ||
            (mark_.kind == Marking::Kind::edge_type &&
             (mark_.j > delta_.delta || (mark_.i == 1 && mark_.j == 1)));
    edge_ = mark_.kind == Marking::Kind::edge_type && !zero_;
    dim_ = edge_ ? delta_.delta - 1 : 1;
    crit_ = detail::solve_critical(delta_, prec_, digits_);
    PrecisionScope scope(digits_);
    u1_vals_.resize(edge_ ? static_cast<size_t>(delta_.delta) + 1 : 1);
    u1_vals_[0] = crit_.p_coeffs;
    if (edge_) {
      census::detail::MarkedSystemBuilder<Rational> ub(delta_, Marking::none(), crit_.n_top,
                                                       Rational(1));
      ub.run();
      for (int k = 1; k <= delta_.delta; ++k) {
        TruncatedSeries ak = k == 1 ? TruncatedSeries::x(crit_.n_top)
                                    : shift_up(ub.zs(census::detail::kP, k - 1));
        auto& v = u1_vals_[static_cast<size_t>(k)];
        v.resize(static_cast<size_t>(crit_.n_top) + 1);
        for (int i = 0; i <= crit_.n_top; ++i) v[static_cast<size_t>(i)] = to_real(ak[i]);
      }
    }
  }

  int dimension() const { return dim_; }
  bool zero_statistic() const { return zero_; }
  DegreeBound bound() const { return delta_; }
  const Marking& marking() const { return mark_; }
  int precision() const { return prec_; }
  int internal_digits() const { return digits_; }
  int tail_order() const { return crit_.n_top; }
  const Real& x0() const { return crit_.x0; }
  const Real& p0() const { return crit_.p0; }
  const Real& critical_residual1() const { return crit_.residual1; }
  const Real& critical_residual2() const { return crit_.residual2; }

  /// y(x0, 1); every extended solve warm-starts from here.
  std::vector<Real> warm_start() {
    PrecisionScope scope(digits_);
    if (!edge_) return {crit_.p0};
    const int K = delta_.delta - 1;
    std::vector<Real> slots(static_cast<size_t>(K) + 1, Real(0));
    slots[1] = crit_.p0;
    for (int r = 2; r <= K; ++r) slots[static_cast<size_t>(r)] = detail::eval_tail(u1_vals_[0], crit_.x0, r);
    std::vector<Real> h = detail::h_from_slots(slots, K);
    std::vector<Real> y(static_cast<size_t>(dim_));
    for (int k = 2; k <= delta_.delta; ++k)
      y[static_cast<size_t>(k - 2)] = crit_.x0 * h[static_cast<size_t>(k - 1)];
    return y;
  }

  std::vector<Real> F(const Real& x, const std::vector<Real>& y, const Real& u) {
    PrecisionScope scope(digits_);
    auto tail = value_tails(u);
    return eval_F<Real>(x, y, u, tail);
  }

  /// I - F_y at the point; the basis of the branch condition det(I - F_y) = 0.
  linalg::Matrix I_minus_Fy(const Real& x, const std::vector<Real>& y, const Real& u) {
    PrecisionScope scope(digits_);
    linalg::Matrix fy = eval_Fy(x, y, u);
    linalg::Matrix m(static_cast<size_t>(dim_), static_cast<size_t>(dim_));
    for (size_t r = 0; r < m.rows(); ++r)
      for (size_t c = 0; c < m.cols(); ++c) m(r, c) = (r == c ? Real(1) : Real(0)) - fy(r, c);
    return m;
  }

  /// Total x-derivative of F (tail dependence included), via dual numbers.
  std::vector<Real> Fx(const Real& x, const std::vector<Real>& y, const Real& u) {
    PrecisionScope scope(digits_);
    auto tail = value_tails(u);
    auto dual_tail = [&tail](int comp, int r, const DualReal& xx) {
      // tails are functions of x alone here; differentiate through the point
      return detail::eval_tail(tail.coeffs(comp, r), xx, r);
    };
    std::vector<DualReal> yd;
    yd.reserve(y.size());
    for (const Real& v : y) yd.emplace_back(v, Real(0));
    std::vector<DualReal> f = eval_F<DualReal>(DualReal(x, Real(1)), yd, DualReal(u, Real(0)), dual_tail);
    std::vector<Real> out(f.size());
    for (size_t i = 0; i < f.size(); ++i) out[i] = f[i].d;
    return out;
  }

  /// Total u-derivative of F at u = 1. Tail derivatives are exact: they sum
  /// the d/du census series (dual-rational build), with the chain factor r
  /// for the inner u^r applied here.
  std::vector<Real> Fu_at1(const Real& x, const std::vector<Real>& y) {
    PrecisionScope scope(digits_);
    ensure_dual_series();
    auto dual_tail = [this](int comp, int r, const DualReal& xx) {
      Real val = detail::eval_tail(u1_vals_[static_cast<size_t>(comp)], xx.v, r);
      Real du = detail::eval_tail(u1_dus_[static_cast<size_t>(comp)], xx.v, r) * r;
      return DualReal(val, du);
    };
    std::vector<DualReal> yd;
    yd.reserve(y.size());
    for (const Real& v : y) yd.emplace_back(v, Real(0));
    std::vector<DualReal> f =
        eval_F<DualReal>(DualReal(x, Real(0)), yd, DualReal(Real(1), Real(1)), dual_tail);
    std::vector<Real> out(f.size());
    for (size_t i = 0; i < f.size(); ++i) out[i] = f[i].d;
    return out;
  }

  /// Builds the numeric tail ladder for an off-1 mark value ahead of a solve.
  void prepare_u(const Real& u) {
    PrecisionScope scope(digits_);
    if (u != 1) ladder_for(u);
  }

 private:
  /// Uniform access to tail coefficient arrays for a given mark value.
  struct ValueTails {
    ImplicitSystem* sys;
    detail::LadderFamily* fam;  // null at u = 1
    const std::vector<Real>& coeffs(int comp, int r) const {
      if (fam == nullptr) return sys->u1_vals_[static_cast<size_t>(comp)];
      return fam->scale(r)[static_cast<size_t>(comp)];
    }
    Real operator()(int comp, int r, const Real& x) const {
      return detail::eval_tail(coeffs(comp, r), x, r);
    }
  };

  ValueTails value_tails(const Real& u) {
    if (u == 1) return {this, nullptr};
    return {this, ladder_for(u)};
  }

  template <class S, class Tail>
  std::vector<S> eval_F(const S& x, const std::vector<S>& y, const S& u, Tail&& tail) {
    const int D = delta_.delta;
    const int K = D - 1;
    if (!edge_) {
      std::vector<S> slots(static_cast<size_t>(K) + 1, S(0));
      slots[1] = y[0];
      for (int r = 2; r <= K; ++r) slots[static_cast<size_t>(r)] = tail(0, r, x);
      std::vector<S> h = detail::h_from_slots(slots, K);
      S acc = S(0);
      for (int l = 1; l <= D; ++l) acc += h[static_cast<size_t>(l - 1)];
      if (mark_.kind == Marking::Kind::vertex_degree)
        acc += (u - S(1)) * h[static_cast<size_t>(mark_.j - 1)];
      return {x * acc};
    }
    BaseH<S> H = base_h<S>(x, y, std::forward<Tail>(tail));
    std::vector<S> f(static_cast<size_t>(dim_), S(0));
    for (int k = 2; k <= D; ++k) {
      S acc = S(0);
      if (k == mark_.i && mark_.i != mark_.j) {
        for (int l2 = 0; l2 <= k - 1; ++l2)
          acc += H.pmaj[static_cast<size_t>(k - 1 - l2)] * H.aj[static_cast<size_t>(l2)] *
                 detail::pow_si(u, l2);
      } else if (k == mark_.j) {
        for (int m2 = 0; m2 <= k - 1; ++m2)
          acc += H.pmai[static_cast<size_t>(k - 1 - m2)] * H.ai[static_cast<size_t>(m2)] *
                 detail::pow_si(u, m2);
      } else {
        acc = H.p[static_cast<size_t>(k - 1)];
      }
      f[static_cast<size_t>(k - 2)] = x * acc;
    }
    return f;
  }

  template <class S>
  struct BaseH {
    std::vector<S> p, pmai, ai, pmaj, aj;
  };

  /// Slot values for every base, then their cycle-index h-vectors.
  template <class S, class Tail>
  BaseH<S> base_h(const S& x, const std::vector<S>& y, Tail&& tail) {
    const int D = delta_.delta;
    const int K = D - 1;
    std::vector<std::vector<S>> av(static_cast<size_t>(K) + 1,
                                   std::vector<S>(static_cast<size_t>(D) + 1, S(0)));
    av[1][1] = x;
    for (int k = 2; k <= D; ++k) av[1][static_cast<size_t>(k)] = y[static_cast<size_t>(k - 2)];
    for (int r = 2; r <= K; ++r)
      for (int k = 1; k <= D; ++k) av[static_cast<size_t>(r)][static_cast<size_t>(k)] = tail(k, r, x);
    std::vector<S> pv(static_cast<size_t>(K) + 1, S(0));
    for (int r = 1; r <= K; ++r)
      for (int k = 1; k <= D; ++k) pv[static_cast<size_t>(r)] += av[static_cast<size_t>(r)][static_cast<size_t>(k)];
    auto slots_of = [&](auto pick) {
      std::vector<S> slots(static_cast<size_t>(K) + 1, S(0));
      for (int r = 1; r <= K; ++r)
        slots[static_cast<size_t>(r)] = pick(pv[static_cast<size_t>(r)], av[static_cast<size_t>(r)]);
      return slots;
    };
    BaseH<S> out;
    out.p = detail::h_from_slots(slots_of([](const S& p, const auto&) { return p; }), K);
    out.pmai = detail::h_from_slots(
        slots_of([this](const S& p, const auto& a) { return p - a[static_cast<size_t>(mark_.i)]; }), K);
    out.ai = detail::h_from_slots(
        slots_of([this](const S&, const auto& a) { return a[static_cast<size_t>(mark_.i)]; }), K);
    if (mark_.i != mark_.j) {
      out.pmaj = detail::h_from_slots(
          slots_of([this](const S& p, const auto& a) { return p - a[static_cast<size_t>(mark_.j)]; }),
          K);
      out.aj = detail::h_from_slots(
          slots_of([this](const S&, const auto& a) { return a[static_cast<size_t>(mark_.j)]; }), K);
    }
    return out;
  }

  linalg::Matrix eval_Fy(const Real& x, const std::vector<Real>& y, const Real& u) {
    const int D = delta_.delta;
    const int K = D - 1;
    auto tail = value_tails(u);
    if (!edge_) {
      std::vector<Real> slots(static_cast<size_t>(K) + 1, Real(0));
      slots[1] = y[0];
      for (int r = 2; r <= K; ++r) slots[static_cast<size_t>(r)] = tail(0, r, x);
      std::vector<Real> h = detail::h_from_slots(slots, K);
      Real acc(0);
      for (int l = 2; l <= D; ++l) acc += h[static_cast<size_t>(l - 2)];
      if (mark_.kind == Marking::Kind::vertex_degree && mark_.j >= 2)
        acc += (u - 1) * h[static_cast<size_t>(mark_.j - 2)];
      linalg::Matrix m(1, 1);
      m(0, 0) = x * acc;
      return m;
    }
    BaseH<Real> H = base_h<Real>(x, y, tail);
    linalg::Matrix fy(static_cast<size_t>(dim_), static_cast<size_t>(dim_));
    for (int k = 2; k <= D; ++k) {
      const size_t row = static_cast<size_t>(k - 2);
      for (int m = 2; m <= D; ++m) {
        const size_t col = static_cast<size_t>(m - 2);
        Real d(0);
        if (k == mark_.i && mark_.i != mark_.j) {
          for (int l2 = 0; l2 <= k - 1; ++l2) {
            const int l1 = k - 1 - l2;
            if (m != mark_.j && l1 >= 1)
              d += H.pmaj[static_cast<size_t>(l1 - 1)] * H.aj[static_cast<size_t>(l2)] *
                   detail::pow_si(u, l2);
            if (m == mark_.j && l2 >= 1)
              d += H.pmaj[static_cast<size_t>(l1)] * H.aj[static_cast<size_t>(l2 - 1)] *
                   detail::pow_si(u, l2);
          }
        } else if (k == mark_.j) {
          // the marked child degree in this row is i (rows j and i == j alike)
          for (int m2 = 0; m2 <= k - 1; ++m2) {
            const int m1 = k - 1 - m2;
            if (m != mark_.i && m1 >= 1)
              d += H.pmai[static_cast<size_t>(m1 - 1)] * H.ai[static_cast<size_t>(m2)] *
                   detail::pow_si(u, m2);
            if (m == mark_.i && m2 >= 1)
              d += H.pmai[static_cast<size_t>(m1)] * H.ai[static_cast<size_t>(m2 - 1)] *
                   detail::pow_si(u, m2);
          }
        } else {
          d = H.p[static_cast<size_t>(k - 2)];
        }
        fy(row, col) = x * d;
      }
    }
    return fy;
  }

  void ensure_dual_series() {
    if (dual_built_) return;
    if (zero_) throw DomainError("F_u is undefined for zero-statistic markings");
    u1_dus_.resize(u1_vals_.size());
    census::detail::MarkedSystemBuilder<DualRational> b(delta_, mark_, crit_.n_top,
                                                        DualRational(Rational(1), Rational(1)));
    b.run();
    auto take = [&](const TruncatedSeriesT<DualRational>& s, std::vector<Real>& dst) {
      dst.resize(static_cast<size_t>(crit_.n_top) + 1);
      for (int i = 0; i <= crit_.n_top; ++i) dst[static_cast<size_t>(i)] = to_real(s[i].d);
    };
    take(b.planted(), u1_dus_[0]);
    if (edge_)
      for (int k = 1; k <= delta_.delta; ++k) take(b.component(k), u1_dus_[static_cast<size_t>(k)]);
    dual_built_ = true;
  }

  detail::LadderFamily* ladder_for(const Real& u) {
    std::string key = u.str(static_cast<size_t>(digits_), std::ios_base::scientific);
    auto it = ladders_.find(key);
    if (it == ladders_.end())
      it = ladders_.emplace(key, detail::LadderFamily(delta_, mark_, u, crit_.n_top)).first;
    return &it->second;
  }

  DegreeBound delta_;
  Marking mark_;
  int prec_;
  int digits_;
  bool zero_ = false;
  bool edge_ = false;
  int dim_ = 1;
  detail::CriticalData crit_;
  std::vector<std::vector<Real>> u1_vals_;
  std::vector<std::vector<Real>> u1_dus_;
  bool dual_built_ = false;
  std::map<std::string, detail::LadderFamily> ladders_;
};

}  // namespace treecensus::singularity

#endif  // TREECENSUS_IMPLICIT_SYSTEM_HPP
