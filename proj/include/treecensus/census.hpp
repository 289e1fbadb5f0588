// Copyright (c) 2026 The treecensus authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TREECENSUS_CENSUS_HPP
#define TREECENSUS_CENSUS_HPP

#include <algorithm>
#include <array>
#include <functional>
#include <utility>
#include <vector>

#include "treecensus/cycle_index.hpp"
#include "treecensus/marking.hpp"
#include "treecensus/real.hpp"
#include "treecensus/series.hpp"

namespace treecensus::census {

namespace detail {

/// Base series that carry cycle-index caches during a marked build.
enum BaseId : int { kP = 0, kPmAI = 1, kAI = 2, kPmAJ = 3, kAJ = 4, kBaseCount = 5 };

/// One bottom-up pass over x-order solving the planted functional system.
///
/// The coefficient of x^n on every right-hand side depends only on orders
/// < n (each equation carries a leading factor x), so a single sweep
/// n = 1..N determines the fixed point exactly. Cycle-index partial results
/// h_m = Z(S_m; base) are maintained incrementally alongside.
///
/// Coeff is Rational (univariate), UPoly (bivariate) or a dual ring
/// (d/du census at u = 1). The same recurrences serve all three; only the
/// plethystic stretch hook differs.
template <class Coeff>
class MarkedSystemBuilder {
 public:
  using Series = TruncatedSeriesT<Coeff>;
  /// Supplies the coefficient of x^(r*idx) of base(x^r, u^r) externally for
  /// r >= 2. Used by the numeric scale ladder, where the substituted series
  /// lives at another u-scale and cannot be derived from this build's own
  /// coefficients.
  using SubstitutionSource = std::function<Coeff(int base, int r, int idx)>;

  MarkedSystemBuilder(DegreeBound delta, Marking mark, int order, Coeff u_value, int h_levels = -1)
      : delta_(delta.delta),
        mark_(mark),
        order_(order),
        u_(std::move(u_value)),
        h_levels_(h_levels < 0 ? delta.delta : h_levels) {
    if (order_ < 1) throw DomainError("census order must be >= 1");
    if (mark_.kind == Marking::Kind::vertex_degree && mark_.j > delta_)
      throw DomainError("degree marking above the bound must use the embed path");
    if (mark_.kind == Marking::Kind::edge_type && mark_.j > delta_)
      throw DomainError("edge marking above the bound must use the embed path");
    u_pow_.push_back(Coeff(1));
    for (int e = 1; e <= delta_ + 1; ++e) u_pow_.push_back(u_pow_.back() * u_);
    edge_ = mark_.kind == Marking::Kind::edge_type;
    for (int b = 0; b < kBaseCount; ++b) present_[static_cast<size_t>(b)] = false;
    present_[kP] = true;
    if (edge_) {
      present_[kPmAI] = present_[kAI] = true;
      if (mark_.i != mark_.j) present_[kPmAJ] = present_[kAJ] = true;
      comp_.assign(static_cast<size_t>(delta_) + 1, Series(order_));
      comp_[1] = Series::x(order_);
    }
    for (int b = 0; b < kBaseCount; ++b) {
      if (!present_[static_cast<size_t>(b)]) continue;
      base_[static_cast<size_t>(b)] = Series(order_);
      auto& hb = h_[static_cast<size_t>(b)];
      hb.assign(static_cast<size_t>(h_levels_) + 1, Series(order_));
      hb[0] = Series::one(order_);
    }
  }

  void set_substitution_source(SubstitutionSource source) { cross_ = std::move(source); }

  void run() {
    for (int n = 1; n <= order_; ++n) step(n);
  }

  /// p(x) or p(x, u): the full planted series.
  const Series& planted() const { return base_[kP]; }
  /// a_k(x, u) for k = 1..delta (edge builds only).
  const Series& component(int k) const { return comp_[static_cast<size_t>(k)]; }
  /// Z(S_m; base), m <= delta, for the bases this build maintains.
  const Series& zs(int b, int m) const { return h_[static_cast<size_t>(b)][static_cast<size_t>(m)]; }
  bool has_base(int b) const { return present_[static_cast<size_t>(b)]; }
  const Coeff& u_pow(int e) const { return u_pow_[static_cast<size_t>(e)]; }
  int delta() const { return delta_; }

 private:
  // acc += coefficient of x^t in Z(S_l1; A) * Z(S_l2; B) * u^e.
  void conv_pair(Coeff& acc, int bA, int l1, int bB, int l2, int t, int e) {
    const auto& A = h_[static_cast<size_t>(bA)][static_cast<size_t>(l1)];
    const auto& B = h_[static_cast<size_t>(bB)][static_cast<size_t>(l2)];
    Coeff sum{};
    for (int q = 0; q <= t; ++q) {
      if (!coeff_is_zero(A[q]) && !coeff_is_zero(B[t - q]))
        coeff_mul_add_substituted(sum, A[q], 1, B[t - q]);
    }
    if (!coeff_is_zero(sum)) coeff_mul_add_substituted(acc, sum, 1, u_pow_[static_cast<size_t>(e)]);
  }

  void step(int n) {
    if (!edge_) {
      // p = x * sum_{l=1}^{D} Z(S_{l-1}; p)  [+ x(u-1) Z(S_{j-1}; p)]
      Coeff acc{};
      const auto& hp = h_[kP];
      for (int m = 0; m <= delta_ - 1; ++m) acc += hp[static_cast<size_t>(m)][n - 1];
      if (mark_.kind == Marking::Kind::vertex_degree) {
        Coeff corr = hp[static_cast<size_t>(mark_.j - 1)][n - 1];
        acc += corr * u_ - corr;
      }
      base_[kP].at(n) = std::move(acc);
    } else {
      const int I = mark_.i, J = mark_.j;
      for (int k = 2; k <= delta_; ++k) {
        Coeff acc{};
        if (k == I && I != J) {
          // root of degree i: l2 subtrees with sub-root degree j carry u each
          for (int l2 = 0; l2 <= k - 1; ++l2) conv_pair(acc, kPmAJ, k - 1 - l2, kAJ, l2, n - 1, l2);
        } else if ((k == J && I != J) || (k == I && I == J)) {
          for (int m2 = 0; m2 <= k - 1; ++m2) conv_pair(acc, kPmAI, k - 1 - m2, kAI, m2, n - 1, m2);
        } else {
          acc = h_[kP][static_cast<size_t>(k - 1)][n - 1];
        }
        comp_[static_cast<size_t>(k)].at(n) = std::move(acc);
      }
      sync_bases(n);
    }
    // Extend the cycle-index tables to order n.
    for (int b = 0; b < kBaseCount; ++b) {
      if (!present_[static_cast<size_t>(b)]) continue;
      const auto& src = base_[static_cast<size_t>(b)];
      auto& hb = h_[static_cast<size_t>(b)];
      for (int m = 1; m <= h_levels_; ++m) {
        Coeff acc{};
        for (int r = 1; r <= m; ++r) {
          const auto& prev = hb[static_cast<size_t>(m - r)];
          for (int ii = r; ii <= n; ii += r) {
            if (coeff_is_zero(prev[n - ii])) continue;
            if (r == 1) {
              if (!coeff_is_zero(src[ii])) coeff_mul_add_substituted(acc, src[ii], 1, prev[n - ii]);
            } else if (cross_) {
              Coeff sc = cross_(b, r, ii / r);
              if (!coeff_is_zero(sc)) coeff_mul_add_substituted(acc, sc, 1, prev[n - ii]);
            } else {
              const Coeff& sc = src[ii / r];
              if (!coeff_is_zero(sc)) coeff_mul_add_substituted(acc, sc, r, prev[n - ii]);
            }
          }
        }
        coeff_div_int(acc, m);
        hb[static_cast<size_t>(m)].at(n) = std::move(acc);
      }
    }
  }

  void sync_bases(int n) {
    Coeff p = (n == 1) ? Coeff(1) : Coeff{};
    for (int k = 2; k <= delta_; ++k) p += comp_[static_cast<size_t>(k)][n];
    base_[kP].at(n) = p;
    base_[kAI].at(n) = comp_[static_cast<size_t>(mark_.i)][n];
    base_[kPmAI].at(n) = p - comp_[static_cast<size_t>(mark_.i)][n];
    if (mark_.i != mark_.j) {
      base_[kAJ].at(n) = comp_[static_cast<size_t>(mark_.j)][n];
      base_[kPmAJ].at(n) = p - comp_[static_cast<size_t>(mark_.j)][n];
    }
  }

  int delta_;
  Marking mark_;
  int order_;
  Coeff u_;
  int h_levels_;
  bool edge_ = false;
  SubstitutionSource cross_;
  std::vector<Coeff> u_pow_;
  std::array<bool, kBaseCount> present_{};
  std::array<Series, kBaseCount> base_{Series(0), Series(0), Series(0), Series(0), Series(0)};
  std::array<std::vector<Series>, kBaseCount> h_;
  std::vector<Series> comp_;  // a_1..a_delta (edge builds)
};

inline void require_counting_series(const TruncatedSeries& s, const char* what) {
  for (int n = 0; n <= s.truncation_order(); ++n) {
    if (!is_integer(s[n]) || s[n] < 0)
      throw SanityViolationError(std::string(what) + ": coefficient not a non-negative integer at order " +
                                 std::to_string(n));
  }
}

inline void require_counting_series(const BivariateSeries& s, const char* what) {
  for (int n = 0; n <= s.truncation_order(); ++n) {
    if (s[n].degree() > n)
      throw SanityViolationError(std::string(what) + ": u-degree exceeds x-order at " + std::to_string(n));
    for (int e = 0; e <= s[n].degree(); ++e) {
      const Rational& c = s[n][static_cast<size_t>(e)];
      if (!is_integer(c) || c < 0)
        throw SanityViolationError(std::string(what) + ": coefficient not a non-negative integer at order " +
                                   std::to_string(n));
    }
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Univariate census
// ---------------------------------------------------------------------------

/// Exact counting series for a given bound and truncation order.
struct CensusTables {
  int delta;
  int order;
  TruncatedSeries p;             ///< planted trees
  TruncatedSeries p_restricted;  ///< planted, root degree <= delta - 1
  TruncatedSeries r;             ///< rooted trees
  TruncatedSeries t;             ///< free trees
};

/// Planted series p and the root-restricted p^(delta-1), one bottom-up pass.
inline std::pair<TruncatedSeries, TruncatedSeries> build_planted(DegreeBound delta, int order) {
  detail::MarkedSystemBuilder<Rational> b(delta, Marking::none(), order, Rational(1));
  b.run();
  TruncatedSeries restricted(order);
  for (int m = 0; m <= delta.delta - 2; ++m) restricted = add(restricted, b.zs(detail::kP, m));
  restricted = shift_up(restricted);
  detail::require_counting_series(b.planted(), "planted series");
  detail::require_counting_series(restricted, "restricted planted series");
  return {b.planted(), restricted};
}

/// Full univariate census: p, p^(delta-1), rooted r, free t (Otter's identity).
inline CensusTables build_free(DegreeBound delta, int order) {
  detail::MarkedSystemBuilder<Rational> b(delta, Marking::none(), order, Rational(1));
  b.run();
  const TruncatedSeries& p = b.planted();
  TruncatedSeries restricted(order), r(order);
  for (int m = 0; m <= delta.delta; ++m) {
    if (m <= delta.delta - 2) restricted = add(restricted, b.zs(detail::kP, m));
    r = add(r, b.zs(detail::kP, m));
  }
  restricted = shift_up(restricted);
  r = shift_up(r);
  TruncatedSeries t = add(subtract(r, scale(multiply(p, p), Rational(1, 2))),
                          scale(substitute_power(p, 2), Rational(1, 2)));
  detail::require_counting_series(p, "p");
  detail::require_counting_series(restricted, "p_restricted");
  detail::require_counting_series(r, "r");
  detail::require_counting_series(t, "t");
  return {delta.delta, order, p, restricted, r, t};
}

// ---------------------------------------------------------------------------
// Marked census
// ---------------------------------------------------------------------------

/// Bivariate tables for a vertex-degree marking.
struct MarkedCensus {
  int delta;
  int order;
  Marking marking;
  BivariateSeries p, r, t;
};

/// Bivariate tables for an edge-type marking, including the root-degree split.
struct EdgeMarkedCensus {
  int delta;
  int order;
  Marking marking;
  std::vector<BivariateSeries> a;  ///< a[k], k = 1..delta (a[0] unused)
  BivariateSeries p, r, t;
};

namespace detail {
inline MarkedCensus embed_unmarked(DegreeBound delta, Marking mark, int order) {
  CensusTables u = build_free(delta, order);
  return {delta.delta, order, mark, embed_bivariate(u.p), embed_bivariate(u.r), embed_bivariate(u.t)};
}
}  // namespace detail

/// t(x, u) whose x^n u^k coefficient counts trees of order n with k vertices
/// of degree j. j > delta is allowed: the statistic is identically zero.
inline MarkedCensus build_marked_degree(DegreeBound delta, int j, int order) {
  if (j < 1) throw DomainError("vertex-degree marking requires j >= 1");
  if (j > delta.delta) return detail::embed_unmarked(delta, Marking::degree(j), order);
  const Marking mark = Marking::degree(j);
  detail::MarkedSystemBuilder<UPoly> b(delta, mark, order, UPoly::monomial(1));
  b.run();
  const BivariateSeries& p = b.planted();
  const UPoly u_minus_1{Rational(-1), Rational(1)};
  BivariateSeries r(order);
  for (int m = 0; m <= delta.delta; ++m) r = add(r, b.zs(detail::kP, m));
  r = add(r, scale(b.zs(detail::kP, j), u_minus_1));
  r = shift_up(r);
  BivariateSeries t = add(subtract(r, scale(multiply(p, p), UPoly::constant(Rational(1, 2)))),
                          scale(substitute_power(p, 2), UPoly::constant(Rational(1, 2))));
  detail::require_counting_series(p, "p(x,u)");
  detail::require_counting_series(r, "r(x,u)");
  detail::require_counting_series(t, "t(x,u)");
  return {delta.delta, order, mark, p, r, t};
}

/// t(x, u) for the edge-type (i, j) marking; solves the a_k root-degree system
/// jointly in one bottom-up pass. Type (1,1) is closed-form: the two-vertex
/// tree is the only tree with such an edge.
inline EdgeMarkedCensus build_marked_edge(DegreeBound delta, int i, int j, int order) {
  const Marking mark = Marking::edge(i, j);
  i = mark.i;
  j = mark.j;
  if (j > delta.delta) {
    MarkedCensus m = detail::embed_unmarked(delta, mark, order);
    detail::MarkedSystemBuilder<Rational> ub(delta, Marking::none(), order, Rational(1));
    ub.run();
    std::vector<BivariateSeries> a(static_cast<size_t>(delta.delta) + 1, BivariateSeries(order));
    a[1] = embed_bivariate(TruncatedSeries::x(order));
    for (int k = 2; k <= delta.delta; ++k)
      a[static_cast<size_t>(k)] = embed_bivariate(shift_up(ub.zs(detail::kP, k - 1)));
    return {delta.delta, order, mark, std::move(a), m.p, m.r, m.t};
  }
  if (i == 1 && j == 1) {
    MarkedCensus un = detail::embed_unmarked(delta, mark, order);
    detail::MarkedSystemBuilder<Rational> ub(delta, Marking::none(), order, Rational(1));
    ub.run();
    std::vector<BivariateSeries> a(static_cast<size_t>(delta.delta) + 1, BivariateSeries(order));
    a[1] = embed_bivariate(TruncatedSeries::x(order));
    for (int k = 2; k <= delta.delta; ++k)
      a[static_cast<size_t>(k)] = embed_bivariate(shift_up(ub.zs(detail::kP, k - 1)));
    EdgeMarkedCensus out{delta.delta, order, mark, std::move(a), un.p, un.r, un.t};
    if (order >= 2) {
      // the single (1,1) edge lives in the two-vertex tree
      out.t.at(2) = UPoly::monomial(1, out.t[2].at_u1());
      out.r.at(2) = UPoly::monomial(1, out.r[2].at_u1());
    }
    return out;
  }
  detail::MarkedSystemBuilder<UPoly> b(delta, mark, order, UPoly::monomial(1));
  b.run();
  const BivariateSeries& p = b.planted();
  BivariateSeries r(order);
  for (int m = 0; m <= delta.delta; ++m) r = add(r, b.zs(detail::kP, m));
  auto rooted_correction = [&](int rootdeg, int bA, int bB) {
    for (int e = 1; e <= rootdeg; ++e) {
      UPoly w = UPoly::monomial(e) - UPoly::constant(1);  // u^e - 1
      r = add(r, scale(multiply(b.zs(bA, rootdeg - e), b.zs(bB, e)), w));
    }
  };
  if (i != j) {
    rooted_correction(i, detail::kPmAJ, detail::kAJ);
    rooted_correction(j, detail::kPmAI, detail::kAI);
  } else {
    rooted_correction(j, detail::kPmAI, detail::kAI);
  }
  r = shift_up(r);
  const UPoly half = UPoly::constant(Rational(1, 2));
  const UPoly one_minus_u{Rational(1), Rational(-1)};
  BivariateSeries t = add(subtract(r, scale(multiply(p, p), half)),
                          scale(substitute_power(p, 2), half));
  std::vector<BivariateSeries> a(static_cast<size_t>(delta.delta) + 1, BivariateSeries(order));
  for (int k = 1; k <= delta.delta; ++k) a[static_cast<size_t>(k)] = b.component(k);
  if (i != j) {
    t = add(t, scale(multiply(a[static_cast<size_t>(i)], a[static_cast<size_t>(j)]), one_minus_u));
  } else {
    const auto& ai = a[static_cast<size_t>(i)];
    t = add(t, scale(multiply(ai, ai), half * one_minus_u));
    t = subtract(t, scale(substitute_power(ai, 2), half * one_minus_u));
  }
  detail::require_counting_series(p, "p(x,u)");
  detail::require_counting_series(r, "r(x,u)");
  detail::require_counting_series(t, "t(x,u)");
  for (int k = 1; k <= delta.delta; ++k)
    detail::require_counting_series(a[static_cast<size_t>(k)], "a_k(x,u)");
  return {delta.delta, order, mark, std::move(a), p, r, t};
}

/// Marked free-tree series for any marking kind (dispatch helper).
inline BivariateSeries marked_t(DegreeBound delta, Marking mark, int order) {
  switch (mark.kind) {
    case Marking::Kind::none:
      return embed_bivariate(build_free(delta, order).t);
    case Marking::Kind::vertex_degree:
      return build_marked_degree(delta, mark.j, order).t;
    case Marking::Kind::edge_type:
      return build_marked_edge(delta, mark.i, mark.j, order).t;
  }
  throw DomainError("unknown marking");
}

// ---------------------------------------------------------------------------
// Distributions
// ---------------------------------------------------------------------------

/// Exact distribution of the marked statistic at a fixed order n.
struct DistributionTable {
  int n = 0;
  std::vector<Integer> counts;  ///< counts[k] = t_{n,k}
  Integer total = 0;            ///< t_n
  Rational mean;
  Rational variance;
  Rational third_central;
};

inline DistributionTable distribution(const BivariateSeries& t, int n) {
  if (n < 0 || n > t.truncation_order())
    throw DomainError("distribution order exceeds the truncation order");
  DistributionTable out;
  out.n = n;
  const UPoly& poly = t[n];
  out.counts.resize(static_cast<size_t>(std::max(poly.degree() + 1, 1)), Integer(0));
  for (int k = 0; k <= poly.degree(); ++k) {
    const Rational& c = poly[static_cast<size_t>(k)];
    if (!is_integer(c) || c < 0)
      throw SanityViolationError("distribution counts must be non-negative integers");
    out.counts[static_cast<size_t>(k)] = c.get_num();
    out.total += c.get_num();
  }
  if (out.total == 0) throw EmptyFamilyError("no trees at order " + std::to_string(n));
  Rational m1(0), m2(0), m3(0);
  for (size_t k = 0; k < out.counts.size(); ++k) {
    if (out.counts[k] == 0) continue;
    Rational w(out.counts[k], out.total);
    w.canonicalize();
    Rational kk(static_cast<long>(k));
    m1 += kk * w;
    m2 += kk * kk * w;
    m3 += kk * kk * kk * w;
  }
  out.mean = m1;
  out.variance = m2 - m1 * m1;
  out.third_central = m3 - 3 * m1 * m2 + 2 * m1 * m1 * m1;
  return out;
}

/// Standardized skewness m3 / var^(3/2) of the exact distribution; zero by
/// convention when the distribution is degenerate.
inline Real skewness(const DistributionTable& table, int prec = 50) {
  PrecisionScope scope(prec + 10);
  if (table.variance == 0) return Real(0);
  return to_real(table.third_central) / pow(to_real(table.variance), Real(3) / Real(2));
}

/// Exact tail mass Pr[|X_n - E X_n| > n^(3/4)], decided by comparing
/// (k - mean)^4 with n^3 in exact arithmetic.
inline Rational concentration_probe(const DistributionTable& table) {
  Integer n3 = pow_int(Integer(table.n), 3);
  Integer tail(0);
  for (size_t k = 0; k < table.counts.size(); ++k) {
    if (table.counts[k] == 0) continue;
    Rational d = Rational(static_cast<long>(k)) - table.mean;
    Rational d4 = d * d * d * d;
    if (d4 > Rational(n3)) tail += table.counts[k];
  }
  Rational out(tail, table.total);
  out.canonicalize();
  return out;
}

}  // namespace treecensus::census

#endif  // TREECENSUS_CENSUS_HPP
