// Copyright (c) 2026 The treecensus authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TREECENSUS_INDICES_HPP
#define TREECENSUS_INDICES_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treecensus/census.hpp"
#include "treecensus/singularity.hpp"

namespace treecensus::indices {

/// mu (and sigma) for every marking of a fixed bound, computed once and
/// reused across exponents: each entry costs a full extended-system trace.
struct MuTable {
  int delta = 0;
  int precision = 0;
  std::vector<singularity::AsymptoticConstants> degree;           ///< j = 1..delta at [j-1]
  std::map<std::pair<int, int>, singularity::AsymptoticConstants> edge;  ///< (i, j), i <= j
};

inline MuTable compute_mu_table(DegreeBound delta, int prec, bool with_edges,
                                const Real& h = Real("1e-6")) {
  MuTable out;
  out.delta = delta.delta;
  out.precision = prec;
  for (int j = 1; j <= delta.delta; ++j) {
    singularity::ImplicitSystem sys(delta, Marking::degree(j), prec);
    out.degree.push_back(singularity::mu_sigma(sys, prec, h));
  }
  if (with_edges) {
    for (int i = 1; i <= delta.delta; ++i)
      for (int j = i; j <= delta.delta; ++j) {
        singularity::ImplicitSystem sys(delta, Marking::edge(i, j), prec);
        out.edge.emplace(std::make_pair(i, j), singularity::mu_sigma(sys, prec, h));
      }
  }
  return out;
}

/// One asymptotic index constant with its per-term breakdown and optional
/// finite-n exact comparisons.
struct IndexReport {
  int delta = 0;
  bool zagreb = true;  ///< false for the general Randic index
  Real exponent;
  Real constant;                                       ///< d_alpha or r_beta
  std::vector<std::pair<std::string, Real>> breakdown;  ///< term label -> contribution
  std::vector<std::pair<int, Real>> finite_n;           ///< n -> E[index]/n
};

/// d_alpha = sum_j j^alpha mu_j.
inline IndexReport zagreb_constant(const MuTable& mu, const Real& alpha) {
  IndexReport out;
  out.delta = mu.delta;
  out.zagreb = true;
  out.exponent = alpha;
  out.constant = Real(0);
  for (int j = 1; j <= mu.delta; ++j) {
    Real term = pow(Real(j), alpha) * mu.degree[static_cast<size_t>(j - 1)].mu;
    out.breakdown.emplace_back("degree " + std::to_string(j), term);
    out.constant += term;
  }
  return out;
}

/// r_beta = sum_{i<=j} (ij)^beta mu_ij; type (1,1) contributes zero.
inline IndexReport randic_constant(const MuTable& mu, const Real& beta) {
  if (mu.edge.empty()) throw DomainError("mu table was built without edge markings");
  IndexReport out;
  out.delta = mu.delta;
  out.zagreb = false;
  out.exponent = beta;
  out.constant = Real(0);
  for (const auto& [ij, consts] : mu.edge) {
    Real term = pow(Real(ij.first) * Real(ij.second), beta) * consts.mu;
    out.breakdown.emplace_back("edge " + std::to_string(ij.first) + "," + std::to_string(ij.second),
                               term);
    out.constant += term;
  }
  return out;
}

enum class IndexKind { zagreb, randic };

/// Exact finite-n expectation of D_alpha or R_beta over T_n^delta by linearity:
/// E[D_alpha] = sum_j j^alpha E[X_n^(j)], E[R_beta] = sum_{i<=j} (ij)^beta E[X_n^(i,j)].
/// The expectation is an exact rational mixed with the real exponent weights;
/// when the weights are integral (alpha a non-negative integer) the exact
/// rational value is also reported.
struct ExpectedIndex {
  int n = 0;
  Real value;                      ///< E[index] at order n
  std::optional<Rational> exact;   ///< present when every weight is integral
};

/// Reuses marked censuses across calls; distributions at n <= `order` come
/// from one build per marking.
class CensusCache {
 public:
  explicit CensusCache(DegreeBound delta) : delta_(delta) {}

  const BivariateSeries& marked_t(const Marking& mark, int order) {
    auto it = cache_.find(mark);
    if (it == cache_.end() || it->second.truncation_order() < order) {
      BivariateSeries t = census::marked_t(delta_, mark, order);
      it = cache_.insert_or_assign(mark, std::move(t)).first;
    }
    return it->second;
  }

  census::DistributionTable distribution(const Marking& mark, int n, int order_hint = 0) {
    const int order = std::max(n, order_hint);
    return census::distribution(marked_t(mark, order), n);
  }

  DegreeBound bound() const { return delta_; }

 private:
  DegreeBound delta_;
  std::map<Marking, BivariateSeries> cache_;
};

inline ExpectedIndex exact_expected_index(CensusCache& cache, int n, IndexKind kind,
                                          const Real& exponent, int order_hint = 0) {
  const int delta = cache.bound().delta;
  ExpectedIndex out;
  out.n = n;
  out.value = Real(0);
  const bool integral_exponent = exponent == floor(exponent) && exponent >= 0;
  const auto int_exp = integral_exponent ? static_cast<unsigned long>(exponent) : 0UL;
  Rational exact(0);
  if (kind == IndexKind::zagreb) {
    if (n == 1 && !(exponent > 0))
      throw DomainError("D_alpha of the one-vertex tree requires alpha > 0 (degree 0)");
    for (int j = 1; j <= delta; ++j) {
      census::DistributionTable d = cache.distribution(Marking::degree(j), n, order_hint);
      out.value += pow(Real(j), exponent) * to_real(d.mean);
      if (integral_exponent) exact += Rational(pow_int(Integer(j), int_exp)) * d.mean;
    }
  } else {
    for (int i = 1; i <= delta; ++i)
      for (int j = i; j <= delta; ++j) {
        census::DistributionTable d = cache.distribution(Marking::edge(i, j), n, order_hint);
        out.value += pow(Real(i) * Real(j), exponent) * to_real(d.mean);
        if (integral_exponent)
          exact += Rational(pow_int(Integer(i) * Integer(j), int_exp)) * d.mean;
      }
  }
  if (integral_exponent) out.exact = exact;
  return out;
}

}  // namespace treecensus::indices

#endif  // TREECENSUS_INDICES_HPP
