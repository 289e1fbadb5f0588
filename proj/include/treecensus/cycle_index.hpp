// Copyright (c) 2026 The treecensus authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TREECENSUS_CYCLE_INDEX_HPP
#define TREECENSUS_CYCLE_INDEX_HPP

#include <utility>
#include <vector>

#include "treecensus/series.hpp"

namespace treecensus {

/// Evaluator of the symmetric-group cycle index Z(S_k; f) under the plethystic
/// substitution s_i -> f(x^i, u^i). Uses the recurrence
///
///   h_0 = 1,   h_m = (1/m) * sum_{r=1}^{m} f(x^r, u^r) * h_{m-r},
///
/// whose h_k equals Z(S_k; f), the generating series of k-multisets of
/// f-structures. Results h_0..h_k are cached per argument series; create one
/// evaluator per census run (or per task -- instances are not synchronized).
template <class Coeff>
class CycleIndexEvaluator {
 public:
  explicit CycleIndexEvaluator(TruncatedSeriesT<Coeff> f) : f_(std::move(f)) {
    if (!coeff_is_zero(f_[0]))
      throw DomainError("cycle_index_apply requires a zero constant term");
    h_.push_back(TruncatedSeriesT<Coeff>::one(f_.truncation_order()));
  }

  /// Z(S_k; f); extends the h-cache as needed.
  const TruncatedSeriesT<Coeff>& apply(int k) {
    if (k < 0) throw DomainError("cycle_index_apply requires k >= 0");
    while (static_cast<int>(h_.size()) <= k) {
      const int m = static_cast<int>(h_.size());
      if (static_cast<int>(subs_.size()) < m) subs_.push_back(substitute_power(f_, m));
      TruncatedSeriesT<Coeff> hm(f_.truncation_order());
      for (int r = 1; r <= m; ++r) {
        const auto& sr = subs_[static_cast<size_t>(r) - 1];
        const auto& prev = h_[static_cast<size_t>(m - r)];
        const int N = f_.truncation_order();
        for (int i = r; i <= N; i += (r == 1 ? 1 : r)) {
          // s_r has support only on multiples of r; for r == 1 every index.
          if (coeff_is_zero(sr[i])) continue;
          for (int q = 0; q + i <= N; ++q) {
            if (!coeff_is_zero(prev[q])) coeff_mul_add_substituted(hm.at(i + q), sr[i], 1, prev[q]);
          }
        }
      }
      for (int n = 0; n <= f_.truncation_order(); ++n) coeff_div_int(hm.at(n), m);
      h_.push_back(std::move(hm));
    }
    return h_[static_cast<size_t>(k)];
  }

  const TruncatedSeriesT<Coeff>& argument() const { return f_; }

 private:
  TruncatedSeriesT<Coeff> f_;
  std::vector<TruncatedSeriesT<Coeff>> subs_;  // subs_[r-1] = f(x^r, u^r)
  std::vector<TruncatedSeriesT<Coeff>> h_;
};

/// One-shot Z(S_k; f).
template <class Coeff>
TruncatedSeriesT<Coeff> cycle_index_apply(const TruncatedSeriesT<Coeff>& f, int k) {
  CycleIndexEvaluator<Coeff> ev(f);
  return ev.apply(k);
}

}  // namespace treecensus

#endif  // TREECENSUS_CYCLE_INDEX_HPP
