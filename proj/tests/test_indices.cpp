// Copyright (c) 2026 The treecensus authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch.hpp>

#include "treecensus/indices.hpp"
#include "treecensus/oracle.hpp"

using namespace treecensus;
namespace idx = treecensus::indices;

TEST_CASE("index constants are forced at trivial exponents", "[mu]") {
  PrecisionScope scope(80);
  idx::MuTable mu = idx::compute_mu_table(DegreeBound(3), 50, /*with_edges=*/true);
  idx::IndexReport d0 = idx::zagreb_constant(mu, Real(0));
  idx::IndexReport d1 = idx::zagreb_constant(mu, Real(1));
  idx::IndexReport r0 = idx::randic_constant(mu, Real(0));
  CHECK(abs(d0.constant - 1) < pow10(-8));
  CHECK(abs(d1.constant - 2) < pow10(-8));
  CHECK(abs(r0.constant - 1) < pow10(-8));
  // the breakdown must sum to the constant
  Real sum(0);
  for (const auto& [label, v] : d0.breakdown) sum += v;
  CHECK(sum == d0.constant);
  REQUIRE(d0.breakdown.size() == 3);
  REQUIRE(r0.breakdown.size() == 6);  // all pairs (i, j), 1 <= i <= j <= 3
}

TEST_CASE("exact expected index: trivial exponents are exact") {
  PrecisionScope scope(60);
  idx::CensusCache cache(
      DegreeBound(3));
  for (int n : {2, 5, 9}) {
    idx::ExpectedIndex d0 = idx::exact_expected_index(cache, n, idx::IndexKind::zagreb, Real(0), 9);
    REQUIRE(d0.exact.has_value());
    CHECK(*d0.exact == Rational(n));
    idx::ExpectedIndex r0 = idx::exact_expected_index(cache, n, idx::IndexKind::randic, Real(0), 9);
    REQUIRE(r0.exact.has_value());
    CHECK(*r0.exact == Rational(n - 1));
  }
}

TEST_CASE("exact expected index agrees with the oracle family average") {
  PrecisionScope scope(60);
  idx::CensusCache cache(DegreeBound(3));
  const int n = 10;
  SECTION("integer exponent: exact rational equality") {
    idx::ExpectedIndex d2 = idx::exact_expected_index(cache, n, idx::IndexKind::zagreb, Real(2), n);
    REQUIRE(d2.exact.has_value());
    Integer sum(0), trees(0);
    oracle::enumerate_trees(n, DegreeBound(3), [&](const oracle::CanonicalTree& t) {
      oracle::TreeStats s = oracle::stats(t);
      long d2v = 0;
      for (size_t d = 1; d < s.degree_hist.size(); ++d)
        d2v += static_cast<long>(d) * static_cast<long>(d) * s.degree_hist[d];
      sum += d2v;
      trees += 1;
    });
    Rational avg(sum, trees);
    avg.canonicalize();
    CHECK(*d2.exact == avg);
    idx::ExpectedIndex r1 = idx::exact_expected_index(cache, n, idx::IndexKind::randic, Real(1), n);
    REQUIRE(r1.exact.has_value());
    Integer rsum(0);
    oracle::enumerate_trees(n, DegreeBound(3), [&](const oracle::CanonicalTree& t) {
      oracle::TreeStats s = oracle::stats(t);
      for (const auto& [type, cnt] : s.edge_hist)
        rsum += Integer(type.first) * Integer(type.second) * Integer(cnt);
    });
    Rational ravg(rsum, trees);
    ravg.canonicalize();
    CHECK(*r1.exact == ravg);
  }
  SECTION("real exponent: high-precision agreement") {
    idx::ExpectedIndex dm = idx::exact_expected_index(cache, n, idx::IndexKind::zagreb, Real("-0.5"), n);
    Real sum(0);
    Integer trees(0);
    oracle::enumerate_trees(n, DegreeBound(3), [&](const oracle::CanonicalTree& t) {
      oracle::TreeStats s = oracle::stats(t, {Real("-0.5")}, {});
      sum += s.d_alpha[0];
      trees += 1;
    });
    CHECK(abs(dm.value - sum / to_real(trees)) < pow10(-25));
  }
}

TEST_CASE("one-vertex tree with non-positive alpha is a domain error") {
  idx::CensusCache cache(DegreeBound(3));
  CHECK_THROWS_AS(idx::exact_expected_index(cache, 1, idx::IndexKind::zagreb, Real(0), 1),
                  DomainError);
  CHECK_THROWS_AS(idx::exact_expected_index(cache, 1, idx::IndexKind::zagreb, Real(-1), 1),
                  DomainError);
}
