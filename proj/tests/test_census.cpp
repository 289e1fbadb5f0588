// Copyright (c) 2026 The treecensus authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch.hpp>

#include "treecensus/census.hpp"
#include "treecensus/oracle.hpp"

using namespace treecensus;
using census::build_free;
using census::build_marked_degree;
using census::build_marked_edge;
using census::build_planted;
using census::distribution;

namespace {

std::vector<Integer> counts_at(const BivariateSeries& t, int n) {
  return distribution(t, n).counts;
}

void check_against_oracle(const BivariateSeries& t, int delta, const Marking& mark, int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    census::DistributionTable d = distribution(t, n);
    std::vector<Integer> expected = oracle::aggregate(n, DegreeBound(delta), mark);
    size_t width = std::max(expected.size(), d.counts.size());
    for (size_t k = 0; k < width; ++k) {
      Integer c = k < d.counts.size() ? d.counts[k] : Integer(0);
      Integer o = k < expected.size() ? expected[k] : Integer(0);
      INFO("mark " << mark.to_string() << " n " << n << " k " << k);
      CHECK(c == o);
    }
  }
}

}  // namespace

TEST_CASE("planted series hand values") {
  auto [p, p_restricted] = build_planted(DegreeBound(3), 8);
  CHECK(p[1] == 1);
  CHECK(p[2] == 1);
  CHECK(p[3] == 2);
  CHECK(p[4] == 3);
  // root degree <= delta - 1 = 2 (at most one child below the plant)
  CHECK(p_restricted[1] == 1);
  CHECK(p_restricted[2] == 1);
  for (int delta : {3, 4, 5, 6}) CHECK(build_planted(DegreeBound(delta), 3).first[1] == 1);
}

TEST_CASE("free-tree counts at hand-checkable orders") {
  census::CensusTables d3 = build_free(DegreeBound(3), 10);
  CHECK(d3.t[1] == 1);
  CHECK(d3.t[2] == 1);
  CHECK(d3.t[4] == 2);
  CHECK(d3.t[5] == 2);
  census::CensusTables d4 = build_free(DegreeBound(4), 6);
  CHECK(d4.t[5] == 3);
}

TEST_CASE("degree bound validation") {
  CHECK_THROWS_AS(DegreeBound(2), DomainError);
  CHECK_THROWS_AS(Marking::degree(0), DomainError);
  CHECK_THROWS_AS(Marking::edge(0, 1), DomainError);
}

TEST_CASE("degree marking hand examples") {
  auto m1 = build_marked_degree(DegreeBound(3), 1, 6);
  auto c1 = counts_at(m1.t, 4);
  REQUIRE(c1.size() == 4);
  CHECK(c1[2] == 1);
  CHECK(c1[3] == 1);
  auto m2 = build_marked_degree(DegreeBound(3), 2, 6);
  auto c2 = counts_at(m2.t, 4);
  CHECK(c2[0] == 1);
  CHECK(c2[2] == 1);
}

TEST_CASE("degree marking above the bound is the zero statistic") {
  auto m = build_marked_degree(DegreeBound(3), 7, 8);
  census::CensusTables u = build_free(DegreeBound(3), 8);
  for (int n = 1; n <= 8; ++n) {
    CHECK(m.t[n].degree() <= 0);
    CHECK(m.t[n].at_u1() == u.t[n]);
  }
}

TEST_CASE("edge marking hand examples") {
  auto e12 = build_marked_edge(DegreeBound(3), 1, 2, 6);
  auto c12 = counts_at(e12.t, 4);
  CHECK(c12[0] == 1);
  CHECK(c12[2] == 1);
  auto e13 = build_marked_edge(DegreeBound(3), 1, 3, 6);
  auto c13 = counts_at(e13.t, 4);
  CHECK(c13[0] == 1);
  CHECK(c13[3] == 1);
}

TEST_CASE("edge type (1,1) has the closed form") {
  auto e11 = build_marked_edge(DegreeBound(4), 1, 1, 8);
  auto c2 = counts_at(e11.t, 2);
  REQUIRE(c2.size() == 2);
  CHECK(c2[0] == 0);
  CHECK(c2[1] == 1);
  census::CensusTables u = build_free(DegreeBound(4), 8);
  for (int n = 3; n <= 8; ++n) {
    CHECK(e11.t[n].degree() <= 0);
    CHECK(e11.t[n].at_u1() == u.t[n]);
  }
}

TEST_CASE("marked tables equal oracle histograms", "[oracle]") {
  check_against_oracle(build_marked_degree(DegreeBound(4), 3, 10).t, 4, Marking::degree(3), 10);
  check_against_oracle(build_marked_edge(DegreeBound(4), 2, 2, 10).t, 4, Marking::edge(2, 2), 10);
  check_against_oracle(build_marked_edge(DegreeBound(4), 1, 4, 10).t, 4, Marking::edge(1, 4), 10);
}

TEST_CASE("u = 1 collapse reproduces the univariate census", "[collapse]") {
  for (int delta : {3, 4, 5, 6}) {
    const int order = delta <= 4 ? 40 : 30;
    census::CensusTables u = build_free(DegreeBound(delta), order);
    for (int j = 1; j <= delta; ++j) {
      auto m = build_marked_degree(DegreeBound(delta), j, order);
      INFO("delta " << delta << " degree " << j);
      CHECK(collapse_u1(m.t) == u.t);
      CHECK(collapse_u1(m.r) == u.r);
      CHECK(collapse_u1(m.p) == u.p);
    }
    for (int i = 1; i <= delta; ++i)
      for (int j = i; j <= delta; ++j) {
        auto m = build_marked_edge(DegreeBound(delta), i, j, order);
        INFO("delta " << delta << " edge (" << i << "," << j << ")");
        CHECK(collapse_u1(m.t) == u.t);
        CHECK(collapse_u1(m.r) == u.r);
        CHECK(collapse_u1(m.p) == u.p);
      }
  }
}

TEST_CASE("root-degree split: a_1 = x and sum a_k = p") {
  auto m = build_marked_edge(DegreeBound(4), 2, 3, 20);
  BivariateSeries x(20);
  x.at(1) = UPoly::constant(1);
  CHECK(m.a[1] == x);
  BivariateSeries sum(20);
  for (int k = 1; k <= 4; ++k) sum = add(sum, m.a[static_cast<size_t>(k)]);
  CHECK(sum == m.p);
}

TEST_CASE("completeness and handshake identities", "[moments]") {
  const int delta = 4;
  const int order = 12;
  std::vector<census::MarkedCensus> degree_tables;
  for (int j = 1; j <= delta; ++j)
    degree_tables.push_back(build_marked_degree(DegreeBound(delta), j, order));
  std::vector<census::EdgeMarkedCensus> edge_tables;
  for (int i = 1; i <= delta; ++i)
    for (int j = i; j <= delta; ++j)
      edge_tables.push_back(build_marked_edge(DegreeBound(delta), i, j, order));
  for (int n = 2; n <= order; ++n) {
    Rational vertex_sum(0), handshake(0), edge_sum(0);
    for (int j = 1; j <= delta; ++j) {
      census::DistributionTable d = distribution(degree_tables[static_cast<size_t>(j - 1)].t, n);
      vertex_sum += d.mean;
      handshake += Rational(j) * d.mean;
    }
    for (const auto& tab : edge_tables) edge_sum += distribution(tab.t, n).mean;
    INFO("n " << n);
    CHECK(vertex_sum == Rational(n));
    CHECK(handshake == Rational(2 * (n - 1)));
    CHECK(edge_sum == Rational(n - 1));
  }
}

TEST_CASE("distribution moments at hand-checkable orders") {
  auto m = build_marked_degree(DegreeBound(3), 1, 6);
  census::DistributionTable d = distribution(m.t, 4);
  CHECK(d.total == 2);
  CHECK(d.mean == Rational(5, 2));
  CHECK(d.variance == Rational(1, 4));
  // a single tree gives a degenerate distribution
  census::DistributionTable single = distribution(m.t, 3);
  CHECK(single.total == 1);
  CHECK(single.variance == 0);
  CHECK(census::skewness(single) == 0);
  CHECK_THROWS_AS(distribution(m.t, 0), EmptyFamilyError);
  CHECK_THROWS_AS(distribution(m.t, 7), DomainError);
}

TEST_CASE("concentration probe") {
  auto m = build_marked_degree(DegreeBound(3), 1, 6);
  CHECK(census::concentration_probe(distribution(m.t, 3)) == 0);
  // Chebyshev bound holds exactly: probe^2 n^3 <= variance^2
  auto big = build_marked_degree(DegreeBound(4), 1, 30);
  census::DistributionTable d = distribution(big.t, 30);
  Rational probe = census::concentration_probe(d);
  CHECK(probe * probe * Rational(pow_int(Integer(30), 3)) <= d.variance * d.variance);
}

TEST_CASE("concentration probe decreases along n", "[slow]") {
  auto m = build_marked_degree(DegreeBound(3), 2, 100);
  Rational p25 = census::concentration_probe(distribution(m.t, 25));
  Rational p50 = census::concentration_probe(distribution(m.t, 50));
  Rational p100 = census::concentration_probe(distribution(m.t, 100));
  CHECK(p50 <= p25);
  CHECK(p100 <= p50);
}

TEST_CASE("monotone truncation consistency", "[property]") {
  census::CensusTables small = build_free(DegreeBound(3), 50);
  census::CensusTables large = build_free(DegreeBound(3), 100);
  for (int n = 0; n <= 50; ++n) {
    CHECK(small.p[n] == large.p[n]);
    CHECK(small.r[n] == large.r[n]);
    CHECK(small.t[n] == large.t[n]);
  }
  auto m20 = build_marked_edge(DegreeBound(4), 1, 2, 20);
  auto m35 = build_marked_edge(DegreeBound(4), 1, 2, 35);
  for (int n = 0; n <= 20; ++n) CHECK(m20.t[n] == m35.t[n]);
}
