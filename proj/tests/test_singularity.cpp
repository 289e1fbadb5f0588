// Copyright (c) 2026 The treecensus authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch.hpp>

#include "treecensus/census.hpp"
#include "treecensus/singularity.hpp"

using namespace treecensus;
namespace sing = treecensus::singularity;

TEST_CASE("find_x0 reproduces the quartic constants") {
  sing::CriticalPoint c = sing::find_x0(DegreeBound(4), 50);
  PrecisionScope scope(60);
  CHECK(abs(c.x0 - Real("0.3551817")) < Real("1e-6"));
  CHECK(abs(c.p0 - Real("1.117421")) < Real("1e-5"));
  CHECK(c.residual1 < pow10(-40));
  CHECK(c.residual2 < pow10(-40));
}

TEST_CASE("find_x0 agrees with the census growth rate") {
  PrecisionScope scope(60);
  sing::CriticalPoint c = sing::find_x0(DegreeBound(3), 50);
  census::CensusTables tables = census::build_free(DegreeBound(3), 200);
  // t_n / t_{n+1} -> x0; Neville in 1/n over a few ratio samples
  std::vector<std::pair<Real, Real>> pts;
  for (int n : {160, 170, 180, 190, 200}) {
    pts.emplace_back(Real(1) / n, to_real(tables.t[n - 1]) / to_real(tables.t[n]));
  }
  Real limit = sing::extrapolate_to_zero(pts);
  CHECK(abs(limit - c.x0) < Real("1e-4"));
}

TEST_CASE("planted point evaluation") {
  PrecisionScope scope(60);
  SECTION("x -> 0: p(x) = x + O(x^2)") {
    Real x("1e-8");
    Real p = sing::eval_planted_point(DegreeBound(3), x, 50);
    CHECK(abs(p - x) < Real("1e-15"));
  }
  SECTION("at the critical point p(x0) matches the known value") {
    sing::CriticalPoint c = sing::find_x0(DegreeBound(4), 50);
    Real p = sing::eval_planted_point(DegreeBound(4), c.x0, 50);
    CHECK(abs(p - Real("1.117421")) < Real("1e-5"));
  }
  SECTION("interior point agrees with a high-order partial sum") {
    census::CensusTables tables = census::build_free(DegreeBound(3), 200);
    Real x("0.3");
    Real direct(0);
    for (int n = 200; n >= 1; --n) direct = direct * x + to_real(tables.p[n]);
    direct *= x;
    Real p = sing::eval_planted_point(DegreeBound(3), x, 50);
    CHECK(abs(p - direct) < pow10(-20));
  }
  SECTION("x beyond the critical point is rejected") {
    CHECK_THROWS_AS(sing::eval_planted_point(DegreeBound(4), Real("0.4"), 50), DomainError);
  }
}

TEST_CASE("extended solve at u = 1 matches the characteristic point") {
  PrecisionScope scope(80);
  SECTION("degree marking") {
    sing::ImplicitSystem sys(DegreeBound(4), Marking::degree(1), 50);
    sing::ExtendedSolution sol = sing::solve_extended(sys, Real(1), 50);
    CHECK(abs(sol.x - sys.x0()) < pow10(-20));
    CHECK(sol.residual < pow10(-45));
  }
  SECTION("edge marking: singular Jacobian with the all-ones null vector") {
    sing::ImplicitSystem sys(DegreeBound(3), Marking::edge(1, 2), 50);
    sing::ExtendedSolution sol = sing::solve_extended(sys, Real(1), 50);
    CHECK(abs(sol.x - sys.x0()) < pow10(-20));
    Real det = linalg::determinant(sys.I_minus_Fy(sol.x, sol.y, Real(1)));
    CHECK(abs(det) < pow10(-30));
    sing::NullVectorMu nv = sing::mu_via_null_vector(sys, 50);
    REQUIRE(nv.v.size() == 2);
    CHECK(abs(nv.v[0] - 1) < pow10(-20));
    CHECK(abs(nv.v[1] - 1) < pow10(-20));
  }
}

TEST_CASE("zero statistics short-circuit") {
  sing::ImplicitSystem sys(DegreeBound(4), Marking::degree(9), 50);
  CHECK(sys.zero_statistic());
  sing::AsymptoticConstants ac = sing::mu_sigma(sys, 50, Real("1e-6"));
  CHECK(ac.mu == 0);
  CHECK(ac.sigma == 0);
  sing::NullVectorMu nv = sing::mu_via_null_vector(sys, 50);
  CHECK(nv.mu == 0);
  sing::ImplicitSystem e11(DegreeBound(4), Marking::edge(1, 1), 50);
  CHECK(e11.zero_statistic());
}

TEST_CASE("mu matches exact moments (light version)", "[moments]") {
  PrecisionScope scope(80);
  sing::ImplicitSystem sys(DegreeBound(3), Marking::degree(1), 50);
  sing::AsymptoticConstants ac = sing::mu_sigma(sys, 50, Real("1e-6"));
  auto m = census::build_marked_degree(DegreeBound(3), 1, 60);
  std::vector<std::pair<Real, Real>> pts;
  std::vector<Real> errs;
  for (int n : {20, 40, 60}) {
    census::DistributionTable d = census::distribution(m.t, n);
    pts.emplace_back(Real(1) / n, to_real(d.mean) / n);
    errs.push_back(abs(to_real(d.mean) / n - ac.mu));
  }
  Real limit = sing::extrapolate_to_zero(pts);
  CHECK(abs(limit - ac.mu) < Real("1e-3"));
  CHECK(ac.sigma > 0);
  // the leaf statistic has a dominant 1/n correction, so here the raw error
  // is also monotone (not true for every marking: the degree-2 correction at
  // delta = 4 changes sign inside the window)
  CHECK(errs[1] < errs[0]);
  CHECK(errs[2] < errs[1]);
}

TEST_CASE("dual mu computations agree", "[dualmu]") {
  PrecisionScope scope(80);
  for (Marking mark : {Marking::degree(1), Marking::degree(2), Marking::edge(1, 2), Marking::edge(2, 2)}) {
    sing::ImplicitSystem sys(DegreeBound(3), mark, 50);
    sing::AsymptoticConstants ac = sing::mu_sigma(sys, 50, Real("1e-6"));
    sing::NullVectorMu nv = sing::mu_via_null_vector(sys, 50);
    INFO(mark.to_string());
    CHECK(abs(ac.mu - nv.mu) < pow10(-6));
  }
}

TEST_CASE("tau trace behaves", "[tau]") {
  sing::TauEstimate est = sing::estimate_tau(DegreeBound(3), 160, 50);
  PrecisionScope scope(60);
  for (const auto& [n, s] : est.trace) {
    CHECK(s > 0);
  }
  // eventually monotone: the tail of the observed range decreases or increases consistently
  bool monotone = true;
  for (size_t i = 100; i + 1 < est.trace.size(); ++i) {
    if (!(est.trace[i + 1].second < est.trace[i].second ||
          est.trace[i + 1].second == est.trace[i].second))
      monotone = false;
  }
  if (!monotone) {
    monotone = true;
    for (size_t i = 100; i + 1 < est.trace.size(); ++i)
      if (!(est.trace[i + 1].second > est.trace[i].second)) monotone = false;
  }
  CHECK(monotone);
  CHECK(!est.diverging);
  CHECK_THROWS_AS(sing::estimate_tau(DegreeBound(3), 50, 50), DomainError);
}

TEST_CASE("tau estimate is stable across census orders", "[tau]") {
  sing::TauEstimate e300 = sing::estimate_tau(DegreeBound(3), 300, 50);
  sing::TauEstimate e400 = sing::estimate_tau(DegreeBound(3), 400, 50);
  PrecisionScope scope(60);
  CHECK(abs(e400.tau_hat - e300.tau_hat) / e400.tau_hat < Real("1e-3"));
}

TEST_CASE("determinism: identical digit strings across runs") {
  sing::CriticalPoint a = sing::find_x0(DegreeBound(4), 50);
  sing::CriticalPoint b = sing::find_x0(DegreeBound(4), 50);
  CHECK(format_real(a.x0, 50) == format_real(b.x0, 50));
  CHECK(format_real(a.p0, 50) == format_real(b.p0, 50));
  sing::ImplicitSystem s1(DegreeBound(3), Marking::edge(1, 2), 40);
  sing::ImplicitSystem s2(DegreeBound(3), Marking::edge(1, 2), 40);
  Real m1 = sing::mu_sigma(s1, 40, Real("1e-6")).mu;
  Real m2 = sing::mu_sigma(s2, 40, Real("1e-6")).mu;
  CHECK(format_real(m1, 40) == format_real(m2, 40));
}
