// tests/test_penalty.cpp

// Copyright 2026 The rwglasso Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include "doctest.h"
#include "glasso/penalty.hpp"
#include "glasso/rng.hpp"
#include "testutil.hpp"

using namespace glasso;
namespace tu = glasso::testutil;

namespace {

const Penalty kAllKinds[] = {
    make_penalty(PenaltyKind::L1, 0.7),
    make_penalty(PenaltyKind::LogSum, 1.3, 0.25),
    make_penalty(PenaltyKind::LHalf, 0.9, 0.4),
    make_penalty(PenaltyKind::Mcp, 1.1, 2.5),
};

}  // namespace

TEST_CASE("phi: closed forms") {
  CHECK(phi(make_penalty(PenaltyKind::L1, 2.0), 3.0) == doctest::Approx(6.0));
  CHECK(phi(make_penalty(PenaltyKind::LogSum, 1.0, 1.0), 0.0) == doctest::Approx(0.0));
  // MCP saturates at gamma^2 * epsilon / 2 for u >= gamma * epsilon.
  CHECK(phi(make_penalty(PenaltyKind::Mcp, 1.0, 2.0), 5.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(phi(kAllKinds[0], -1.0), std::domain_error);
}

TEST_CASE("phi: MCP closed form matches numerical Moreau-envelope evaluation") {
  // phi(u) = gamma*u - min_v { gamma|v| + (v-u)^2 / (2 eps) }, minimized on a grid.
  const double gamma = 1.1, eps = 2.5;
  const Penalty p = make_penalty(PenaltyKind::Mcp, gamma, eps);
  for (double u : {0.0, 0.3, 1.0, 2.0, 2.75, 3.0, 5.0, 10.0}) {
    const double env = [&] {
      double best = 1e300;
      for (int k = 0; k <= 400000; ++k) {
        const double v = -10.0 + 20.0 * k / 400000.0;
        best = std::min(best, gamma * std::abs(v) + (v - u) * (v - u) / (2.0 * eps));
      }
      return best;
    }();
    CHECK(phi(p, u) == doctest::Approx(gamma * u - env).epsilon(1e-6));
  }
}

TEST_CASE("weight: closed forms") {
  CHECK(weight(make_penalty(PenaltyKind::LogSum, 1.0, 0.1), 0.0) == doctest::Approx(10.0));
  CHECK(weight(make_penalty(PenaltyKind::Mcp, 1.0, 2.0), 3.0) == doctest::Approx(0.0));
  CHECK(weight(make_penalty(PenaltyKind::LHalf, 2.0, 0.25), 0.0) == doctest::Approx(2.0));
  CHECK(weight(make_penalty(PenaltyKind::L1, 0.4), 123.0) == doctest::Approx(0.4));
  CHECK_THROWS_AS(weight(kAllKinds[1], -0.5), std::domain_error);
}

TEST_CASE("majorization and tangency of the weight line, all kinds") {
  SplitMix64 rng(21);
  for (const Penalty& p : kAllKinds) {
    for (int trial = 0; trial < 500; ++trial) {
      const double u0 = rng.next_uniform(0.0, 10.0);
      const double u = rng.next_uniform(0.0, 10.0);
      const double tangent = phi(p, u0) + weight(p, u0) * (u - u0);
      CHECK(phi(p, u) <= tangent + 1e-12);
    }
    const double u0 = rng.next_uniform(0.0, 10.0);
    CHECK(phi(p, u0) == phi(p, u0) + weight(p, u0) * (u0 - u0));  // exact
  }
}

TEST_CASE("weight monotonicity in theta_abs") {
  SplitMix64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = rng.next_uniform(0.0, 5.0);
    const double b = a + rng.next_uniform(1e-6, 5.0);
    CHECK(weight(kAllKinds[1], b) < weight(kAllKinds[1], a));  // log-sum strict
    CHECK(weight(kAllKinds[2], b) < weight(kAllKinds[2], a));  // l-half strict
    CHECK(weight(kAllKinds[3], b) <= weight(kAllKinds[3], a));  // MCP non-increasing
  }
  const Penalty& mcp = kAllKinds[3];
  CHECK(weight(mcp, mcp.gamma * mcp.epsilon) == 0.0);
  CHECK(weight(mcp, mcp.gamma * mcp.epsilon + 4.0) == 0.0);
}

TEST_CASE("reweight: closed-form fields") {
  const auto theta = SymMatrix::identity(3);
  SUBCASE("L1 gives a constant field") {
    const WeightField w = reweight(make_penalty(PenaltyKind::L1, 0.8), theta);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(w(i, j) == doctest::Approx(0.8));
  }
  SUBCASE("log-sum at the zero matrix") {
    const WeightField w =
        reweight(make_penalty(PenaltyKind::LogSum, 1.0, 0.1), SymMatrix(2));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) CHECK(w(i, j) == doctest::Approx(10.0));
  }
  SUBCASE("MCP on 3*identity zeroes the diagonal weights") {
    const WeightField w =
        reweight(make_penalty(PenaltyKind::Mcp, 1.0, 2.0), scaled(theta, 3.0));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(w(i, j) == doctest::Approx(i == j ? 0.0 : 1.0));
  }
  SUBCASE("diagonal masked when penalize_diagonal is off") {
    const WeightField w =
        reweight(make_penalty(PenaltyKind::L1, 0.8, false), theta);
    CHECK(w(0, 0) == 0.0);
    CHECK(w(0, 1) == doctest::Approx(0.8));
  }
}

TEST_CASE("reweight output is symmetric and non-negative, zeros included") {
  SplitMix64 rng(23);
  for (const Penalty& p : kAllKinds) {
    SymMatrix theta(5);
    for (int i = 0; i < 5; ++i)
      for (int j = i; j < 5; ++j)
        theta.set(i, j, (rng.next_double() < 0.3) ? 0.0 : rng.next_uniform(-3.0, 3.0));
    const WeightField w = reweight(p, theta);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        CHECK(w(i, j) == w(j, i));
        CHECK(w(i, j) >= 0.0);
      }
  }
}

TEST_CASE("penalty_value: double-sum convention with diagonal flag") {
  CHECK(penalty_value(make_penalty(PenaltyKind::L1, 1.0), SymMatrix::identity(3)) ==
        doctest::Approx(3.0));
  CHECK(penalty_value(make_penalty(PenaltyKind::L1, 1.0, false),
                      SymMatrix::identity(3)) == doctest::Approx(0.0));
  CHECK(penalty_value(make_penalty(PenaltyKind::LogSum, 1.0, 1.0), SymMatrix(2)) ==
        doctest::Approx(0.0));
}

TEST_CASE("majorant_value: basics and the L1 coincidence") {
  SplitMix64 rng(24);
  const SymMatrix theta = tu::random_spd(rng, 4, 0.1);
  CHECK(majorant_value(WeightField(SymMatrix(4)), theta) == 0.0);
  const Penalty l1 = make_penalty(PenaltyKind::L1, 0.6);
  CHECK(majorant_value(reweight(l1, theta), theta) ==
        doctest::Approx(penalty_value(l1, theta)));
}

TEST_CASE("majorant tangency constant reproduces the penalty at the anchor") {
  SplitMix64 rng(25);
  const Penalty p = make_penalty(PenaltyKind::LogSum, 1.0, 0.1);
  const SymMatrix theta0 = tu::random_spd(rng, 5, 0.2);
  const WeightField w = reweight(p, theta0);
  double c = 0.0;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      const double u = std::abs(theta0(i, j));
      c += phi(p, u) - weight(p, u) * u;
    }
  CHECK(majorant_value(w, theta0) + c ==
        doctest::Approx(penalty_value(p, theta0)).epsilon(1e-12));
}

TEST_CASE("soft_threshold: textbook cases") {
  SymMatrix ones(2);
  for (int i = 0; i < 2; ++i)
    for (int j = i; j < 2; ++j) ones.set(i, j, 1.0);
  const WeightField w(ones);
  SymMatrix x(2);
  x.set(0, 0, 3.0);
  x.set(0, 1, -0.5);
  x.set(1, 1, 2.5);
  const SymMatrix y = soft_threshold(w, x, 1.0);
  CHECK(y(0, 0) == doctest::Approx(2.0));
  CHECK(y(0, 1) == 0.0);
  CHECK(y(1, 1) == doctest::Approx(1.5));
  CHECK(fro_dist(soft_threshold(WeightField(SymMatrix(2)), x, 1.0), x) == 0.0);
  CHECK_THROWS_AS(soft_threshold(w, x, 0.0), std::invalid_argument);
}

TEST_CASE("soft_threshold equals the brute-force 1-D prox oracle") {
  SplitMix64 rng(26);
  for (int trial = 0; trial < 30; ++trial) {
    const double xv = rng.next_uniform(-4.0, 4.0);
    const double lam = rng.next_uniform(0.0, 2.0);
    const double step = rng.next_uniform(0.1, 2.0);
    SymMatrix wm(1), xm(1);
    wm.set(0, 0, lam);
    xm.set(0, 0, xv);
    const double got = soft_threshold(WeightField(wm), xm, step)(0, 0);
    const double want = tu::grid_min_1d(
        [&](double u) { return 0.5 * (u - xv) * (u - xv) + step * lam * std::abs(u); },
        -5.0, 5.0, 100000);
    CHECK(std::abs(got - want) <= 1.1e-4);  // grid resolution
  }
  // The spec's worked instance: weights 1, step 1, entry 2.5 -> 1.5.
  SymMatrix w1(1), x1(1);
  w1.set(0, 0, 1.0);
  x1.set(0, 0, 2.5);
  const double v = soft_threshold(WeightField(w1), x1, 1.0)(0, 0);
  const double oracle = tu::grid_min_1d(
      [](double u) { return 0.5 * (u - 2.5) * (u - 2.5) + std::abs(u); }, -5.0, 5.0,
      100000);
  CHECK(v == doctest::Approx(1.5));
  CHECK(std::abs(v - oracle) <= 1e-4);
}

TEST_CASE("penalty parameter validation") {
  CHECK_THROWS_AS(make_penalty(PenaltyKind::L1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(make_penalty(PenaltyKind::LogSum, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(make_penalty(PenaltyKind::Mcp, 1.0, 1.0), std::invalid_argument);
  CHECK_NOTHROW(make_penalty(PenaltyKind::Mcp, 1.0, 1.5));
  CHECK_THROWS_AS(WeightField(SymMatrix::from_rows(1, {-0.1})), std::invalid_argument);
}

TEST_CASE("penalty kind names round trip") {
  for (PenaltyKind k : {PenaltyKind::L1, PenaltyKind::LogSum, PenaltyKind::LHalf,
                        PenaltyKind::Mcp})
    CHECK(parse_penalty_kind(penalty_kind_name(k)) == k);
  CHECK_THROWS_AS(parse_penalty_kind("scad"), std::invalid_argument);
}
