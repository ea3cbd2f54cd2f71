// tests/test_matrix.cpp

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
#include <sstream>

#include "doctest.h"
#include "glasso/matrix.hpp"
#include "testutil.hpp"

using namespace glasso;
namespace tu = glasso::testutil;

TEST_CASE("cholesky: identity factors to identity") {
  const auto f = cholesky(SymMatrix::identity(2));
  REQUIRE(f.has_value());
  CHECK(f->at(0, 0) == doctest::Approx(1.0));
  CHECK(f->at(1, 1) == doctest::Approx(1.0));
  CHECK(f->at(1, 0) == doctest::Approx(0.0));
}

TEST_CASE("cholesky: 2x2 hand-verified factor") {
  // [[4,2],[2,3]] = L L^T with L = [[2,0],[1,sqrt(2)]].
  const auto m = SymMatrix::from_rows(2, {4, 2, 2, 3});
  const auto f = cholesky(m);
  REQUIRE(f.has_value());
  CHECK(f->at(0, 0) == doctest::Approx(2.0));
  CHECK(f->at(1, 0) == doctest::Approx(1.0));
  CHECK(f->at(1, 1) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("cholesky: indefinite matrix reports NotPD as a value") {
  const auto m = SymMatrix::from_rows(2, {1, 2, 2, 1});  // eigenvalues 3, -1
  CHECK_FALSE(cholesky(m).has_value());
}

TEST_CASE("cholesky: reconstruction on 1000 random SPD instances") {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 1000; ++trial) {
    const int d = 2 + static_cast<int>(rng.next_u64() % 19);  // 2..20
    const SymMatrix m = tu::random_spd(rng, d, 0.1);
    const auto f = cholesky(m);
    REQUIRE(f.has_value());
    CHECK(f->min_pivot() > 0.0);
    SymMatrix rec(d);
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j) {
        double s = 0.0;
        for (int k = 0; k <= std::min(i, j); ++k) s += f->at(i, k) * f->at(j, k);
        rec.set(i, j, s);
      }
    CHECK(fro_dist(rec, m) / fro_norm(m) < 1e-10);
  }
}

TEST_CASE("log_det: analytic cases") {
  CHECK(log_det(*cholesky(SymMatrix::identity(3))) == doctest::Approx(0.0));
  CHECK(log_det(*cholesky(scaled(SymMatrix::identity(2), 2.0))) ==
        doctest::Approx(2.0 * std::log(2.0)));
  CHECK(log_det(*cholesky(SymMatrix::from_rows(2, {4, 2, 2, 3}))) ==
        doctest::Approx(std::log(8.0)));  // det = 4*3 - 2*2
}

TEST_CASE("log_det agrees with the characteristic-polynomial eigenvalue oracle") {
  SplitMix64 rng(7);
  int usable = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 2 + static_cast<int>(rng.next_u64() % 4);  // 2..5
    const SymMatrix m = tu::random_spd(rng, d, 0.2);
    const auto eigs = tu::charpoly_eigenvalues(m);
    if (!eigs) continue;  // scan failed to isolate d simple roots
    ++usable;
    double sum_log = 0.0;
    for (double ev : *eigs) sum_log += std::log(ev);
    const double ld = log_det(*cholesky(m));
    CHECK(std::abs(ld - sum_log) <= 1e-8 * std::max(1.0, std::abs(sum_log)));
  }
  CHECK(usable >= 45);
}

TEST_CASE("spd_inverse: analytic cases and residual on random family") {
  CHECK(tu::max_abs_diff(spd_inverse(*cholesky(SymMatrix::identity(4))),
                         SymMatrix::identity(4)) < 1e-14);
  CHECK(tu::max_abs_diff(spd_inverse(*cholesky(scaled(SymMatrix::identity(2), 2.0))),
                         scaled(SymMatrix::identity(2), 0.5)) < 1e-14);
  const auto inv = spd_inverse(*cholesky(SymMatrix::from_rows(2, {4, 2, 2, 3})));
  CHECK(inv(0, 0) == doctest::Approx(3.0 / 8.0));
  CHECK(inv(0, 1) == doctest::Approx(-2.0 / 8.0));
  CHECK(inv(1, 1) == doctest::Approx(4.0 / 8.0));

  SplitMix64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 2 + static_cast<int>(rng.next_u64() % 19);
    const SymMatrix m = tu::random_spd(rng, d, 0.1);
    const SymMatrix w = spd_inverse(*cholesky(m));
    // max-abs entry of W * M - I
    double worst = 0.0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        double s = 0.0;
        for (int k = 0; k < d; ++k) s += w(i, k) * m(k, j);
        worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
      }
    CHECK(worst < 1e-8);
  }
}

TEST_CASE("fro_norm and fro_dist") {
  CHECK(fro_norm(SymMatrix::identity(3)) == doctest::Approx(std::sqrt(3.0)));
  const auto m = SymMatrix::from_rows(2, {1, 2, 2, 1});
  CHECK(fro_norm(m) == doctest::Approx(std::sqrt(10.0)));
  CHECK(fro_dist(m, m) == 0.0);
  CHECK_THROWS_AS(fro_dist(m, SymMatrix::identity(3)), std::invalid_argument);
}

TEST_CASE("finite_diff_grad: trace, linear, and log det probes") {
  const auto trace_fn = [](const SymMatrix& x) {
    double t = 0.0;
    for (int i = 0; i < x.dim(); ++i) t += x(i, i);
    return t;
  };
  const SymMatrix g1 = finite_diff_grad(trace_fn, SymMatrix::identity(2), 1e-5);
  CHECK(tu::max_abs_diff(g1, SymMatrix::identity(2)) < 1e-9);

  const auto s = SymMatrix::from_rows(2, {1, 2, 2, 1});
  const SymMatrix g2 = finite_diff_grad([&s](const SymMatrix& x) { return dot(s, x); },
                                        SymMatrix::identity(2), 1e-5);
  // Perturbing both symmetric entries doubles the off-diagonal sensitivity.
  CHECK(g2(0, 0) == doctest::Approx(1.0));
  CHECK(g2(0, 1) == doctest::Approx(4.0));
  CHECK(g2(1, 1) == doctest::Approx(1.0));

  const auto neg_log_det = [](const SymMatrix& x) {
    const auto f = cholesky(x);
    return f ? -log_det(*f) : std::nan("");
  };
  const SymMatrix g3 = finite_diff_grad(neg_log_det, SymMatrix::identity(2), 1e-5);
  CHECK(g3(0, 0) == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(g3(1, 1) == doctest::Approx(-1.0).epsilon(1e-6));
}

TEST_CASE("finite_diff_grad: non-finite probe raises NonFiniteValueError") {
  const auto bad = [](const SymMatrix&) { return std::nan(""); };
  CHECK_THROWS_AS(finite_diff_grad(bad, SymMatrix::identity(2), 1e-5),
                  NonFiniteValueError);
}

TEST_CASE("finite_diff_grad of -log det + tr(S .) matches S - inv(theta)") {
  SplitMix64 rng(1234);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 2 + static_cast<int>(rng.next_u64() % 5);  // 2..6
    const SymMatrix theta = tu::random_well_conditioned_spd(rng, d);
    const SymMatrix s = tu::random_covariance(rng, d);
    const auto fn = [&](const SymMatrix& x) {
      const auto f = cholesky(x);
      return f ? -log_det(*f) + dot(s, x) : std::nan("");
    };
    const SymMatrix fd = finite_diff_grad(fn, theta, 1e-5);
    const SymMatrix analytic = sub(s, spd_inverse(*cholesky(theta)));
    CHECK(tu::max_abs_diff(fd, tu::pair_convention(analytic)) < 1e-5);
  }
}

TEST_CASE("matrix text format round trip and strict symmetry on read") {
  SplitMix64 rng(5);
  const SymMatrix m = tu::random_spd(rng, 7, 0.2);
  std::stringstream ss;
  write_matrix(ss, m);
  const SymMatrix back = read_matrix(ss);
  CHECK(back.dim() == m.dim());
  CHECK(fro_dist(back, m) == 0.0);  // 17 significant digits survive the trip

  std::stringstream bad("2\n1 2\n3 4\n");
  CHECK_THROWS_AS(read_matrix(bad), std::runtime_error);
  std::stringstream truncated("3\n1 0 0\n0 1 0\n");
  CHECK_THROWS_AS(read_matrix(truncated), std::runtime_error);
}

TEST_CASE("SymMatrix construction validates symmetry and dimension") {
  CHECK_THROWS_AS(SymMatrix::from_rows(2, {1, 2, 3, 4}), std::invalid_argument);
  CHECK_THROWS_AS(SymMatrix(0), std::invalid_argument);
  CHECK_THROWS_AS(SymMatrix::from_rows(2, {1, 2, 3}), std::invalid_argument);
}
