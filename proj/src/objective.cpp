// src/objective.cpp

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

#include "glasso/objective.hpp"

#include <cmath>

namespace glasso {

GlassoProblem make_problem(SymMatrix s, Penalty penalty) {
  validate(penalty);
  for (int i = 0; i < s.dim(); ++i)
    if (!(s(i, i) >= 0.0))
      throw std::invalid_argument("GlassoProblem: S diagonal entries must be >= 0");
  return GlassoProblem{std::move(s), penalty};
}

std::optional<double> f_value(const GlassoProblem& p, const SymMatrix& theta) {
  const auto f = cholesky(theta);
  if (!f) return std::nullopt;
  return -log_det(*f) + dot(p.s, theta);
}

SymMatrix f_grad(const GlassoProblem& p, const CholeskyFactor& chol_theta) {
  return sub(p.s, spd_inverse(chol_theta));
}

std::optional<double> psi_value(const GlassoProblem& p, const SymMatrix& theta) {
  const auto f = f_value(p, theta);
  if (!f) return std::nullopt;
  return *f + penalty_value(p.penalty, theta);
}

std::optional<MajorantState> make_majorant(const GlassoProblem& p,
                                           const SymMatrix& anchor) {
  if (!cholesky(anchor)) return std::nullopt;
  WeightField w = reweight(p.penalty, anchor);
  // C = sum phi(|a|) - w * |a| over the penalized entries, so that
  // majorant_value(w, anchor) + C == penalty_value(anchor) exactly.
  double c = 0.0;
  for (int i = 0; i < anchor.dim(); ++i) {
    for (int j = 0; j < anchor.dim(); ++j) {
      if (i == j && !p.penalty.penalize_diagonal) continue;
      const double u = std::abs(anchor(i, j));
      c += phi(p.penalty, u) - w(i, j) * u;
    }
  }
  return MajorantState{std::move(w), anchor, c};
}

std::optional<double> majorant_psi(const GlassoProblem& p, const MajorantState& m,
                                   const SymMatrix& theta) {
  const auto f = f_value(p, theta);
  if (!f) return std::nullopt;
  return *f + majorant_value(m.weights, theta) + m.tangent_constant;
}

double stationarity_gap(const GlassoProblem& p, const SymMatrix& theta,
                        const MajorantState& m) {
  const auto f = cholesky(theta);
  if (!f) throw std::invalid_argument("stationarity_gap: theta is not SPD");
  const SymMatrix g = f_grad(p, *f);
  double s = 0.0;
  for (int i = 0; i < theta.dim(); ++i) {
    for (int j = 0; j < theta.dim(); ++j) {
      const double lam = m.weights(i, j);
      const double t = theta(i, j);
      double r;
      if (t != 0.0) {
        r = g(i, j) + lam * (t > 0.0 ? 1.0 : -1.0);
      } else {
        r = std::max(0.0, std::abs(g(i, j)) - lam);
      }
      s += r * r;
    }
  }
  return std::sqrt(s);
}

}  // namespace glasso
