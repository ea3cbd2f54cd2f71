// include/glasso/objective.hpp

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

#ifndef GLASSO_OBJECTIVE_HPP
#define GLASSO_OBJECTIVE_HPP

#include <optional>

#include "glasso/matrix.hpp"
#include "glasso/penalty.hpp"

namespace glasso {

// One Graphical Lasso problem instance: empirical covariance S plus a
// penalty. Smooth term f(T) = -log det T + sum_ij S_ij T_ij over SPD T;
// full objective Psi = f + penalty_value.
struct GlassoProblem {
  SymMatrix s;
  Penalty penalty;
};

// Validates the penalty and S's non-negative diagonal.
GlassoProblem make_problem(SymMatrix s, Penalty penalty);

// Frozen majorant of the penalty built at an anchor point: Psi_k(x) =
// f(x) + majorant_value(weights, x) + tangent_constant, tangent at the anchor.
struct MajorantState {
  WeightField weights;
  SymMatrix anchor;
  double tangent_constant = 0.0;
};

// nullopt means theta is not SPD (expected during line searches).
std::optional<double> f_value(const GlassoProblem& p, const SymMatrix& theta);

// Gradient of f given a factorization of theta: S - theta^-1.
SymMatrix f_grad(const GlassoProblem& p, const CholeskyFactor& chol_theta);

std::optional<double> psi_value(const GlassoProblem& p, const SymMatrix& theta);

// nullopt iff anchor is not SPD.
std::optional<MajorantState> make_majorant(const GlassoProblem& p,
                                           const SymMatrix& anchor);

std::optional<double> majorant_psi(const GlassoProblem& p, const MajorantState& m,
                                   const SymMatrix& theta);

// Frobenius norm of the minimum-norm element of grad f + the weighted-l1
// subdifferential at theta: a computable vanishing-subgradient diagnostic.
// Throws std::invalid_argument if theta is not SPD (the gradient needs
// theta^-1).
double stationarity_gap(const GlassoProblem& p, const SymMatrix& theta,
                        const MajorantState& m);

}  // namespace glasso

#endif  // GLASSO_OBJECTIVE_HPP
