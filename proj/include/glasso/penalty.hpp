// include/glasso/penalty.hpp

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

#ifndef GLASSO_PENALTY_HPP
#define GLASSO_PENALTY_HPP

#include <string>

#include "glasso/matrix.hpp"

namespace glasso {

enum class PenaltyKind { L1, LogSum, LHalf, Mcp };

std::string penalty_kind_name(PenaltyKind kind);
// Accepts l1 | log-sum | l-half | mcp; throws std::invalid_argument otherwise.
PenaltyKind parse_penalty_kind(const std::string& name);

// Default smoothing widths when none is configured. L1 has no epsilon.
double default_epsilon(PenaltyKind kind);

// Separable penalty applied to |theta_ij| on every matrix entry (diagonal
// included unless penalize_diagonal is off).
//
//   L1       phi(u) = gamma * u
//   LogSum   phi(u) = gamma * ln(u + epsilon),        epsilon > 0
//   LHalf    phi(u) = gamma * sqrt(u + epsilon),      epsilon > 0
//   Mcp      phi(u) = gamma*u - u^2/(2 epsilon)  for u <  gamma*epsilon
//            phi(u) = gamma^2 * epsilon / 2      for u >= gamma*epsilon,
//            epsilon > 1
struct Penalty {
  PenaltyKind kind = PenaltyKind::L1;
  double gamma = 1.0;
  double epsilon = 0.0;
  bool penalize_diagonal = true;
};

Penalty make_penalty(PenaltyKind kind, double gamma, double epsilon,
                     bool penalize_diagonal = true);
Penalty make_penalty(PenaltyKind kind, double gamma, bool penalize_diagonal = true);
// Throws std::invalid_argument on parameter violations.
void validate(const Penalty& p);

// phi at u >= 0; throws std::domain_error for u < 0.
double phi(const Penalty& p, double u);

// Tangent-majorant slope phi'(theta_abs) >= 0 (the reweighting weight).
double weight(const Penalty& p, double theta_abs);

// Per-entry non-negative symmetric weights; diagonal forced to 0 when the
// penalty skips the diagonal.
class WeightField {
 public:
  explicit WeightField(SymMatrix w);
  int dim() const { return w_.dim(); }
  double operator()(int i, int j) const { return w_(i, j); }
  const SymMatrix& matrix() const { return w_; }

 private:
  SymMatrix w_;
};

WeightField reweight(const Penalty& p, const SymMatrix& theta);

// sum over all (i,j) of phi(|theta_ij|), diagonal per flag.
double penalty_value(const Penalty& p, const SymMatrix& theta);

// sum over all (i,j) of w_ij * |theta_ij| (the non-constant majorant part).
double majorant_value(const WeightField& w, const SymMatrix& theta);

// Entrywise sign(x) * max(0, |x| - step * w); the prox of step * majorant.
SymMatrix soft_threshold(const WeightField& w, const SymMatrix& x, double step);

}  // namespace glasso

#endif  // GLASSO_PENALTY_HPP
