// include/glasso/solvers.hpp

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

#ifndef GLASSO_SOLVERS_HPP
#define GLASSO_SOLVERS_HPP

#include <vector>

#include "glasso/objective.hpp"

namespace glasso {

struct LineSearchParams {
  double armijo_gamma = 0.25;    // in (0, 1/2)
  double backtrack_factor = 0.5; // in (0, 1)
  int max_backtracks = 40;
  double initial_step = 1.0;     // Newton initial alpha; prox-grad step scale
  double prox_delta = 1e-3;      // the delta in alpha_i >= 1/2 + delta
};

void validate(const LineSearchParams& ls);

enum class InnerStatus { Ok, NotPdInput, LineSearchFailed, SubproblemStall };

// Per-inner-run record. One entry per iteration: prox-grad = one proximal
// step, Newton = one (active set, direction, line search) cycle,
// Gauss-Seidel = one full sweep of d column blocks.
struct InnerReport {
  SymMatrix theta_out;
  int iterations_done = 0;
  double psi_initial = 0.0;            // majorant objective at theta0
  std::vector<double> psi_trace;       // majorant objective after each iteration
  std::vector<double> step_trace;      // accepted step size t or alpha
  std::vector<double> sq_step_norms;   // sum of squared block moves per iteration
  std::vector<int> active_set_sizes;   // Newton only
  InnerStatus status = InnerStatus::Ok;
};

// Proximal gradient on the frozen majorant (full-block forward-backward).
// Each iteration: W = theta^-1, g = S - W, candidate = weighted soft
// threshold of theta - t*g, with t backtracked until the candidate is SPD,
// the alpha = 1/2 + prox_delta descent condition holds, and the smooth term
// is majorized at step 1/t.
InnerReport prox_grad_inner(const GlassoProblem& p, const MajorantState& m,
                            const SymMatrix& theta0, int iters,
                            const LineSearchParams& ls);

// Block proximal Newton with gradient-based active-set selection. The
// direction is computed by cd_passes coordinate-descent sweeps over the
// active set on <g,D> + 0.5 Tr(W D W D) + majorant(theta + D), symmetric
// pairs jointly, then an Armijo backtracking on alpha accepts theta + alpha*D.
InnerReport prox_newton_inner(const GlassoProblem& p, const MajorantState& m,
                              const SymMatrix& theta0, int iters,
                              const LineSearchParams& ls, int cd_passes);

// Column-block exact minimization of the majorant: for each column c,
// minimize over (theta_12, theta_22) with theta_11 fixed via the induced
// weighted lasso (cd_passes coordinate-descent sweeps, warm started). The
// inverse W is maintained by block identities and refreshed by a full
// refactorization after every d column updates. One iteration = one sweep of
// d columns; updates keep the iterate SPD by construction.
InnerReport gauss_seidel_inner(const GlassoProblem& p, const MajorantState& m,
                               const SymMatrix& theta0, int sweeps, int cd_passes);

// Cyclic coordinate descent on 0.5 x^T A x + b^T x + sum lam_i |x_i| with
// exact per-coordinate soft-threshold updates. A must be SPD. The objective
// is non-increasing after every coordinate step.
std::vector<double> weighted_lasso_cd(const SymMatrix& a, const std::vector<double>& b,
                                      const std::vector<double>& lam,
                                      std::vector<double> x0, int passes);

}  // namespace glasso

#endif  // GLASSO_SOLVERS_HPP
