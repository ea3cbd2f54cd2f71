// include/glasso/driver.hpp

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

#ifndef GLASSO_DRIVER_HPP
#define GLASSO_DRIVER_HPP

#include <string>
#include <vector>

#include "glasso/solvers.hpp"

namespace glasso {

enum class SolverKind { ProxGrad, ProxNewton, GaussSeidel };

std::string solver_kind_name(SolverKind kind);
// Accepts prox-grad | prox-newton | gauss-seidel.
SolverKind parse_solver_kind(const std::string& name);

struct SolverConfig {
  SolverKind kind = SolverKind::ProxGrad;
  int reweightings = 20;  // K
  int inner_iters = 100;  // uniform I_k = I
  LineSearchParams ls;
  int cd_passes = 1;
  double stop_gap = 0.0;  // early stop on stationarity gap; 0 disables
};

void validate(const SolverConfig& cfg);

enum class SolveStatus { Ok, NotPdInput, LineSearchFailed, SubproblemStall };

struct RunTrace {
  std::vector<double> psi_outer;   // Psi(x^k), length reweightings_done + 1
  std::vector<InnerReport> inner_reports;
  std::vector<double> gaps;        // stationarity gap after each reweighting
  std::vector<double> wall_ms;     // per reweighting
  // Extreme Cholesky pivots of each accepted iterate: a cheap monitor for
  // the iterates staying bounded away from singularity and from blow-up.
  std::vector<double> min_pivots;
  std::vector<double> max_pivots;
  SolveStatus status = SolveStatus::Ok;
};

struct SolveResult {
  SymMatrix theta;
  RunTrace trace;
};

// The outer reweighting loop: K times, rebuild the majorant at the current
// iterate and run the configured inner solver for I iterations. On a bad
// (non-SPD) theta0 the result carries status NotPdInput and theta0 back;
// inner-solver failures return the partial trace with the matching status.
SolveResult solve(const GlassoProblem& p, const SymMatrix& theta0,
                  const SolverConfig& cfg);

// diag(1 / (s_ii + gamma)): SPD for any valid S and exact for decoupled
// diagonal problems. Throws std::domain_error when a diagonal entry is <= 0.
SymMatrix default_theta0(const SymMatrix& s, double gamma);

}  // namespace glasso

#endif  // GLASSO_DRIVER_HPP
