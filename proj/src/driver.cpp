// src/driver.cpp

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

#include "glasso/driver.hpp"

#include <chrono>

namespace glasso {

std::string solver_kind_name(SolverKind kind) {
  switch (kind) {
    case SolverKind::ProxGrad: return "prox-grad";
    case SolverKind::ProxNewton: return "prox-newton";
    case SolverKind::GaussSeidel: return "gauss-seidel";
  }
  throw std::invalid_argument("solver_kind_name: bad enum value");
}

SolverKind parse_solver_kind(const std::string& name) {
  if (name == "prox-grad") return SolverKind::ProxGrad;
  if (name == "prox-newton") return SolverKind::ProxNewton;
  if (name == "gauss-seidel") return SolverKind::GaussSeidel;
  throw std::invalid_argument("unknown solver kind: " + name);
}

void validate(const SolverConfig& cfg) {
  validate(cfg.ls);
  if (cfg.reweightings < 1)
    throw std::invalid_argument("SolverConfig: reweightings must be >= 1");
  if (cfg.inner_iters < 1)
    throw std::invalid_argument("SolverConfig: inner_iters must be >= 1");
  if (cfg.cd_passes < 1)
    throw std::invalid_argument("SolverConfig: cd_passes must be >= 1");
  if (cfg.stop_gap < 0.0)
    throw std::invalid_argument("SolverConfig: stop_gap must be >= 0");
  if (static_cast<long long>(cfg.reweightings) * cfg.inner_iters > 1000000LL)
    throw std::invalid_argument("SolverConfig: reweightings * inner_iters exceeds 1e6");
}

namespace {

InnerReport run_inner(const GlassoProblem& p, const MajorantState& m,
                      const SymMatrix& theta, const SolverConfig& cfg) {
  switch (cfg.kind) {
    case SolverKind::ProxGrad:
      return prox_grad_inner(p, m, theta, cfg.inner_iters, cfg.ls);
    case SolverKind::ProxNewton:
      return prox_newton_inner(p, m, theta, cfg.inner_iters, cfg.ls, cfg.cd_passes);
    case SolverKind::GaussSeidel:
      return gauss_seidel_inner(p, m, theta, cfg.inner_iters, cfg.cd_passes);
  }
  throw std::invalid_argument("run_inner: bad solver kind");
}

SolveStatus to_solve_status(InnerStatus s) {
  switch (s) {
    case InnerStatus::Ok: return SolveStatus::Ok;
    case InnerStatus::NotPdInput: return SolveStatus::NotPdInput;
    case InnerStatus::LineSearchFailed: return SolveStatus::LineSearchFailed;
    case InnerStatus::SubproblemStall: return SolveStatus::SubproblemStall;
  }
  return SolveStatus::Ok;
}

}  // namespace

SolveResult solve(const GlassoProblem& p, const SymMatrix& theta0,
                  const SolverConfig& cfg) {
  validate(cfg);
  SolveResult res;
  res.theta = theta0;
  const auto psi0 = psi_value(p, theta0);
  if (!psi0) {
    res.trace.status = SolveStatus::NotPdInput;
    return res;
  }
  res.trace.psi_outer.push_back(*psi0);

  for (int k = 0; k < cfg.reweightings; ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto m = make_majorant(p, res.theta);  // res.theta is SPD here
    InnerReport rep = run_inner(p, *m, res.theta, cfg);
    const auto t1 = std::chrono::steady_clock::now();

    res.theta = rep.theta_out;
    const InnerStatus inner_status = rep.status;
    res.trace.inner_reports.push_back(std::move(rep));
    res.trace.wall_ms.push_back(
        std::chrono::duration<double, std::milli>(t1 - t0).count());

    const auto factor = cholesky(res.theta);
    if (!factor) {
      // Accepted iterates are SPD by construction; reaching this means the
      // inner solver already reported a failure on a partial iterate.
      res.trace.status = to_solve_status(inner_status);
      return res;
    }
    res.trace.min_pivots.push_back(factor->min_pivot());
    res.trace.max_pivots.push_back(factor->max_pivot());
    res.trace.psi_outer.push_back(*psi_value(p, res.theta));
    const auto m_next = make_majorant(p, res.theta);
    const double gap = stationarity_gap(p, res.theta, *m_next);
    res.trace.gaps.push_back(gap);

    if (inner_status != InnerStatus::Ok) {
      res.trace.status = to_solve_status(inner_status);
      return res;
    }
    if (cfg.stop_gap > 0.0 && gap < cfg.stop_gap) break;
  }
  return res;
}

SymMatrix default_theta0(const SymMatrix& s, double gamma) {
  std::vector<double> diag(s.dim());
  for (int i = 0; i < s.dim(); ++i) {
    if (!(s(i, i) > 0.0))
      throw std::domain_error("default_theta0: S has a non-positive diagonal entry");
    diag[i] = 1.0 / (s(i, i) + gamma);
  }
  return SymMatrix::diagonal(diag);
}

}  // namespace glasso
