// include/glasso/experiments.hpp

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

#ifndef GLASSO_EXPERIMENTS_HPP
#define GLASSO_EXPERIMENTS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "glasso/driver.hpp"

namespace glasso {

struct SyntheticSpec {
  int dim = 75;
  double sparsity = 0.9;    // zero probability per strictly-lower factor entry
  double diag_boost = 0.1;  // added c * Id
  int n_samples = 1000;
  std::uint64_t seed = 0;
};

void validate(const SyntheticSpec& spec);

// Deterministic in seed: lower-triangular factor with unit diagonal, each
// strictly-lower entry nonzero with probability (1 - sparsity) and magnitude
// uniform in [0.6, 1.0] with random sign; returns factor * factor^T +
// diag_boost * Id.
SymMatrix make_sparse_spd(const SyntheticSpec& spec);

// Fraction of exactly-zero off-diagonal entries.
double offdiag_zero_fraction(const SymMatrix& m);

// n zero-mean Gaussian samples with covariance theta_true^-1 (x = L^-T z),
// returned as the uncentered empirical covariance. nullopt if theta_true is
// not SPD. Deterministic in seed (SplitMix64 + polar Gaussians).
std::optional<SymMatrix> sample_and_covariance(const SymMatrix& theta_true, int n,
                                               std::uint64_t seed);

// Support F1 over the strict upper triangle, binarized at |entry| > tol.
// Both supports empty -> 1; exactly one empty -> 0.
double f1_support(const SymMatrix& theta_hat, const SymMatrix& theta_true, double tol);

// ||hat - true||_F^2 / ||true||_F^2; throws std::domain_error on zero truth.
double nmse(const SymMatrix& theta_hat, const SymMatrix& theta_true);

struct MetricPair {
  double f1 = 0.0;
  double nmse = 0.0;
};

struct GridRow {
  double gamma = 0.0;
  MetricPair metrics;
  double final_psi = 0.0;
  bool ok = false;
  std::string status;  // "ok" or the failure label
};

struct GridResult {
  std::vector<GridRow> rows;
  int best_f1_index = -1;    // argmax F1 over ok rows, first on ties
  int best_nmse_index = -1;  // argmin NMSE over ok rows, first on ties
};

// 20 log-spaced points in [1e-4, 1] * max offdiag |S|.
std::vector<double> default_gamma_grid(const SymMatrix& s, int count = 20);

// One independent solve per gamma from default_theta0; penalty is the
// template whose gamma is replaced per row.
GridResult grid_search(const SymMatrix& s, const Penalty& penalty_template,
                       const std::vector<double>& gamma_grid, const SolverConfig& cfg,
                       const SymMatrix& truth, double support_tol);

struct SweepSpec {
  std::vector<int> inner_iters_grid;
  int reweightings = 20;
  std::vector<double> gamma_grid;  // empty -> default_gamma_grid(S)
  std::vector<PenaltyKind> penalties;
  std::vector<SolverKind> solver_kinds;
  SyntheticSpec data;
  double support_tol = 1e-8;
  int cd_passes = 1;
  LineSearchParams ls;
  bool penalize_diagonal = true;
};

void validate(const SweepSpec& spec);

struct SweepRow {
  SolverKind solver;
  PenaltyKind penalty;
  int inner_iters = 0;
  long total_iters = 0;
  double best_f1 = 0.0;
  double best_nmse = 0.0;
  double gamma_at_best_f1 = 0.0;
  double gamma_at_best_nmse = 0.0;
  double realized_sparsity = 0.0;
  std::string status;  // "ok" or "failed:<count>" when gamma rows failed
  double wall_ms = 0.0;
};

// One grid_search per (solver, penalty, I) cell, cells run by a pool of
// `jobs` workers; the row order is the deterministic cell order regardless
// of scheduling. Data generation uses data.seed, sampling data.seed + 1.
std::vector<SweepRow> budget_sweep(const SweepSpec& spec, int jobs = 1);

// RFC-4180 CSV with a mandatory header; doubles printed at 17 significant
// digits so repeated runs are byte-identical apart from wall_ms.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);
void write_grid_csv(std::ostream& os, const GridResult& grid);
std::string csv_field(const std::string& raw);

// Parses the JSON sweep config (field-for-field mirror of SweepSpec);
// throws std::invalid_argument with a description on any defect.
SweepSpec sweep_spec_from_json(const std::string& text);

}  // namespace glasso

#endif  // GLASSO_EXPERIMENTS_HPP
