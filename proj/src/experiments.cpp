// src/experiments.cpp

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

#include "glasso/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

#include "glasso/rng.hpp"
#include "json.hpp"

namespace glasso {

void validate(const SyntheticSpec& spec) {
  if (spec.dim < 2) throw std::invalid_argument("SyntheticSpec: dim must be >= 2");
  if (!(spec.sparsity >= 0.0 && spec.sparsity < 1.0))
    throw std::invalid_argument("SyntheticSpec: sparsity must be in [0, 1)");
  if (!(spec.diag_boost >= 0.0))
    throw std::invalid_argument("SyntheticSpec: diag_boost must be >= 0");
  if (spec.n_samples < 1)
    throw std::invalid_argument("SyntheticSpec: n_samples must be >= 1");
}

SymMatrix make_sparse_spd(const SyntheticSpec& spec) {
  validate(spec);
  const int d = spec.dim;
  SplitMix64 rng(spec.seed);
  // Unit-diagonal lower-triangular factor, row-major.
  std::vector<double> a(static_cast<size_t>(d) * d, 0.0);
  for (int i = 0; i < d; ++i) a[static_cast<size_t>(i) * d + i] = 1.0;
  for (int i = 1; i < d; ++i) {
    for (int j = 0; j < i; ++j) {
      if (rng.next_double() < 1.0 - spec.sparsity) {
        const double mag = rng.next_uniform(0.6, 1.0);
        const double sign = rng.next_double() < 0.5 ? -1.0 : 1.0;
        a[static_cast<size_t>(i) * d + j] = sign * mag;
      }
    }
  }
  SymMatrix out(d);
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      double s = 0.0;
      const int kmax = std::min(i, j);
      for (int k = 0; k <= kmax; ++k)
        s += a[static_cast<size_t>(i) * d + k] * a[static_cast<size_t>(j) * d + k];
      if (i == j) s += spec.diag_boost;
      out.set(i, j, s);
    }
  }
  return out;
}

double offdiag_zero_fraction(const SymMatrix& m) {
  const int d = m.dim();
  long zeros = 0, total = 0;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      ++total;
      if (m(i, j) == 0.0) ++zeros;
    }
  }
  return total == 0 ? 0.0 : static_cast<double>(zeros) / static_cast<double>(total);
}

std::optional<SymMatrix> sample_and_covariance(const SymMatrix& theta_true, int n,
                                               std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_and_covariance: n must be >= 1");
  const auto factor = cholesky(theta_true);
  if (!factor) return std::nullopt;
  const int d = theta_true.dim();
  GaussianSampler gauss{SplitMix64(seed)};
  std::vector<double> z(d);
  std::vector<double> acc(static_cast<size_t>(d) * d, 0.0);
  for (int s = 0; s < n; ++s) {
    for (int i = 0; i < d; ++i) z[i] = gauss.next();
    solve_transposed_lower(*factor, z);  // x = L^-T z has covariance theta^-1
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j) acc[static_cast<size_t>(i) * d + j] += z[i] * z[j];
  }
  SymMatrix cov(d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j)
      cov.set(i, j, acc[static_cast<size_t>(i) * d + j] / static_cast<double>(n));
  return cov;
}

double f1_support(const SymMatrix& theta_hat, const SymMatrix& theta_true, double tol) {
  if (theta_hat.dim() != theta_true.dim())
    throw std::invalid_argument("f1_support: dimension mismatch");
  long tp = 0, fp = 0, fn = 0, hat_nnz = 0, true_nnz = 0;
  for (int i = 0; i < theta_hat.dim(); ++i) {
    for (int j = i + 1; j < theta_hat.dim(); ++j) {
      const bool h = std::abs(theta_hat(i, j)) > tol;
      const bool t = std::abs(theta_true(i, j)) > tol;
      hat_nnz += h;
      true_nnz += t;
      if (h && t) ++tp;
      else if (h) ++fp;
      else if (t) ++fn;
    }
  }
  if (hat_nnz == 0 && true_nnz == 0) return 1.0;
  if (hat_nnz == 0 || true_nnz == 0) return 0.0;
  return 2.0 * static_cast<double>(tp) / static_cast<double>(2 * tp + fp + fn);
}

double nmse(const SymMatrix& theta_hat, const SymMatrix& theta_true) {
  const double denom = fro_norm(theta_true);
  if (denom == 0.0) throw std::domain_error("nmse: zero truth matrix");
  const double num = fro_dist(theta_hat, theta_true);
  return (num * num) / (denom * denom);
}

std::vector<double> default_gamma_grid(const SymMatrix& s, int count) {
  if (count < 1) throw std::invalid_argument("default_gamma_grid: count must be >= 1");
  double scale = 0.0;
  for (int i = 0; i < s.dim(); ++i)
    for (int j = i + 1; j < s.dim(); ++j) scale = std::max(scale, std::abs(s(i, j)));
  if (scale == 0.0) scale = 1.0;  // diagonal S; any grid is as good as another
  std::vector<double> grid(count);
  if (count == 1) {
    grid[0] = scale;
    return grid;
  }
  for (int k = 0; k < count; ++k) {
    const double e = -4.0 + 4.0 * static_cast<double>(k) / (count - 1);
    grid[k] = scale * std::pow(10.0, e);
  }
  return grid;
}

GridResult grid_search(const SymMatrix& s, const Penalty& penalty_template,
                       const std::vector<double>& gamma_grid, const SolverConfig& cfg,
                       const SymMatrix& truth, double support_tol) {
  if (gamma_grid.empty()) throw std::invalid_argument("grid_search: empty gamma grid");
  GridResult result;
  result.rows.reserve(gamma_grid.size());
  for (const double gamma : gamma_grid) {
    GridRow row;
    row.gamma = gamma;
    try {
      Penalty pen = penalty_template;
      pen.gamma = gamma;
      validate(pen);
      GlassoProblem problem = make_problem(s, pen);
      const SymMatrix theta0 = default_theta0(s, gamma);
      SolveResult sol = solve(problem, theta0, cfg);
      if (sol.trace.status == SolveStatus::Ok) {
        row.ok = true;
        row.status = "ok";
        row.metrics.f1 = f1_support(sol.theta, truth, support_tol);
        row.metrics.nmse = nmse(sol.theta, truth);
        row.final_psi = sol.trace.psi_outer.back();
      } else if (sol.trace.status == SolveStatus::NotPdInput) {
        row.status = "not-pd-input";
      } else if (sol.trace.status == SolveStatus::LineSearchFailed) {
        row.status = "line-search-failed";
      } else {
        row.status = "subproblem-stall";
      }
    } catch (const std::exception& e) {
      row.status = e.what();
    }
    result.rows.push_back(std::move(row));
  }
  for (size_t i = 0; i < result.rows.size(); ++i) {
    const GridRow& row = result.rows[i];
    if (!row.ok) continue;
    if (result.best_f1_index < 0 ||
        row.metrics.f1 > result.rows[result.best_f1_index].metrics.f1)
      result.best_f1_index = static_cast<int>(i);
    if (result.best_nmse_index < 0 ||
        row.metrics.nmse < result.rows[result.best_nmse_index].metrics.nmse)
      result.best_nmse_index = static_cast<int>(i);
  }
  return result;
}

void validate(const SweepSpec& spec) {
  validate(spec.data);
  validate(spec.ls);
  if (spec.inner_iters_grid.empty())
    throw std::invalid_argument("SweepSpec: inner_iters_grid must be non-empty");
  for (int i : spec.inner_iters_grid)
    if (i < 1) throw std::invalid_argument("SweepSpec: inner iteration counts must be >= 1");
  if (spec.reweightings < 1)
    throw std::invalid_argument("SweepSpec: reweightings must be >= 1");
  if (spec.penalties.empty())
    throw std::invalid_argument("SweepSpec: penalties must be non-empty");
  if (spec.solver_kinds.empty())
    throw std::invalid_argument("SweepSpec: solver_kinds must be non-empty");
  if (!(spec.support_tol >= 0.0))
    throw std::invalid_argument("SweepSpec: support_tol must be >= 0");
  if (spec.cd_passes < 1)
    throw std::invalid_argument("SweepSpec: cd_passes must be >= 1");
  for (double g : spec.gamma_grid)
    if (!(g > 0.0)) throw std::invalid_argument("SweepSpec: gamma values must be > 0");
}

std::vector<SweepRow> budget_sweep(const SweepSpec& spec, int jobs) {
  validate(spec);
  if (jobs < 1) jobs = 1;

  const SymMatrix theta_true = make_sparse_spd(spec.data);
  const auto cov = sample_and_covariance(theta_true, spec.data.n_samples,
                                         spec.data.seed + 1);
  // theta_true is SPD by construction (unit-diagonal factor).
  const SymMatrix s = *cov;
  const double realized = offdiag_zero_fraction(theta_true);
  const std::vector<double> gammas =
      spec.gamma_grid.empty() ? default_gamma_grid(s) : spec.gamma_grid;

  struct Cell {
    SolverKind solver;
    PenaltyKind penalty;
    int inner_iters;
  };
  std::vector<Cell> cells;
  for (SolverKind sk : spec.solver_kinds)
    for (PenaltyKind pk : spec.penalties)
      for (int it : spec.inner_iters_grid) cells.push_back({sk, pk, it});

  std::vector<SweepRow> rows(cells.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const size_t idx = next.fetch_add(1);
      if (idx >= cells.size()) return;
      const Cell& cell = cells[idx];
      SweepRow row;
      row.solver = cell.solver;
      row.penalty = cell.penalty;
      row.inner_iters = cell.inner_iters;
      row.total_iters = static_cast<long>(spec.reweightings) * cell.inner_iters;
      row.realized_sparsity = realized;
      const auto t0 = std::chrono::steady_clock::now();
      try {
        Penalty pen = make_penalty(cell.penalty, 1.0, spec.penalize_diagonal);
        SolverConfig cfg;
        cfg.kind = cell.solver;
        cfg.reweightings = spec.reweightings;
        cfg.inner_iters = cell.inner_iters;
        cfg.ls = spec.ls;
        cfg.cd_passes = spec.cd_passes;
        GridResult grid = grid_search(s, pen, gammas, cfg, theta_true, spec.support_tol);
        long failed = 0;
        for (const GridRow& g : grid.rows)
          if (!g.ok) ++failed;
        if (grid.best_f1_index >= 0) {
          row.best_f1 = grid.rows[grid.best_f1_index].metrics.f1;
          row.gamma_at_best_f1 = grid.rows[grid.best_f1_index].gamma;
          row.best_nmse = grid.rows[grid.best_nmse_index].metrics.nmse;
          row.gamma_at_best_nmse = grid.rows[grid.best_nmse_index].gamma;
          row.status = failed == 0 ? "ok" : ("failed:" + std::to_string(failed));
        } else {
          row.best_f1 = std::nan("");
          row.best_nmse = std::nan("");
          row.gamma_at_best_f1 = std::nan("");
          row.gamma_at_best_nmse = std::nan("");
          row.status = "failed:" + std::to_string(failed);
        }
      } catch (const std::exception& e) {
        row.status = e.what();
        row.best_f1 = std::nan("");
        row.best_nmse = std::nan("");
      }
      const auto t1 = std::chrono::steady_clock::now();
      row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      rows[idx] = std::move(row);
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return rows;
}

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\r\n") == std::string::npos) return raw;
  std::string out = "\"";
  for (char c : raw) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "solver,penalty,inner_iters,total_iters,best_f1,best_nmse,"
        "gamma_at_best_f1,gamma_at_best_nmse,realized_sparsity,status,wall_ms\n";
  for (const SweepRow& r : rows) {
    os << csv_field(solver_kind_name(r.solver)) << ','
       << csv_field(penalty_kind_name(r.penalty)) << ',' << r.inner_iters << ','
       << r.total_iters << ',' << fmt(r.best_f1) << ',' << fmt(r.best_nmse) << ','
       << fmt(r.gamma_at_best_f1) << ',' << fmt(r.gamma_at_best_nmse) << ','
       << fmt(r.realized_sparsity) << ',' << csv_field(r.status) << ','
       << fmt(r.wall_ms) << "\n";
  }
}

void write_grid_csv(std::ostream& os, const GridResult& grid) {
  os << "gamma,f1,nmse,final_psi,status,is_best_f1,is_best_nmse\n";
  for (size_t i = 0; i < grid.rows.size(); ++i) {
    const GridRow& r = grid.rows[i];
    os << fmt(r.gamma) << ',' << fmt(r.metrics.f1) << ',' << fmt(r.metrics.nmse)
       << ',' << fmt(r.final_psi) << ',' << csv_field(r.status) << ','
       << (static_cast<int>(i) == grid.best_f1_index ? 1 : 0) << ','
       << (static_cast<int>(i) == grid.best_nmse_index ? 1 : 0) << "\n";
  }
}

SweepSpec sweep_spec_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("sweep config: JSON parse error: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("sweep config: top level must be an object");

  SweepSpec spec;
  try {
    spec.inner_iters_grid = j.at("inner_iters_grid").get<std::vector<int>>();
    if (j.contains("reweightings")) spec.reweightings = j.at("reweightings").get<int>();
    if (j.contains("gamma_grid"))
      spec.gamma_grid = j.at("gamma_grid").get<std::vector<double>>();
    for (const auto& name : j.at("penalties").get<std::vector<std::string>>())
      spec.penalties.push_back(parse_penalty_kind(name));
    for (const auto& name : j.at("solver_kinds").get<std::vector<std::string>>())
      spec.solver_kinds.push_back(parse_solver_kind(name));
    const auto& data = j.at("data");
    spec.data.dim = data.at("dim").get<int>();
    spec.data.sparsity = data.at("sparsity").get<double>();
    if (data.contains("diag_boost")) spec.data.diag_boost = data.at("diag_boost").get<double>();
    spec.data.n_samples = data.at("n_samples").get<int>();
    spec.data.seed = data.at("seed").get<std::uint64_t>();
    if (j.contains("support_tol")) spec.support_tol = j.at("support_tol").get<double>();
    if (j.contains("cd_passes")) spec.cd_passes = j.at("cd_passes").get<int>();
    if (j.contains("penalize_diagonal"))
      spec.penalize_diagonal = j.at("penalize_diagonal").get<bool>();
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("sweep config: ") + e.what());
  }
  validate(spec);
  return spec;
}

}  // namespace glasso
