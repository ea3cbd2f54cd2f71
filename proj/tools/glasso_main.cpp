// tools/glasso_main.cpp

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

// Command-line front end. Exit codes: 0 success, 2 config error, 3 data
// error (non-PD or malformed input), 4 solver failure in a non-sweep command.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "glasso/experiments.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitData = 3;
constexpr int kExitSolver = 4;

struct SolveArgs {
  std::string cov_path;
  std::string solver = "prox-grad";
  std::string penalty = "l1";
  double gamma = 0.1;
  double epsilon = -1.0;  // <0 means kind default
  int reweightings = 20;
  int inner_iters = 100;
  int cd_passes = 1;
  double stop_gap = 0.0;
  bool no_penalize_diagonal = false;
  std::string out_path;
  std::string trace_path;
};

void write_trace_csv(std::ostream& os, const glasso::RunTrace& trace) {
  os << "k,i,psi,step,sq_step_norm,active_set,wall_ms\n";
  char buf[64];
  auto num = [&buf](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  for (size_t k = 0; k < trace.inner_reports.size(); ++k) {
    const glasso::InnerReport& rep = trace.inner_reports[k];
    for (int i = 0; i < rep.iterations_done; ++i) {
      os << k << ',' << i << ',' << num(rep.psi_trace[i]) << ','
         << num(rep.step_trace[i]) << ',' << num(rep.sq_step_norms[i]) << ',';
      if (i < static_cast<int>(rep.active_set_sizes.size()))
        os << rep.active_set_sizes[i];
      os << ',' << num(trace.wall_ms[k]) << "\n";
    }
  }
}

int run_generate(const glasso::SyntheticSpec& spec, const std::string& out_prec,
                 const std::string& out_cov) {
  const glasso::SymMatrix theta_true = glasso::make_sparse_spd(spec);
  const auto cov =
      glasso::sample_and_covariance(theta_true, spec.n_samples, spec.seed + 1);
  if (!cov) {
    std::cerr << "generate: generated precision matrix is not PD\n";
    return kExitData;
  }
  glasso::write_matrix_file(out_prec, theta_true);
  glasso::write_matrix_file(out_cov, *cov);
  std::cout << "wrote " << out_prec << " and " << out_cov
            << " (realized off-diagonal zero fraction "
            << glasso::offdiag_zero_fraction(theta_true) << ")\n";
  return kExitOk;
}

int run_solve(const SolveArgs& args) {
  glasso::SymMatrix s;
  try {
    s = glasso::read_matrix_file(args.cov_path);
  } catch (const std::exception& e) {
    std::cerr << "solve: " << e.what() << "\n";
    return kExitData;
  }

  glasso::Penalty penalty;
  glasso::SolverConfig cfg;
  try {
    const auto kind = glasso::parse_penalty_kind(args.penalty);
    const double eps = args.epsilon < 0.0 ? glasso::default_epsilon(kind) : args.epsilon;
    penalty = glasso::make_penalty(kind, args.gamma, eps, !args.no_penalize_diagonal);
    cfg.kind = glasso::parse_solver_kind(args.solver);
    cfg.reweightings = args.reweightings;
    cfg.inner_iters = args.inner_iters;
    cfg.cd_passes = args.cd_passes;
    cfg.stop_gap = args.stop_gap;
    glasso::validate(cfg);
  } catch (const std::exception& e) {
    std::cerr << "solve: " << e.what() << "\n";
    return kExitConfig;
  }

  glasso::SolveResult result;
  try {
    const glasso::GlassoProblem problem = glasso::make_problem(s, penalty);
    const glasso::SymMatrix theta0 = glasso::default_theta0(s, args.gamma);
    result = glasso::solve(problem, theta0, cfg);
  } catch (const std::exception& e) {
    std::cerr << "solve: " << e.what() << "\n";
    return kExitData;
  }
  if (result.trace.status == glasso::SolveStatus::NotPdInput) {
    std::cerr << "solve: initial iterate is not positive definite\n";
    return kExitData;
  }

  glasso::write_matrix_file(args.out_path, result.theta);
  if (!args.trace_path.empty()) {
    std::ofstream ts(args.trace_path);
    if (!ts) {
      std::cerr << "solve: cannot open trace file " << args.trace_path << "\n";
      return kExitData;
    }
    write_trace_csv(ts, result.trace);
  }
  if (result.trace.status != glasso::SolveStatus::Ok) {
    std::cerr << "solve: solver failed ("
              << (result.trace.status == glasso::SolveStatus::LineSearchFailed
                      ? "line search"
                      : "subproblem stall")
              << "); partial result written\n";
    return kExitSolver;
  }
  std::cout << "psi " << result.trace.psi_outer.back() << " gap "
            << result.trace.gaps.back() << " written to " << args.out_path << "\n";
  return kExitOk;
}

int run_sweep(const std::string& config_path, const std::string& out_path, int jobs) {
  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "sweep: cannot open config " << config_path << "\n";
    return kExitConfig;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  glasso::SweepSpec spec;
  try {
    spec = glasso::sweep_spec_from_json(buf.str());
  } catch (const std::exception& e) {
    std::cerr << "sweep: " << e.what() << "\n";
    return kExitConfig;
  }
  const auto rows = glasso::budget_sweep(spec, jobs);
  std::ofstream os(out_path);
  if (!os) {
    std::cerr << "sweep: cannot open output " << out_path << "\n";
    return kExitData;
  }
  glasso::write_sweep_csv(os, rows);
  std::cout << "wrote " << rows.size() << " rows to " << out_path << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse precision matrix estimation via block-coordinate reweighting"};
  app.require_subcommand(1);

  // generate
  glasso::SyntheticSpec gen_spec;
  std::string gen_out_prec, gen_out_cov;
  CLI::App* gen = app.add_subcommand("generate", "Generate a synthetic instance");
  gen->add_option("--dim", gen_spec.dim, "Matrix dimension")->required();
  gen->add_option("--sparsity", gen_spec.sparsity, "Zero probability per factor entry")
      ->required();
  gen->add_option("--diag-boost", gen_spec.diag_boost, "Added multiple of the identity");
  gen->add_option("--samples", gen_spec.n_samples, "Number of Gaussian samples")->required();
  gen->add_option("--seed", gen_spec.seed, "Generator seed")->required();
  gen->add_option("--out-prec", gen_out_prec, "Output path for the true precision")
      ->required();
  gen->add_option("--out-cov", gen_out_cov, "Output path for the empirical covariance")
      ->required();

  // solve
  SolveArgs solve_args;
  CLI::App* slv = app.add_subcommand("solve", "Solve one instance");
  slv->add_option("--cov", solve_args.cov_path, "Empirical covariance file")->required();
  slv->add_option("--solver", solve_args.solver,
                  "prox-grad | prox-newton | gauss-seidel");
  slv->add_option("--penalty", solve_args.penalty, "l1 | log-sum | l-half | mcp");
  slv->add_option("--gamma", solve_args.gamma, "Regularization strength")->required();
  slv->add_option("--epsilon", solve_args.epsilon, "Penalty width (kind default if unset)");
  slv->add_option("--reweightings", solve_args.reweightings, "Outer reweighting count K");
  slv->add_option("--inner-iters", solve_args.inner_iters, "Inner iterations I per reweighting");
  slv->add_option("--cd-passes", solve_args.cd_passes, "Coordinate-descent passes");
  slv->add_option("--stop-gap", solve_args.stop_gap, "Early stop on stationarity gap");
  slv->add_flag("--no-penalize-diagonal", solve_args.no_penalize_diagonal,
                "Leave the diagonal unpenalized");
  slv->add_option("--out", solve_args.out_path, "Output path for the estimate")->required();
  slv->add_option("--trace", solve_args.trace_path, "Optional CSV run trace");

  // sweep
  std::string sweep_config, sweep_out;
  int sweep_jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (sweep_jobs < 1) sweep_jobs = 1;
  CLI::App* swp = app.add_subcommand("sweep", "Iteration-budget sweep from a JSON config");
  swp->add_option("--config", sweep_config, "JSON sweep configuration")->required();
  swp->add_option("--out", sweep_out, "Output CSV path")->required();
  swp->add_option("--jobs", sweep_jobs, "Worker pool width");

  // grid
  SolveArgs grid_args;
  std::string grid_truth, grid_out, grid_gammas;
  double grid_support_tol = 1e-8;
  CLI::App* grd = app.add_subcommand("grid", "Gamma grid search on one instance");
  grd->add_option("--cov", grid_args.cov_path, "Empirical covariance file")->required();
  grd->add_option("--truth", grid_truth, "True precision matrix file")->required();
  grd->add_option("--solver", grid_args.solver, "prox-grad | prox-newton | gauss-seidel");
  grd->add_option("--penalty", grid_args.penalty, "l1 | log-sum | l-half | mcp");
  grd->add_option("--epsilon", grid_args.epsilon, "Penalty width (kind default if unset)");
  grd->add_option("--reweightings", grid_args.reweightings, "Outer reweighting count K");
  grd->add_option("--inner-iters", grid_args.inner_iters, "Inner iterations I per reweighting");
  grd->add_option("--cd-passes", grid_args.cd_passes, "Coordinate-descent passes");
  grd->add_option("--gammas", grid_gammas, "Comma-separated gamma values (default: 20 log-spaced)");
  grd->add_option("--support-tol", grid_support_tol, "Support binarization threshold");
  grd->add_flag("--no-penalize-diagonal", grid_args.no_penalize_diagonal,
                "Leave the diagonal unpenalized");
  grd->add_option("--out", grid_out, "Output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (gen->parsed()) {
      try {
        glasso::validate(gen_spec);
      } catch (const std::exception& e) {
        std::cerr << "generate: " << e.what() << "\n";
        return kExitConfig;
      }
      return run_generate(gen_spec, gen_out_prec, gen_out_cov);
    }
    if (slv->parsed()) return run_solve(solve_args);
    if (swp->parsed()) return run_sweep(sweep_config, sweep_out, sweep_jobs);
    if (grd->parsed()) {
      glasso::SymMatrix s, truth;
      try {
        s = glasso::read_matrix_file(grid_args.cov_path);
        truth = glasso::read_matrix_file(grid_truth);
      } catch (const std::exception& e) {
        std::cerr << "grid: " << e.what() << "\n";
        return kExitData;
      }
      glasso::Penalty penalty;
      glasso::SolverConfig cfg;
      std::vector<double> gammas;
      try {
        const auto kind = glasso::parse_penalty_kind(grid_args.penalty);
        const double eps =
            grid_args.epsilon < 0.0 ? glasso::default_epsilon(kind) : grid_args.epsilon;
        penalty = glasso::make_penalty(kind, 1.0, eps, !grid_args.no_penalize_diagonal);
        cfg.kind = glasso::parse_solver_kind(grid_args.solver);
        cfg.reweightings = grid_args.reweightings;
        cfg.inner_iters = grid_args.inner_iters;
        cfg.cd_passes = grid_args.cd_passes;
        glasso::validate(cfg);
        if (!grid_gammas.empty()) {
          std::stringstream ss(grid_gammas);
          std::string tok;
          while (std::getline(ss, tok, ',')) gammas.push_back(std::stod(tok));
        } else {
          gammas = glasso::default_gamma_grid(s);
        }
        if (gammas.empty()) throw std::invalid_argument("empty gamma grid");
      } catch (const std::exception& e) {
        std::cerr << "grid: " << e.what() << "\n";
        return kExitConfig;
      }
      const auto grid = glasso::grid_search(s, penalty, gammas, cfg, truth, grid_support_tol);
      std::ofstream os(grid_out);
      if (!os) {
        std::cerr << "grid: cannot open output " << grid_out << "\n";
        return kExitData;
      }
      glasso::write_grid_csv(os, grid);
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitConfig;
}
