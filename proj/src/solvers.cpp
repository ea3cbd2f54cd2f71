// src/solvers.cpp

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

#include "glasso/solvers.hpp"

#include <cfloat>
#include <cmath>

namespace glasso {

namespace {

inline double soft(double z, double t) {
  if (z > t) return z - t;
  if (z < -t) return z + t;
  return 0.0;
}

inline double f_from_factor(const GlassoProblem& p, const SymMatrix& theta,
                            const CholeskyFactor& f) {
  return -log_det(f) + dot(p.s, theta);
}

InnerReport not_pd_report(const SymMatrix& theta0) {
  InnerReport r;
  r.theta_out = theta0;
  r.status = InnerStatus::NotPdInput;
  return r;
}

}  // namespace

void validate(const LineSearchParams& ls) {
  if (!(ls.armijo_gamma > 0.0 && ls.armijo_gamma < 0.5))
    throw std::invalid_argument("LineSearchParams: armijo_gamma must be in (0, 1/2)");
  if (!(ls.backtrack_factor > 0.0 && ls.backtrack_factor < 1.0))
    throw std::invalid_argument("LineSearchParams: backtrack_factor must be in (0, 1)");
  if (ls.max_backtracks < 1)
    throw std::invalid_argument("LineSearchParams: max_backtracks must be >= 1");
  if (!(ls.initial_step > 0.0))
    throw std::invalid_argument("LineSearchParams: initial_step must be > 0");
  if (!(ls.prox_delta > 0.0))
    throw std::invalid_argument("LineSearchParams: prox_delta must be > 0");
}

InnerReport prox_grad_inner(const GlassoProblem& p, const MajorantState& m,
                            const SymMatrix& theta0, int iters,
                            const LineSearchParams& ls) {
  validate(ls);
  if (iters < 1) throw std::invalid_argument("prox_grad_inner: iters must be >= 1");
  auto factor = cholesky(theta0);
  if (!factor) return not_pd_report(theta0);

  InnerReport rep;
  SymMatrix theta = theta0;
  double f_cur = f_from_factor(p, theta, *factor);
  double m_cur = majorant_value(m.weights, theta);
  rep.psi_initial = f_cur + m_cur + m.tangent_constant;
  const double alpha = 0.5 + ls.prox_delta;

  for (int it = 0; it < iters; ++it) {
    const SymMatrix w = spd_inverse(*factor);
    const SymMatrix g = sub(p.s, w);
    const double pivot = factor->min_pivot();
    double t = std::max(ls.initial_step * pivot * pivot, DBL_MIN);

    bool accepted = false;
    // The alpha certificate has margin ~dn2/t by prox optimality, which
    // drops below roundoff once steps are tiny; give it epsilon headroom.
    // The curvature condition stays strict: loosening it admits oversized
    // steps whose iteration map is expansive.
    const double tau_alpha = 16.0 * DBL_EPSILON * (1.0 + std::abs(m_cur));
    const double zero_move = 1e-10 * (1.0 + fro_norm(theta));
    for (int bt = 0; bt <= ls.max_backtracks; ++bt) {
      SymMatrix cand = soft_threshold(m.weights, axpy(theta, -t, g), t);
      auto cand_factor = cholesky(cand);
      if (cand_factor) {
        const SymMatrix diff = sub(cand, theta);
        const double dn2 = dot(diff, diff);
        const double gdot = dot(g, diff);
        const double m_cand = majorant_value(m.weights, cand);
        const double f_cand = f_from_factor(p, cand, *cand_factor);
        const bool converged = dn2 <= zero_move * zero_move;
        const bool cond_alpha = m_cand + gdot + alpha / t * dn2 <= m_cur + tau_alpha;
        const bool cond_smooth = f_cand <= f_cur + gdot + dn2 / (2.0 * t);
        if (converged || (cond_alpha && cond_smooth)) {
          theta = std::move(cand);
          factor = std::move(cand_factor);
          f_cur = f_cand;
          m_cur = m_cand;
          rep.psi_trace.push_back(f_cur + m_cur + m.tangent_constant);
          rep.step_trace.push_back(t);
          rep.sq_step_norms.push_back(dn2);
          accepted = true;
          break;
        }
      }
      t *= ls.backtrack_factor;
    }
    if (!accepted) {
      rep.status = InnerStatus::LineSearchFailed;
      break;
    }
    ++rep.iterations_done;
  }
  rep.theta_out = std::move(theta);
  return rep;
}

InnerReport prox_newton_inner(const GlassoProblem& p, const MajorantState& m,
                              const SymMatrix& theta0, int iters,
                              const LineSearchParams& ls, int cd_passes) {
  validate(ls);
  if (iters < 1) throw std::invalid_argument("prox_newton_inner: iters must be >= 1");
  if (cd_passes < 1) throw std::invalid_argument("prox_newton_inner: cd_passes must be >= 1");
  auto factor = cholesky(theta0);
  if (!factor) return not_pd_report(theta0);

  InnerReport rep;
  SymMatrix theta = theta0;
  const int d = theta.dim();
  double f_cur = f_from_factor(p, theta, *factor);
  double m_cur = majorant_value(m.weights, theta);
  double psi_cur = f_cur + m_cur + m.tangent_constant;
  rep.psi_initial = psi_cur;

  std::vector<std::pair<int, int>> active;
  std::vector<double> dmat(static_cast<size_t>(d) * d);
  std::vector<double> u(static_cast<size_t>(d) * d);  // running D * W product

  for (int it = 0; it < iters; ++it) {
    const SymMatrix w = spd_inverse(*factor);
    const SymMatrix g = sub(p.s, w);

    // Free entries plus zero entries whose gradient violates the threshold;
    // exact ties |g| == lambda stay out.
    active.clear();
    int active_entries = 0;
    for (int i = 0; i < d; ++i) {
      for (int j = i; j < d; ++j) {
        const bool in = theta(i, j) != 0.0 ||
                        std::abs(g(i, j)) > m.weights(i, j);
        if (in) {
          active.emplace_back(i, j);
          active_entries += (i == j) ? 1 : 2;
        }
      }
    }
    rep.active_set_sizes.push_back(active_entries);

    // Coordinate descent on the quadratic model, symmetric pairs jointly.
    std::fill(dmat.begin(), dmat.end(), 0.0);
    std::fill(u.begin(), u.end(), 0.0);
    const double* pw = w.data();
    for (int pass = 0; pass < cd_passes; ++pass) {
      for (const auto& [i, j] : active) {
        const double wij = pw[static_cast<size_t>(i) * d + j];
        double a = wij * wij;
        if (i != j) a += pw[static_cast<size_t>(i) * d + i] * pw[static_cast<size_t>(j) * d + j];
        double b = g(i, j);
        for (int k = 0; k < d; ++k)
          b += pw[static_cast<size_t>(i) * d + k] * u[static_cast<size_t>(k) * d + j];
        const double c = theta(i, j) + dmat[static_cast<size_t>(i) * d + j];
        const double mu = -c + soft(c - b / a, m.weights(i, j) / a);
        if (mu != 0.0) {
          dmat[static_cast<size_t>(i) * d + j] += mu;
          dmat[static_cast<size_t>(j) * d + i] = dmat[static_cast<size_t>(i) * d + j];
          double* ui = u.data() + static_cast<size_t>(i) * d;
          const double* wj = pw + static_cast<size_t>(j) * d;
          for (int k = 0; k < d; ++k) ui[k] += mu * wj[k];
          if (i != j) {
            double* uj = u.data() + static_cast<size_t>(j) * d;
            const double* wi = pw + static_cast<size_t>(i) * d;
            for (int k = 0; k < d; ++k) uj[k] += mu * wi[k];
          }
        }
      }
    }

    double dnorm2 = 0.0;
    for (size_t k = 0; k < dmat.size(); ++k) dnorm2 += dmat[k] * dmat[k];
    const double theta_norm = fro_norm(theta);
    if (std::sqrt(dnorm2) <= 1e-12 * (1.0 + theta_norm)) {
      // Stationary for this majorant; record a unit-step zero move.
      rep.psi_trace.push_back(psi_cur);
      rep.step_trace.push_back(1.0);
      rep.sq_step_norms.push_back(0.0);
      ++rep.iterations_done;
      continue;
    }

    SymMatrix full_step(d);
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j)
        full_step.set(i, j, theta(i, j) + dmat[static_cast<size_t>(i) * d + j]);
    double gdot = 0.0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) gdot += g(i, j) * dmat[static_cast<size_t>(i) * d + j];
    // Predicted decrease of the model; never positive up to roundoff, and
    // clamped so a roundoff-positive value cannot loosen the Armijo test.
    const double pred =
        std::min(0.0, gdot + majorant_value(m.weights, full_step) - m_cur);

    double alpha = ls.initial_step;
    bool accepted = false;
    const double tau = 16.0 * DBL_EPSILON * (1.0 + std::abs(psi_cur));
    for (int bt = 0; bt <= ls.max_backtracks; ++bt) {
      SymMatrix cand(d);
      for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j)
          cand.set(i, j, theta(i, j) + alpha * dmat[static_cast<size_t>(i) * d + j]);
      auto cand_factor = cholesky(cand);
      if (cand_factor) {
        const double f_cand = f_from_factor(p, cand, *cand_factor);
        const double m_cand = majorant_value(m.weights, cand);
        const double psi_cand = f_cand + m_cand + m.tangent_constant;
        if (psi_cand <= psi_cur + ls.armijo_gamma * alpha * pred + tau) {
          theta = std::move(cand);
          factor = std::move(cand_factor);
          f_cur = f_cand;
          m_cur = m_cand;
          psi_cur = psi_cand;
          rep.psi_trace.push_back(psi_cur);
          rep.step_trace.push_back(alpha);
          rep.sq_step_norms.push_back(alpha * alpha * dnorm2);
          accepted = true;
          break;
        }
      }
      alpha *= ls.backtrack_factor;
    }
    if (!accepted) {
      rep.status = InnerStatus::LineSearchFailed;
      break;
    }
    ++rep.iterations_done;
  }
  rep.theta_out = std::move(theta);
  return rep;
}

InnerReport gauss_seidel_inner(const GlassoProblem& p, const MajorantState& m,
                               const SymMatrix& theta0, int sweeps, int cd_passes) {
  if (sweeps < 1) throw std::invalid_argument("gauss_seidel_inner: sweeps must be >= 1");
  if (cd_passes < 1) throw std::invalid_argument("gauss_seidel_inner: cd_passes must be >= 1");
  auto factor = cholesky(theta0);
  if (!factor) return not_pd_report(theta0);

  InnerReport rep;
  SymMatrix theta = theta0;
  const int d = theta.dim();
  rep.psi_initial = f_from_factor(p, theta, *factor) +
                    majorant_value(m.weights, theta) + m.tangent_constant;
  SymMatrix w = spd_inverse(*factor);

  // Full-length scratch arrays indexed by the original row index; the
  // pivot-column slot stays unused.
  std::vector<double> w12(d), x(d), bvec(d), lam(d), adiag(d), r(d), uvec(d);

  for (int sweep = 0; sweep < sweeps; ++sweep) {
    double sq_norm = 0.0;
    for (int c = 0; c < d; ++c) {
      const double s22 = p.s(c, c);
      const double lam22 = m.weights(c, c);
      const double denom = s22 + lam22;
      if (!(denom > 0.0)) {
        rep.status = InnerStatus::SubproblemStall;
        rep.theta_out = std::move(theta);
        return rep;
      }
      const double t = 1.0 / denom;
      const double w22 = w(c, c);

      for (int i = 0; i < d; ++i) {
        if (i == c) continue;
        w12[i] = w(i, c);
        x[i] = theta(i, c);
        bvec[i] = p.s(i, c);
        lam[i] = m.weights(i, c);
        adiag[i] = denom * (w(i, i) - w12[i] * w12[i] / w22);
        if (!(adiag[i] > 0.0)) {  // maintained inverse broke down
          rep.status = InnerStatus::SubproblemStall;
          rep.theta_out = std::move(theta);
          return rep;
        }
      }

      // r = A x with A = denom * (W11 - w12 w12^T / w22), x warm-started.
      double beta = 0.0;
      std::fill(r.begin(), r.end(), 0.0);
      for (int j = 0; j < d; ++j) {
        if (j == c || x[j] == 0.0) continue;
        beta += w12[j] * x[j];
        const double* wj = w.row(j);
        const double xj = x[j];
        for (int k = 0; k < d; ++k) r[k] += xj * wj[k];
      }
      for (int k = 0; k < d; ++k) {
        if (k == c) continue;
        r[k] = denom * (r[k] - beta * w12[k] / w22);
      }

      double obj0 = 0.0;
      for (int i = 0; i < d; ++i) {
        if (i == c) continue;
        obj0 += 0.5 * x[i] * r[i] + bvec[i] * x[i] + lam[i] * std::abs(x[i]);
      }

      for (int pass = 0; pass < cd_passes; ++pass) {
        for (int i = 0; i < d; ++i) {
          if (i == c) continue;
          const double z = x[i] - (r[i] + bvec[i]) / adiag[i];
          const double xn = soft(z, lam[i] / adiag[i]);
          const double delta = xn - x[i];
          if (delta != 0.0) {
            x[i] = xn;
            const double* wi = w.row(i);
            const double scale = delta * denom;
            const double corr = delta * denom * w12[i] / w22;
            for (int k = 0; k < d; ++k) r[k] += scale * wi[k] - corr * w12[k];
            // the c slot of r is scratch; it never feeds an update
          }
        }
      }

      double obj1 = 0.0;
      for (int i = 0; i < d; ++i) {
        if (i == c) continue;
        obj1 += 0.5 * x[i] * r[i] + bvec[i] * x[i] + lam[i] * std::abs(x[i]);
      }
      if (obj1 > obj0 + 1e-9 * (1.0 + std::abs(obj0))) {
        rep.status = InnerStatus::SubproblemStall;
        rep.theta_out = std::move(theta);
        return rep;
      }

      // New column written back symmetrically; the Schur complement is
      // pinned to 1/(s22 + lam22), which keeps the update SPD.
      double quad = 0.0;
      for (int i = 0; i < d; ++i) {
        if (i == c) continue;
        quad += x[i] * r[i];
      }
      const double theta22 = t + quad / denom;
      for (int i = 0; i < d; ++i) {
        if (i == c) continue;
        const double dxi = x[i] - theta(i, c);
        sq_norm += 2.0 * dxi * dxi;
        theta.set(i, c, x[i]);
      }
      const double d22 = theta22 - theta(c, c);
      sq_norm += d22 * d22;
      theta.set(c, c, theta22);

      // Block-inverse refresh of W: u = Theta11^-1 theta12 = r / denom.
      for (int i = 0; i < d; ++i) uvec[i] = (i == c) ? 0.0 : r[i] / denom;
      for (int i = 0; i < d; ++i) {
        if (i == c) continue;
        for (int j = i; j < d; ++j) {
          if (j == c) continue;
          w.set(i, j, w(i, j) - w12[i] * w12[j] / w22 + uvec[i] * uvec[j] / t);
        }
      }
      for (int i = 0; i < d; ++i) {
        if (i == c) continue;
        w.set(i, c, -uvec[i] / t);
      }
      w.set(c, c, denom);
    }

    // One full refactorization per d column updates caps inverse drift and
    // provides the factor for the trace entry.
    factor = cholesky(theta);
    if (!factor) {
      rep.status = InnerStatus::SubproblemStall;
      break;
    }
    w = spd_inverse(*factor);
    rep.psi_trace.push_back(f_from_factor(p, theta, *factor) +
                            majorant_value(m.weights, theta) + m.tangent_constant);
    rep.step_trace.push_back(1.0);
    rep.sq_step_norms.push_back(sq_norm);
    ++rep.iterations_done;
  }
  rep.theta_out = std::move(theta);
  return rep;
}

std::vector<double> weighted_lasso_cd(const SymMatrix& a, const std::vector<double>& b,
                                      const std::vector<double>& lam,
                                      std::vector<double> x0, int passes) {
  const int n = a.dim();
  if (b.size() != static_cast<size_t>(n) || lam.size() != static_cast<size_t>(n) ||
      x0.size() != static_cast<size_t>(n))
    throw std::invalid_argument("weighted_lasso_cd: dimension mismatch");
  if (passes < 1) throw std::invalid_argument("weighted_lasso_cd: passes must be >= 1");
  for (int i = 0; i < n; ++i)
    if (!(a(i, i) > 0.0))
      throw std::invalid_argument("weighted_lasso_cd: A must be SPD (nonpositive diagonal)");

  std::vector<double> r(n, 0.0);  // r = A x
  for (int j = 0; j < n; ++j) {
    if (x0[j] == 0.0) continue;
    for (int k = 0; k < n; ++k) r[k] += x0[j] * a(k, j);
  }
  for (int pass = 0; pass < passes; ++pass) {
    for (int i = 0; i < n; ++i) {
      const double z = x0[i] - (r[i] + b[i]) / a(i, i);
      const double xn = soft(z, lam[i] / a(i, i));
      const double delta = xn - x0[i];
      if (delta != 0.0) {
        x0[i] = xn;
        for (int k = 0; k < n; ++k) r[k] += delta * a(k, i);
      }
    }
  }
  return x0;
}

}  // namespace glasso
