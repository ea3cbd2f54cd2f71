// src/penalty.cpp

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

#include "glasso/penalty.hpp"

#include <cmath>

namespace glasso {

std::string penalty_kind_name(PenaltyKind kind) {
  switch (kind) {
    case PenaltyKind::L1: return "l1";
    case PenaltyKind::LogSum: return "log-sum";
    case PenaltyKind::LHalf: return "l-half";
    case PenaltyKind::Mcp: return "mcp";
  }
  throw std::invalid_argument("penalty_kind_name: bad enum value");
}

PenaltyKind parse_penalty_kind(const std::string& name) {
  if (name == "l1") return PenaltyKind::L1;
  if (name == "log-sum") return PenaltyKind::LogSum;
  if (name == "l-half") return PenaltyKind::LHalf;
  if (name == "mcp") return PenaltyKind::Mcp;
  throw std::invalid_argument("unknown penalty kind: " + name);
}

double default_epsilon(PenaltyKind kind) {
  switch (kind) {
    case PenaltyKind::L1: return 0.0;
    case PenaltyKind::LogSum: return 1e-1;
    case PenaltyKind::LHalf: return 1e-1;
    case PenaltyKind::Mcp: return 3.0;
  }
  throw std::invalid_argument("default_epsilon: bad enum value");
}

Penalty make_penalty(PenaltyKind kind, double gamma, double epsilon,
                     bool penalize_diagonal) {
  Penalty p{kind, gamma, epsilon, penalize_diagonal};
  validate(p);
  return p;
}

Penalty make_penalty(PenaltyKind kind, double gamma, bool penalize_diagonal) {
  return make_penalty(kind, gamma, default_epsilon(kind), penalize_diagonal);
}

void validate(const Penalty& p) {
  if (!(p.gamma > 0.0)) throw std::invalid_argument("Penalty: gamma must be > 0");
  switch (p.kind) {
    case PenaltyKind::L1:
      break;  // epsilon ignored
    case PenaltyKind::LogSum:
    case PenaltyKind::LHalf:
      if (!(p.epsilon > 0.0))
        throw std::invalid_argument("Penalty: epsilon must be > 0 for this kind");
      break;
    case PenaltyKind::Mcp:
      if (!(p.epsilon > 1.0))
        throw std::invalid_argument("Penalty: epsilon must be > 1 for MCP");
      break;
  }
}

double phi(const Penalty& p, double u) {
  if (u < 0.0) throw std::domain_error("phi: u must be >= 0");
  switch (p.kind) {
    case PenaltyKind::L1:
      return p.gamma * u;
    case PenaltyKind::LogSum:
      return p.gamma * std::log(u + p.epsilon);
    case PenaltyKind::LHalf:
      return p.gamma * std::sqrt(u + p.epsilon);
    case PenaltyKind::Mcp:
      if (u < p.gamma * p.epsilon) return p.gamma * u - u * u / (2.0 * p.epsilon);
      return p.gamma * p.gamma * p.epsilon / 2.0;
  }
  throw std::invalid_argument("phi: bad enum value");
}

double weight(const Penalty& p, double theta_abs) {
  if (theta_abs < 0.0) throw std::domain_error("weight: theta_abs must be >= 0");
  switch (p.kind) {
    case PenaltyKind::L1:
      return p.gamma;
    case PenaltyKind::LogSum:
      return p.gamma / (theta_abs + p.epsilon);
    case PenaltyKind::LHalf:
      return p.gamma / (2.0 * std::sqrt(theta_abs + p.epsilon));
    case PenaltyKind::Mcp:
      return std::max(0.0, p.gamma - theta_abs / p.epsilon);
  }
  throw std::invalid_argument("weight: bad enum value");
}

WeightField::WeightField(SymMatrix w) : w_(std::move(w)) {
  for (int i = 0; i < w_.dim(); ++i)
    for (int j = i; j < w_.dim(); ++j)
      if (!(w_(i, j) >= 0.0))
        throw std::invalid_argument("WeightField: weights must be >= 0");
}

WeightField reweight(const Penalty& p, const SymMatrix& theta) {
  SymMatrix w(theta.dim());
  for (int i = 0; i < theta.dim(); ++i) {
    for (int j = i; j < theta.dim(); ++j) {
      if (i == j && !p.penalize_diagonal) continue;
      w.set(i, j, weight(p, std::abs(theta(i, j))));
    }
  }
  return WeightField(std::move(w));
}

double penalty_value(const Penalty& p, const SymMatrix& theta) {
  double s = 0.0;
  for (int i = 0; i < theta.dim(); ++i) {
    for (int j = 0; j < theta.dim(); ++j) {
      if (i == j && !p.penalize_diagonal) continue;
      s += phi(p, std::abs(theta(i, j)));
    }
  }
  return s;
}

double majorant_value(const WeightField& w, const SymMatrix& theta) {
  if (w.dim() != theta.dim())
    throw std::invalid_argument("majorant_value: dimension mismatch");
  const double *pw = w.matrix().data(), *pt = theta.data();
  const size_t n = static_cast<size_t>(theta.dim()) * theta.dim();
  double s = 0.0;
  for (size_t i = 0; i < n; ++i) s += pw[i] * std::abs(pt[i]);
  return s;
}

SymMatrix soft_threshold(const WeightField& w, const SymMatrix& x, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("soft_threshold: step must be > 0");
  if (w.dim() != x.dim())
    throw std::invalid_argument("soft_threshold: dimension mismatch");
  SymMatrix r(x.dim());
  for (int i = 0; i < x.dim(); ++i) {
    for (int j = i; j < x.dim(); ++j) {
      const double v = x(i, j);
      const double t = step * w(i, j);
      double out = 0.0;
      if (v > t) out = v - t;
      else if (v < -t) out = v + t;
      r.set(i, j, out);
    }
  }
  return r;
}

}  // namespace glasso
