// src/matrix.cpp

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

#include "glasso/matrix.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace glasso {

SymMatrix::SymMatrix(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("SymMatrix: dim must be >= 1");
  a_.assign(static_cast<size_t>(dim) * dim, 0.0);
}

SymMatrix SymMatrix::identity(int dim) {
  SymMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.set(i, i, 1.0);
  return m;
}

SymMatrix SymMatrix::diagonal(const std::vector<double>& diag) {
  SymMatrix m(static_cast<int>(diag.size()));
  for (int i = 0; i < m.dim(); ++i) m.set(i, i, diag[i]);
  return m;
}

SymMatrix SymMatrix::from_rows(int dim, std::vector<double> entries) {
  if (dim < 1) throw std::invalid_argument("SymMatrix: dim must be >= 1");
  if (entries.size() != static_cast<size_t>(dim) * dim)
    throw std::invalid_argument("SymMatrix: entry count does not match dim");
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      if (entries[static_cast<size_t>(i) * dim + j] != entries[static_cast<size_t>(j) * dim + i])
        throw std::invalid_argument("SymMatrix: input is not exactly symmetric");
  SymMatrix m(dim);
  m.a_ = std::move(entries);
  return m;
}

double CholeskyFactor::min_pivot() const {
  double p = std::numeric_limits<double>::infinity();
  for (int i = 0; i < dim; ++i) p = std::min(p, at(i, i));
  return p;
}

double CholeskyFactor::max_pivot() const {
  double p = 0.0;
  for (int i = 0; i < dim; ++i) p = std::max(p, at(i, i));
  return p;
}

std::optional<CholeskyFactor> cholesky(const SymMatrix& m) {
  const int d = m.dim();
  CholeskyFactor f;
  f.dim = d;
  f.lower.assign(static_cast<size_t>(d) * d, 0.0);
  double* L = f.lower.data();
  for (int j = 0; j < d; ++j) {
    const double* Lj = L + static_cast<size_t>(j) * d;
    double s = m(j, j);
    for (int k = 0; k < j; ++k) s -= Lj[k] * Lj[k];
    if (!(s > 0.0) || !std::isfinite(s)) return std::nullopt;
    const double pivot = std::sqrt(s);
    L[static_cast<size_t>(j) * d + j] = pivot;
    const double inv_pivot = 1.0 / pivot;
    for (int i = j + 1; i < d; ++i) {
      const double* Li = L + static_cast<size_t>(i) * d;
      double t = m(i, j);
      for (int k = 0; k < j; ++k) t -= Li[k] * Lj[k];
      L[static_cast<size_t>(i) * d + j] = t * inv_pivot;
    }
  }
  return f;
}

double log_det(const CholeskyFactor& f) {
  double s = 0.0;
  for (int i = 0; i < f.dim; ++i) s += std::log(f.at(i, i));
  return 2.0 * s;
}

SymMatrix spd_inverse(const CholeskyFactor& f) {
  const int d = f.dim;
  // Linv = L^-1 by forward substitution, then A^-1 = Linv^T Linv.
  std::vector<double> Linv(static_cast<size_t>(d) * d, 0.0);
  for (int j = 0; j < d; ++j) {
    Linv[static_cast<size_t>(j) * d + j] = 1.0 / f.at(j, j);
    for (int i = j + 1; i < d; ++i) {
      double s = 0.0;
      for (int k = j; k < i; ++k) s += f.at(i, k) * Linv[static_cast<size_t>(k) * d + j];
      Linv[static_cast<size_t>(i) * d + j] = -s / f.at(i, i);
    }
  }
  SymMatrix inv(d);
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      double s = 0.0;
      for (int k = j; k < d; ++k)
        s += Linv[static_cast<size_t>(k) * d + i] * Linv[static_cast<size_t>(k) * d + j];
      inv.set(i, j, s);
    }
  }
  return inv;
}

void solve_transposed_lower(const CholeskyFactor& f, std::vector<double>& z) {
  const int d = f.dim;
  for (int i = d - 1; i >= 0; --i) {
    double s = z[i];
    for (int k = i + 1; k < d; ++k) s -= f.at(k, i) * z[k];
    z[i] = s / f.at(i, i);
  }
}

double fro_norm(const SymMatrix& m) {
  const double* a = m.data();
  const size_t n = static_cast<size_t>(m.dim()) * m.dim();
  double s = 0.0;
  for (size_t i = 0; i < n; ++i) s += a[i] * a[i];
  return std::sqrt(s);
}

double fro_dist(const SymMatrix& a, const SymMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("fro_dist: dimension mismatch");
  const size_t n = static_cast<size_t>(a.dim()) * a.dim();
  const double *pa = a.data(), *pb = b.data();
  double s = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double d = pa[i] - pb[i];
    s += d * d;
  }
  return std::sqrt(s);
}

double dot(const SymMatrix& a, const SymMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dot: dimension mismatch");
  const size_t n = static_cast<size_t>(a.dim()) * a.dim();
  const double *pa = a.data(), *pb = b.data();
  double s = 0.0;
  for (size_t i = 0; i < n; ++i) s += pa[i] * pb[i];
  return s;
}

SymMatrix add(const SymMatrix& a, const SymMatrix& b) { return axpy(a, 1.0, b); }
SymMatrix sub(const SymMatrix& a, const SymMatrix& b) { return axpy(a, -1.0, b); }

SymMatrix scaled(const SymMatrix& a, double c) {
  SymMatrix r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i; j < a.dim(); ++j) r.set(i, j, c * a(i, j));
  return r;
}

SymMatrix axpy(const SymMatrix& a, double c, const SymMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("axpy: dimension mismatch");
  SymMatrix r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i; j < a.dim(); ++j) r.set(i, j, a(i, j) + c * b(i, j));
  return r;
}

SymMatrix finite_diff_grad(const std::function<double(const SymMatrix&)>& fn,
                           const SymMatrix& at, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("finite_diff_grad: h must be > 0");
  const int d = at.dim();
  SymMatrix g(d);
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      SymMatrix plus = at, minus = at;
      plus.set(i, j, at(i, j) + h);    // set() moves the (j,i) mirror too
      minus.set(i, j, at(i, j) - h);
      const double fp = fn(plus);
      const double fm = fn(minus);
      if (!std::isfinite(fp) || !std::isfinite(fm))
        throw NonFiniteValueError("finite_diff_grad: non-finite value at probe point");
      g.set(i, j, (fp - fm) / (2.0 * h));
    }
  }
  return g;
}

void write_matrix(std::ostream& os, const SymMatrix& m) {
  os << m.dim() << "\n";
  char buf[64];
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", m(i, j));
      os << (j ? " " : "") << buf;
    }
    os << "\n";
  }
}

void write_matrix_file(const std::string& path, const SymMatrix& m) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  write_matrix(os, m);
  if (!os) throw std::runtime_error("write failed: " + path);
}

SymMatrix read_matrix(std::istream& is) {
  int d = 0;
  if (!(is >> d) || d < 1) throw std::runtime_error("matrix read: bad dimension line");
  std::vector<double> entries(static_cast<size_t>(d) * d);
  for (size_t i = 0; i < entries.size(); ++i)
    if (!(is >> entries[i])) throw std::runtime_error("matrix read: truncated data");
  try {
    return SymMatrix::from_rows(d, std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("matrix read: ") + e.what());
  }
}

SymMatrix read_matrix_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open for reading: " + path);
  return read_matrix(is);
}

}  // namespace glasso
