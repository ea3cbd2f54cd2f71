// include/glasso/matrix.hpp

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

#ifndef GLASSO_MATRIX_HPP
#define GLASSO_MATRIX_HPP

#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace glasso {

// Thrown by finite_diff_grad when the probed function returns a non-finite
// value (e.g. a probe point left the domain).
struct NonFiniteValueError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dense symmetric d x d matrix, both triangles materialized (row-major).
// Symmetry is exact: construction validates it and set() writes the pair.
class SymMatrix {
 public:
  SymMatrix() = default;  // dim 0, placeholder only
  explicit SymMatrix(int dim);
  static SymMatrix identity(int dim);
  static SymMatrix diagonal(const std::vector<double>& diag);
  // Validates entries[i*dim+j] == entries[j*dim+i] exactly; throws otherwise.
  static SymMatrix from_rows(int dim, std::vector<double> entries);

  int dim() const { return dim_; }
  double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }
  void set(int i, int j, double v) {
    a_[static_cast<size_t>(i) * dim_ + j] = v;
    a_[static_cast<size_t>(j) * dim_ + i] = v;
  }
  const double* data() const { return a_.data(); }
  const double* row(int i) const { return a_.data() + static_cast<size_t>(i) * dim_; }

 private:
  int dim_ = 0;
  std::vector<double> a_;
};

// Lower-triangular Cholesky factor L with L * L^T equal to the source matrix.
// All diagonal entries (pivots) are strictly positive.
struct CholeskyFactor {
  int dim = 0;
  std::vector<double> lower;  // row-major, entries above the diagonal are 0

  double at(int i, int j) const { return lower[static_cast<size_t>(i) * dim + j]; }
  double min_pivot() const;
  double max_pivot() const;
};

// Returns nullopt iff a pivot is <= 0 or non-finite: the matrix is not
// positive definite. This is the sole SPD test in the project; callers use
// the nullopt as a line-search backtracking signal, never as an error.
std::optional<CholeskyFactor> cholesky(const SymMatrix& m);

// 2 * sum_i ln L_ii.
double log_det(const CholeskyFactor& f);

// Symmetric inverse of the factored matrix.
SymMatrix spd_inverse(const CholeskyFactor& f);

// Solves L^T x = z in place (one back substitution).
void solve_transposed_lower(const CholeskyFactor& f, std::vector<double>& z);

double fro_norm(const SymMatrix& m);
double fro_dist(const SymMatrix& a, const SymMatrix& b);

// Frobenius inner product sum_ij a_ij b_ij.
double dot(const SymMatrix& a, const SymMatrix& b);
SymMatrix add(const SymMatrix& a, const SymMatrix& b);
SymMatrix sub(const SymMatrix& a, const SymMatrix& b);
SymMatrix scaled(const SymMatrix& a, double c);
// a + c * b.
SymMatrix axpy(const SymMatrix& a, double c, const SymMatrix& b);

// Central differences along symmetric perturbation directions: off-diagonal
// probes move (i,j) and (j,i) together, so off-diagonal sensitivities come
// out doubled relative to the entrywise gradient. Throws NonFiniteValueError
// if fn is non-finite at a probe point.
SymMatrix finite_diff_grad(const std::function<double(const SymMatrix&)>& fn,
                           const SymMatrix& at, double h);

// Text interchange format: first line "d", then d rows of d space-separated
// values written with 17 significant digits. The reader demands exact
// symmetry (tolerance 0) and throws std::runtime_error on any defect.
void write_matrix(std::ostream& os, const SymMatrix& m);
void write_matrix_file(const std::string& path, const SymMatrix& m);
SymMatrix read_matrix(std::istream& is);
SymMatrix read_matrix_file(const std::string& path);

}  // namespace glasso

#endif  // GLASSO_MATRIX_HPP
