// Copyright 2026 The subsum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <vector>

#include "subsum/subspace.hpp"

namespace subsum {

/// Half-width of the band around r(E) = 1 where the exact-arithmetic
/// equivalences are not required to hold numerically.
inline constexpr double kBoundaryBand = 1e-9;

/// Symmetric, hollow, entrywise nonnegative n×n matrix of pairwise bounds
/// ε_ij ≥ ‖P_i|_{X_j}‖.
class EMatrix {
 public:
  /// Validates symmetry (|e_ij − e_ji| ≤ 1e-12), hollowness (|e_ii| ≤ 1e-12)
  /// and nonnegativity; the stored matrix is exactly symmetric and hollow.
  /// Throws InvalidEMatrix.
  static EMatrix from_entries(const Matrix& entries);

  /// Accepts user-supplied looser bounds for a family. Each off-diagonal
  /// bound must be at least the measured restricted norm minus 1e-9.
  static EMatrix from_bounds(const SubspaceFamily& f, const Matrix& bounds);

  Index size() const { return entries_.rows(); }
  const Matrix& entries() const { return entries_; }
  double operator()(Index i, Index j) const { return entries_(i, j); }

  /// c·E for c ≥ 0.
  EMatrix scaled(double c) const;

 private:
  explicit EMatrix(Matrix entries) : entries_(std::move(entries)) {}

  Matrix entries_;

  friend EMatrix build_e_matrix(const SubspaceFamily& f);
};

/// E with e_ij = restricted_norm(X_i, X_j) for i ≠ j.
EMatrix build_e_matrix(const SubspaceFamily& f);

struct Eigenpair {
  double value = 0.0;
  Vector vector;
};

/// Largest eigenvalue of E with a unit eigenvector from a symmetric
/// eigensolver. Since E is symmetric and nonnegative this value is r(E).
Eigenpair dominant_eigenpair(const EMatrix& e);

/// r(E).
double spectral_radius(const EMatrix& e);

/// det of the top-left m×m block of I − E for m = 1..n.
std::vector<double> leading_minors(const EMatrix& e);

/// arccos(e₁₂) + arccos(e₂₃) + arccos(e₃₁). Throws WrongArity if n ≠ 3 and
/// InvalidArgument if an entry lies outside [0, 1].
double three_subspace_angle_sum(const EMatrix& e);

/// three_subspace_angle_sum(e) > π.
bool three_subspace_angle_test(const EMatrix& e);

enum class Verdict { kSatisfied, kNotSatisfied, kBoundary };

struct CriterionReport {
  double spectral_radius = 0.0;
  bool satisfied = false;
  Verdict verdict = Verdict::kNotSatisfied;
  std::vector<double> leading_minors;
  std::optional<double> angle_sum;  // only for n = 3
  double margin = 0.0;              // 1 − spectral_radius
};

/// Evaluates r(E) < 1 together with the leading-minor and (n = 3) angle-sum
/// formulations. Inside the boundary band the verdict is kBoundary and
/// `satisfied` is false. Outside it the formulations must agree, otherwise
/// InconsistencyError is thrown.
CriterionReport evaluate_criterion(const EMatrix& e);

const char* to_string(Verdict v);

}  // namespace subsum
