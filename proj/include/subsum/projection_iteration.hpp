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

#include <vector>

#include "subsum/criterion.hpp"
#include "subsum/subspace.hpp"

namespace subsum {

/// Slack applied to every certified inequality.
inline constexpr double kCertifiedTol = 1e-9;

/// Largest singular value.
double spectral_norm(const Matrix& m);

/// A = P₁ + … + Pₙ.
Matrix sum_of_projections(const SubspaceFamily& f);

/// Produces the iterates I − (I − A)^N, N = 1, 2, …, by successive
/// multiplication with the fixed factor I − A.
class ProjectionIteration {
 public:
  explicit ProjectionIteration(const SubspaceFamily& f);

  /// Advances to the next N and returns it.
  int step();

  int count() const { return count_; }
  /// (I − A)^N for the current N.
  const Matrix& residual_power() const { return power_; }
  /// I − (I − A)^N for the current N.
  Matrix iterate() const;

 private:
  Matrix factor_;
  Matrix power_;
  int count_ = 0;
};

/// I − (I − A)^N. Throws InvalidArgument if n < 1.
Matrix iterate_projection(const SubspaceFamily& f, int n);

/// Orthonormal basis of X₁ + … + Xₙ, from orthonormalizing the concatenated
/// member bases.
Subspace sum_range(const SubspaceFamily& f);

/// Orthogonal projection onto X₁ + … + Xₙ, computed independently of the
/// iteration. Exactly the identity when the sum is the whole space.
Matrix oracle_projection(const SubspaceFamily& f);

struct ConvergenceStep {
  int n = 0;
  double error = 0.0;  // ‖I − (I − A)^N − P‖₂
  double bound = 0.0;  // r^N
};

struct ConvergenceReport {
  double r = 0.0;
  std::vector<ConvergenceStep> steps;
  double frame_lower = 0.0;  // min squared singular value of S
  double frame_upper = 0.0;  // max squared singular value of S
  double a_restricted_deviation = 0.0;  // ‖A′ − I‖ on X₁ + … + Xₙ
};

/// Runs the iteration for N = 1..n_max against the oracle projection and
/// records the frame bounds of S and ‖A′ − I‖. Throws CriterionNotSatisfied
/// unless the measured E-matrix satisfies r(E) < 1 outside the boundary band.
ConvergenceReport convergence_report(const SubspaceFamily& f, int n_max);

/// Same as above with an already evaluated criterion for f.
ConvergenceReport convergence_report(const SubspaceFamily& f, int n_max,
                                     const CriterionReport& criterion);

struct IndependenceCheck {
  bool independent = false;
  double sigma_min = 0.0;
};

/// σ_min(S) > 1e-9 as a numerical proxy for linear independence of the
/// members. When the criterion holds, σ_min ≥ √(1 − r) − 1e-9 is asserted
/// (NumericalError otherwise).
IndependenceCheck linear_independence_check(const SubspaceFamily& f);

}  // namespace subsum
