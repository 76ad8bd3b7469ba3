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

#include "subsum/projection_iteration.hpp"

#include <cmath>
#include <string>

#include "subsum/errors.hpp"

namespace subsum {
namespace {

Matrix symmetrized(const Matrix& m) { return 0.5 * (m + m.transpose()); }

}  // namespace

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return Eigen::BDCSVD<Matrix>(m).singularValues()(0);
}

Matrix sum_of_projections(const SubspaceFamily& f) {
  const Index d = f.ambient_dim();
  Matrix a = Matrix::Zero(d, d);
  for (const auto& m : f.members()) a.noalias() += m.basis() * m.basis().transpose();
  return symmetrized(a);
}

ProjectionIteration::ProjectionIteration(const SubspaceFamily& f) {
  const Index d = f.ambient_dim();
  factor_ = Matrix::Identity(d, d) - sum_of_projections(f);
  power_ = Matrix::Identity(d, d);
}

int ProjectionIteration::step() {
  power_ = symmetrized(power_ * factor_);
  return ++count_;
}

Matrix ProjectionIteration::iterate() const {
  return Matrix::Identity(power_.rows(), power_.cols()) - power_;
}

Matrix iterate_projection(const SubspaceFamily& f, int n) {
  if (n < 1) throw InvalidArgument("iteration count must be at least 1");
  ProjectionIteration it(f);
  while (it.count() < n) it.step();
  return it.iterate();
}

Subspace sum_range(const SubspaceFamily& f) {
  return orthonormalize(sum_operator(f));
}

Matrix oracle_projection(const SubspaceFamily& f) {
  const Subspace range = sum_range(f);
  if (range.dim() == range.ambient_dim())
    return Matrix::Identity(range.ambient_dim(), range.ambient_dim());
  return projection_matrix(range);
}

ConvergenceReport convergence_report(const SubspaceFamily& f, int n_max) {
  return convergence_report(f, n_max, evaluate_criterion(build_e_matrix(f)));
}

ConvergenceReport convergence_report(const SubspaceFamily& f, int n_max,
                                     const CriterionReport& criterion) {
  if (n_max < 1) throw InvalidArgument("n_max must be at least 1");
  if (!criterion.satisfied)
    throw CriterionNotSatisfied(
        "r(E) = " + std::to_string(criterion.spectral_radius) +
        " is not below 1; the convergence bound is not certified");

  ConvergenceReport report;
  report.r = criterion.spectral_radius;

  const Subspace range = sum_range(f);
  const Index d = f.ambient_dim();
  const Matrix identity = Matrix::Identity(d, d);
  const Matrix p = range.dim() == d ? identity : projection_matrix(range);
  // I − (I − A)^N − P is evaluated as (I − P) − (I − A)^N so that the error
  // keeps full relative precision once it falls below machine epsilon.
  const Matrix complement = identity - p;

  report.steps.reserve(static_cast<std::size_t>(n_max));
  ProjectionIteration it(f);
  while (it.count() < n_max) {
    const int n = it.step();
    report.steps.push_back({n, spectral_norm(complement - it.residual_power()),
                            std::pow(report.r, n)});
  }

  const Vector sv = sum_operator_singular_values(f);
  report.frame_upper = sv(0) * sv(0);
  report.frame_lower = sv(sv.size() - 1) * sv(sv.size() - 1);

  const Matrix& q = range.basis();
  const Matrix a = sum_of_projections(f);
  report.a_restricted_deviation =
      spectral_norm(q.transpose() * (a - identity) * q);
  return report;
}

IndependenceCheck linear_independence_check(const SubspaceFamily& f) {
  const Vector sv = sum_operator_singular_values(f);
  IndependenceCheck check;
  check.sigma_min = sv(sv.size() - 1);
  check.independent = check.sigma_min > kCertifiedTol;

  const CriterionReport criterion = evaluate_criterion(build_e_matrix(f));
  if (criterion.satisfied) {
    const double floor = std::sqrt(1.0 - criterion.spectral_radius);
    if (check.sigma_min < floor - kCertifiedTol)
      throw NumericalError("sigma_min(S) = " + std::to_string(check.sigma_min) +
                           " is below sqrt(1 - r) = " + std::to_string(floor));
  }
  return check;
}

}  // namespace subsum
