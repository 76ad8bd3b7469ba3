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

#include "subsum/criterion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "subsum/errors.hpp"

namespace subsum {
namespace {

constexpr double kSymmetryTol = 1e-12;
constexpr double kLooseBoundTol = 1e-9;
// Rounding allowance of the arccos sum; three angles of exactly π/3 must not
// pass the strict comparison with π.
constexpr double kAngleSumTol = 1e-13;

std::string entry_name(Index i, Index j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

bool entries_in_unit_interval(const Matrix& m) {
  return m.minCoeff() >= 0.0 && m.maxCoeff() <= 1.0;
}

}  // namespace

EMatrix EMatrix::from_entries(const Matrix& entries) {
  if (entries.rows() < 1 || entries.rows() != entries.cols())
    throw InvalidEMatrix("E must be a non-empty square matrix");
  if (!entries.allFinite())
    throw InvalidEMatrix("E contains non-finite entries");
  const Index n = entries.rows();
  Matrix e = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    if (std::abs(entries(i, i)) > kSymmetryTol)
      throw InvalidEMatrix("diagonal entry " + entry_name(i, i) +
                           " is not zero");
    for (Index j = i + 1; j < n; ++j) {
      const double a = entries(i, j);
      const double b = entries(j, i);
      if (std::abs(a - b) > kSymmetryTol)
        throw InvalidEMatrix("E is not symmetric at " + entry_name(i, j));
      if (a < 0.0 || b < 0.0)
        throw InvalidEMatrix("negative entry at " + entry_name(i, j));
      e(i, j) = e(j, i) = a == b ? a : 0.5 * (a + b);
    }
  }
  return EMatrix(std::move(e));
}

EMatrix EMatrix::from_bounds(const SubspaceFamily& f, const Matrix& bounds) {
  EMatrix loose = from_entries(bounds);
  if (static_cast<std::size_t>(loose.size()) != f.size())
    throw DimensionMismatch("bound matrix is " + std::to_string(loose.size()) +
                            "x" + std::to_string(loose.size()) +
                            " but the family has " + std::to_string(f.size()) +
                            " members");
  const EMatrix measured = build_e_matrix(f);
  for (Index i = 0; i < loose.size(); ++i)
    for (Index j = i + 1; j < loose.size(); ++j)
      if (loose(i, j) < measured(i, j) - kLooseBoundTol)
        throw InvalidEMatrix("bound " + entry_name(i, j) + " = " +
                             std::to_string(loose(i, j)) +
                             " is below the measured restricted norm " +
                             std::to_string(measured(i, j)));
  return loose;
}

EMatrix EMatrix::scaled(double c) const {
  if (!(c >= 0.0)) throw InvalidArgument("scale factor must be nonnegative");
  return EMatrix(entries_ * c);
}

EMatrix build_e_matrix(const SubspaceFamily& f) {
  const auto n = static_cast<Index>(f.size());
  Matrix e = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      e(i, j) = e(j, i) = restricted_norm(f[i], f[j]);
  return EMatrix(std::move(e));
}

Eigenpair dominant_eigenpair(const EMatrix& e) {
  const Eigen::SelfAdjointEigenSolver<Matrix> es(e.entries());
  if (es.info() != Eigen::Success)
    throw NumericalError("symmetric eigensolver did not converge");
  const Index last = e.size() - 1;  // eigenvalues are ascending
  // A hollow matrix has trace 0, so its largest eigenvalue is nonnegative.
  return {std::max(es.eigenvalues()(last), 0.0), es.eigenvectors().col(last)};
}

double spectral_radius(const EMatrix& e) { return dominant_eigenpair(e).value; }

std::vector<double> leading_minors(const EMatrix& e) {
  const Index n = e.size();
  const Matrix m = Matrix::Identity(n, n) - e.entries();
  std::vector<double> minors;
  minors.reserve(static_cast<std::size_t>(n));
  for (Index k = 1; k <= n; ++k)
    minors.push_back(m.topLeftCorner(k, k).partialPivLu().determinant());
  return minors;
}

double three_subspace_angle_sum(const EMatrix& e) {
  if (e.size() != 3)
    throw WrongArity("angle-sum test needs exactly 3 subspaces, got " +
                     std::to_string(e.size()));
  if (!entries_in_unit_interval(e.entries()))
    throw InvalidArgument("angle-sum test needs entries in [0, 1]");
  return std::acos(e(0, 1)) + std::acos(e(1, 2)) + std::acos(e(2, 0));
}

bool three_subspace_angle_test(const EMatrix& e) {
  return three_subspace_angle_sum(e) > std::numbers::pi + kAngleSumTol;
}

CriterionReport evaluate_criterion(const EMatrix& e) {
  CriterionReport report;
  report.spectral_radius = spectral_radius(e);
  report.margin = 1.0 - report.spectral_radius;
  report.leading_minors = leading_minors(e);
  if (e.size() == 3 && entries_in_unit_interval(e.entries()))
    report.angle_sum = three_subspace_angle_sum(e);

  if (std::abs(report.spectral_radius - 1.0) <= kBoundaryBand) {
    report.verdict = Verdict::kBoundary;
    report.satisfied = false;
    return report;
  }

  const bool by_radius = report.spectral_radius < 1.0;
  const bool by_minors =
      std::all_of(report.leading_minors.begin(), report.leading_minors.end(),
                  [](double m) { return m > 0.0; });
  const Matrix shifted = Matrix::Identity(e.size(), e.size()) - e.entries();
  const bool by_cholesky = shifted.llt().info() == Eigen::Success;

  if (by_minors != by_radius || by_cholesky != by_radius)
    throw InconsistencyError(
        "r(E) = " + std::to_string(report.spectral_radius) +
        " disagrees with the leading-minor or Cholesky test of I - E");
  if (report.angle_sum &&
      (*report.angle_sum > std::numbers::pi + kAngleSumTol) != by_radius)
    throw InconsistencyError("r(E) = " +
                             std::to_string(report.spectral_radius) +
                             " disagrees with the angle-sum test");

  report.satisfied = by_radius;
  report.verdict = by_radius ? Verdict::kSatisfied : Verdict::kNotSatisfied;
  return report;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kSatisfied:
      return "satisfied";
    case Verdict::kNotSatisfied:
      return "not_satisfied";
    case Verdict::kBoundary:
      return "boundary";
  }
  return "unknown";
}

}  // namespace subsum
