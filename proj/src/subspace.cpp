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

#include "subsum/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "subsum/errors.hpp"

namespace subsum {
namespace {

// Columns with Euclidean norm at or below this are considered zero vectors.
constexpr double kZeroColumnTol = 1e-14;

// Largest excess over 1 that restricted_norm silently clamps.
constexpr double kNormExcessTol = 1e-9;

void canonicalize_signs(Matrix& q) {
  for (Index j = 0; j < q.cols(); ++j) {
    Index imax = 0;
    q.col(j).cwiseAbs().maxCoeff(&imax);
    if (q(imax, j) < 0.0) q.col(j) = -q.col(j);
  }
}

}  // namespace

Subspace Subspace::from_orthonormal(Matrix basis) {
  if (basis.cols() < 1 || basis.rows() < 1)
    throw InvalidArgument("subspace basis must have at least one column");
  if (basis.cols() > basis.rows())
    throw InvalidArgument("subspace basis has more columns (" +
                          std::to_string(basis.cols()) + ") than rows (" +
                          std::to_string(basis.rows()) + ")");
  if (!basis.allFinite())
    throw InvalidArgument("subspace basis contains non-finite entries");
  const Matrix gram = basis.transpose() * basis;
  const double drift =
      (gram - Matrix::Identity(basis.cols(), basis.cols())).cwiseAbs().maxCoeff();
  if (drift > kOrthonormalityTol)
    throw InvalidArgument("basis columns are not orthonormal (drift " +
                          std::to_string(drift) + ")");
  return Subspace(std::move(basis));
}

SubspaceFamily::SubspaceFamily(std::vector<Subspace> members)
    : members_(std::move(members)) {
  if (members_.empty())
    throw InvalidArgument("a subspace family needs at least one member");
  const Index d = members_.front().ambient_dim();
  for (std::size_t i = 1; i < members_.size(); ++i) {
    if (members_[i].ambient_dim() != d)
      throw DimensionMismatch("member " + std::to_string(i) +
                              " has ambient dimension " +
                              std::to_string(members_[i].ambient_dim()) +
                              ", expected " + std::to_string(d));
  }
}

Index SubspaceFamily::total_dim() const {
  Index k = 0;
  for (const auto& m : members_) k += m.dim();
  return k;
}

Subspace orthonormalize(const Matrix& raw) {
  if (raw.rows() < 1 || raw.cols() < 1)
    throw InvalidArgument("orthonormalize needs a non-empty matrix");
  if (!raw.allFinite())
    throw InvalidArgument("spanning set contains non-finite entries");
  if (raw.colwise().norm().maxCoeff() <= kZeroColumnTol)
    throw AllZeroInput("every spanning vector is numerically zero");

  const Eigen::JacobiSVD<Matrix> svd(raw, Eigen::ComputeThinU);
  const Vector& sv = svd.singularValues();
  const double cutoff = kRankTol * sv(0);
  Index rank = 0;
  while (rank < sv.size() && sv(rank) > cutoff) ++rank;

  Matrix q = svd.matrixU().leftCols(rank);
  canonicalize_signs(q);
  return Subspace(std::move(q));
}

Matrix projection_matrix(const Subspace& s) {
  return s.basis() * s.basis().transpose();
}

double restricted_norm(const Subspace& m, const Subspace& n) {
  if (m.ambient_dim() != n.ambient_dim())
    throw DimensionMismatch("restricted_norm: ambient dimensions " +
                            std::to_string(m.ambient_dim()) + " and " +
                            std::to_string(n.ambient_dim()) + " differ");
  // Always decompose the wide-or-square orientation so that the value does
  // not depend on argument order beyond transposition.
  const bool swap = m.dim() > n.dim();
  const Matrix cross = swap ? Matrix(n.basis().transpose() * m.basis())
                            : Matrix(m.basis().transpose() * n.basis());
  const double value = Eigen::JacobiSVD<Matrix>(cross).singularValues()(0);
  if (!(value <= 1.0 + kNormExcessTol))
    throw NumericalError("restricted norm " + std::to_string(value) +
                         " exceeds 1");
  return std::min(value, 1.0);
}

double minimal_angle(const Subspace& m, const Subspace& n) {
  return std::acos(restricted_norm(m, n));
}

Matrix sum_operator(const SubspaceFamily& f) {
  Matrix s(f.ambient_dim(), f.total_dim());
  Index col = 0;
  for (const auto& m : f.members()) {
    s.middleCols(col, m.dim()) = m.basis();
    col += m.dim();
  }
  return s;
}

Vector sum_operator_singular_values(const SubspaceFamily& f) {
  const Matrix s = sum_operator(f);
  const Vector sv = Eigen::JacobiSVD<Matrix>(s).singularValues();
  Vector all = Vector::Zero(s.cols());
  all.head(sv.size()) = sv;
  return all;
}

}  // namespace subsum
