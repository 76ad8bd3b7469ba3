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

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace subsum {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Entrywise tolerance on basisᵀ·basis − I accepted for an orthonormal basis.
inline constexpr double kOrthonormalityTol = 1e-10;

/// Singular values below this fraction of the largest one are treated as zero.
inline constexpr double kRankTol = 1e-10;

/// A nonzero subspace of R^d, stored as a d×k matrix with orthonormal columns.
class Subspace {
 public:
  /// Wraps an already orthonormal basis. Throws InvalidArgument when the
  /// columns are not orthonormal within kOrthonormalityTol or k is 0 or > d.
  static Subspace from_orthonormal(Matrix basis);

  Index ambient_dim() const { return basis_.rows(); }
  Index dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }

 private:
  explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}

  Matrix basis_;

  friend Subspace orthonormalize(const Matrix& raw);
};

/// The tuple (X; X₁,…,Xₙ): n ≥ 1 subspaces of a common ambient space.
class SubspaceFamily {
 public:
  /// Throws InvalidArgument if empty, DimensionMismatch if ambient dims differ.
  explicit SubspaceFamily(std::vector<Subspace> members);

  Index ambient_dim() const { return members_.front().ambient_dim(); }
  std::size_t size() const { return members_.size(); }
  const Subspace& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Subspace>& members() const { return members_; }

  /// k₁ + … + kₙ, the dimension of the orthogonal direct sum X₁⊕…⊕Xₙ.
  Index total_dim() const;

 private:
  std::vector<Subspace> members_;
};

/// Orthonormal basis of the column space of `raw` via a thin SVD. Columns of
/// the result are the left singular vectors above the relative rank cutoff,
/// each signed so that its largest-magnitude entry is positive.
///
/// Throws AllZeroInput when every column of `raw` is numerically zero.
Subspace orthonormalize(const Matrix& raw);

/// basis·basisᵀ.
Matrix projection_matrix(const Subspace& s);

/// ‖P_m|_n‖ = σ_max(basis_mᵀ·basis_n), which is also the cosine of the
/// minimal angle between the two subspaces. Symmetric in its arguments.
double restricted_norm(const Subspace& m, const Subspace& n);

/// arccos(restricted_norm(m, n)), in [0, π/2].
double minimal_angle(const Subspace& m, const Subspace& n);

/// [basis₁ | basis₂ | … | basisₙ]: the operator (x₁,…,xₙ) ↦ x₁+…+xₙ on the
/// orthogonal direct sum, written in the members' orthonormal coordinates.
Matrix sum_operator(const SubspaceFamily& f);

/// All singular values of sum_operator(f), descending, padded with zeros when
/// the direct sum has larger dimension than the ambient space.
Vector sum_operator_singular_values(const SubspaceFamily& f);

}  // namespace subsum
