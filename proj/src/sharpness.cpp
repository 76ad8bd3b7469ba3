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

#include "subsum/sharpness.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "subsum/errors.hpp"

namespace subsum {
namespace {

constexpr double kGramTol = 1e-10;
constexpr double kNormTol = 1e-9;
constexpr double kSignTol = 1e-12;

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw InvalidArgument("alpha must lie in (0, 1), got " +
                          std::to_string(alpha));
}

std::string pair_name(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

std::vector<double> geometric_alpha_schedule(int blocks) {
  if (blocks < 1) throw InvalidArgument("block count must be at least 1");
  std::vector<double> alphas;
  alphas.reserve(static_cast<std::size_t>(blocks));
  for (int k = 1; k <= blocks; ++k) alphas.push_back(1.0 - std::ldexp(1.0, -k));
  return alphas;
}

CounterexampleSpec::CounterexampleSpec(const EMatrix& e,
                                       std::vector<double> alphas)
    : e_(e), alphas_(std::move(alphas)) {
  if (alphas_.empty())
    throw InvalidArgument("alpha schedule must have at least one entry");
  for (std::size_t k = 0; k < alphas_.size(); ++k) {
    check_alpha(alphas_[k]);
    if (k > 0 && !(alphas_[k] > alphas_[k - 1]))
      throw InvalidArgument("alpha schedule must be strictly increasing");
  }
  input_radius_ = spectral_radius(e_);
  if (input_radius_ > 1.0 + kBoundaryBand) {
    e_ = e_.scaled(1.0 / input_radius_);
    rescaled_ = true;
  } else if (input_radius_ < 1.0 - kBoundaryBand) {
    throw NotBoundary("r(E) = " + std::to_string(input_radius_) +
                      " is below 1; the construction needs r(E) = 1");
  }
}

Vector principal_eigenvector(const EMatrix& e) {
  const Eigenpair pair = dominant_eigenpair(e);
  if (std::abs(pair.value - 1.0) > kBoundaryBand)
    throw NotBoundary("r(E) = " + std::to_string(pair.value) +
                      " differs from 1");
  Vector c = pair.vector.normalized();
  for (Index i = 0; i < c.size(); ++i) {
    if (std::abs(c(i)) > kSignTol) {
      if (c(i) < 0.0) c = -c;
      break;
    }
  }
  return c;
}

Matrix gram_vectors(const EMatrix& e, double alpha) {
  check_alpha(alpha);
  const Index n = e.size();
  const Matrix gram = Matrix::Identity(n, n) - alpha * e.entries();
  const Eigen::SelfAdjointEigenSolver<Matrix> es(gram);
  if (es.info() != Eigen::Success)
    throw NumericalError("symmetric eigensolver did not converge");
  if (!(es.eigenvalues()(0) > 0.0) || gram.llt().info() != Eigen::Success)
    throw NotPositiveDefinite(
        "I - alpha*E is not positive definite (least eigenvalue " +
        std::to_string(es.eigenvalues()(0)) + ")");
  const Matrix& u = es.eigenvectors();
  Matrix v = u * es.eigenvalues().cwiseSqrt().asDiagonal() * u.transpose();
  v.colwise().normalize();
  return v;
}

CounterexampleFamily build_counterexample(const CounterexampleSpec& spec) {
  const Index n = spec.e().size();
  const Index blocks = spec.blocks();
  const Index d = n * blocks;

  std::vector<Matrix> block_vectors;
  block_vectors.reserve(static_cast<std::size_t>(blocks));
  for (double alpha : spec.alphas())
    block_vectors.push_back(gram_vectors(spec.e(), alpha));

  std::vector<Subspace> members;
  members.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    Matrix basis = Matrix::Zero(d, blocks);
    for (Index k = 0; k < blocks; ++k)
      basis.block(k * n, k, n, 1) = block_vectors[static_cast<std::size_t>(k)].col(i);
    members.push_back(Subspace::from_orthonormal(std::move(basis)));
  }

  return {SubspaceFamily(std::move(members)), std::move(block_vectors),
          principal_eigenvector(spec.e())};
}

VerificationRecord verify_counterexample(const CounterexampleFamily& cf,
                                         const CounterexampleSpec& spec) {
  const EMatrix& e = spec.e();
  const int n = static_cast<int>(e.size());
  if (cf.family.size() != static_cast<std::size_t>(n) ||
      cf.block_vectors.size() != spec.alphas().size())
    throw VerificationFailed("family shape does not match the counterexample input");

  VerificationRecord record;
  const double alpha_max = spec.alphas().back();

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      PairNorm p{i, j, restricted_norm(cf.family[i], cf.family[j]),
                 alpha_max * e(i, j)};
      record.pair_norms.push_back(p);
      if (std::abs(p.measured - p.target) > kNormTol)
        throw VerificationFailed("restricted norm " + pair_name(i, j) + " = " +
                                 std::to_string(p.measured) + ", expected " +
                                 std::to_string(p.target));
    }
  }

  const Matrix identity = Matrix::Identity(n, n);
  for (std::size_t k = 0; k < spec.alphas().size(); ++k) {
    const double alpha = spec.alphas()[k];
    const Matrix& v = cf.block_vectors[k];
    BlockCheck b;
    b.alpha = alpha;
    b.gram_residual = (v.transpose() * v - (identity - alpha * e.entries()))
                          .cwiseAbs()
                          .maxCoeff();
    b.combination_norm_sq = (v * cf.c).squaredNorm();
    record.blocks.push_back(b);
    if (b.gram_residual > kGramTol)
      throw VerificationFailed("Gram residual of block " + std::to_string(k) +
                               " is " + std::to_string(b.gram_residual));
    if (std::abs(b.combination_norm_sq - (1.0 - alpha)) > kGramTol)
      throw VerificationFailed(
          "block " + std::to_string(k) + ": |sum c_i v_i|^2 = " +
          std::to_string(b.combination_norm_sq) + ", expected 1 - alpha = " +
          std::to_string(1.0 - alpha));
  }

  const Vector sv = sum_operator_singular_values(cf.family);
  record.sigma_min = sv(sv.size() - 1);
  record.sigma_min_sq = record.sigma_min * record.sigma_min;
  record.degeneration_bound = 1.0 - alpha_max;
  record.independent = record.sigma_min > 0.0;
  if (record.sigma_min_sq > record.degeneration_bound + kNormTol)
    throw VerificationFailed("sigma_min(S)^2 = " +
                             std::to_string(record.sigma_min_sq) +
                             " exceeds 1 - alpha_K = " +
                             std::to_string(record.degeneration_bound));
  if (!record.independent)
    throw VerificationFailed("sum operator is singular");
  return record;
}

}  // namespace subsum
