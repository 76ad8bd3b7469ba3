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

#include <string>
#include <vector>

#include "subsum/criterion.hpp"
#include "subsum/subspace.hpp"

namespace subsum {

/// α_k = 1 − 2^{−k} for k = 1..blocks.
std::vector<double> geometric_alpha_schedule(int blocks);

/// Input of the boundary construction: a matrix E with r(E) = 1 and a
/// strictly increasing schedule 0 < α₁ < … < α_K < 1.
class CounterexampleSpec {
 public:
  /// Inputs with r(E) > 1 are rescaled to E / r(E); `rescaled()` reports it.
  /// Throws NotBoundary when r(E) < 1 beyond the boundary band and
  /// InvalidArgument for a malformed schedule.
  CounterexampleSpec(const EMatrix& e, std::vector<double> alphas);

  const EMatrix& e() const { return e_; }
  const std::vector<double>& alphas() const { return alphas_; }
  int blocks() const { return static_cast<int>(alphas_.size()); }
  bool rescaled() const { return rescaled_; }
  double input_radius() const { return input_radius_; }

 private:
  EMatrix e_;
  std::vector<double> alphas_;
  bool rescaled_ = false;
  double input_radius_ = 0.0;
};

/// Unit c with E·c = c, first nonzero coordinate positive. Throws NotBoundary
/// if |r(E) − 1| > 1e-9.
Vector principal_eigenvector(const EMatrix& e);

/// n×n matrix V with unit columns and VᵀV = I − αE, taken as the symmetric
/// square root of I − αE. Throws NotPositiveDefinite when I − αE is not
/// positive definite.
Matrix gram_vectors(const EMatrix& e, double alpha);

struct CounterexampleFamily {
  SubspaceFamily family;
  /// block_vectors[k] holds v^(1)(α_k), …, v^(n)(α_k) as columns.
  std::vector<Matrix> block_vectors;
  Vector c;
};

/// Members X_i = ⊕_k span{v^(i)(α_k)} in R^{nK}; block k occupies
/// coordinates [k·n, (k+1)·n).
CounterexampleFamily build_counterexample(const CounterexampleSpec& spec);

struct PairNorm {
  int i = 0;
  int j = 0;
  double measured = 0.0;
  double target = 0.0;  // α_K · e_ij
};

struct BlockCheck {
  double alpha = 0.0;
  double gram_residual = 0.0;       // ‖V_kᵀV_k − (I − α_k E)‖_max
  double combination_norm_sq = 0.0; // ‖Σ c_i v^(i)(α_k)‖²
};

struct VerificationRecord {
  std::vector<PairNorm> pair_norms;
  std::vector<BlockCheck> blocks;
  double sigma_min = 0.0;
  double sigma_min_sq = 0.0;
  double degeneration_bound = 0.0;  // 1 − α_K
  bool independent = false;
};

/// Measures the construction and throws VerificationFailed naming the first
/// violated check: restricted norms equal α_K·e_ij (1e-9), per-block Gram
/// residual and ‖Σ c_i v^(i)‖² = 1 − α_k (1e-10), σ_min(S)² ≤ 1 − α_K + 1e-9,
/// and σ_min(S) > 0.
VerificationRecord verify_counterexample(const CounterexampleFamily& cf,
                                         const CounterexampleSpec& spec);

}  // namespace subsum
