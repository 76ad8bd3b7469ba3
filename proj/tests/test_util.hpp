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

#include <cmath>
#include <random>
#include <vector>

#include "subsum/criterion.hpp"
#include "subsum/subspace.hpp"

namespace subsum::testing {

inline Matrix gaussian(std::mt19937_64& rng, Index rows, Index cols) {
  std::normal_distribution<double> nd;
  Matrix m(rows, cols);
  for (Index c = 0; c < cols; ++c)
    for (Index r = 0; r < rows; ++r) m(r, c) = nd(rng);
  return m;
}

inline Vector random_unit(std::mt19937_64& rng, Index n) {
  Vector v = gaussian(rng, n, 1);
  return v / v.norm();
}

inline Subspace random_subspace(std::mt19937_64& rng, Index d, Index k) {
  return orthonormalize(gaussian(rng, d, k));
}

inline Subspace line(std::initializer_list<double> coords) {
  Vector v(static_cast<Index>(coords.size()));
  Index i = 0;
  for (double c : coords) v(i++) = c;
  return orthonormalize(v);
}

/// Line in R² at angle theta from the first axis.
inline Subspace plane_line(double theta) {
  return line({std::cos(theta), std::sin(theta)});
}

inline double deg(double degrees) { return degrees * M_PI / 180.0; }

inline SubspaceFamily two_lines(double theta) {
  return SubspaceFamily({plane_line(0.0), plane_line(theta)});
}

/// Random hollow symmetric matrix with off-diagonal entries uniform in [lo, hi].
inline Matrix random_hollow(std::mt19937_64& rng, Index n, double lo = 0.0,
                            double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  Matrix m = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) m(i, j) = m(j, i) = u(rng);
  return m;
}

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

/// Plain power iteration on E + shift·I, independent of any eigensolver.
/// The shift keeps the dominant eigenvalue of a nonnegative symmetric matrix
/// strictly dominant in magnitude.
inline double power_iteration_radius(const Matrix& e, int steps) {
  const Index n = e.rows();
  const double shift = 1.0;
  const Matrix m = e + shift * Matrix::Identity(n, n);
  Vector v = Vector::Ones(n) / std::sqrt(static_cast<double>(n));
  for (int s = 0; s < steps; ++s) {
    v = m * v;
    v /= v.norm();
  }
  return v.dot(m * v) - shift;
}

struct RandomFamily {
  SubspaceFamily family;
  double r;
};

/// Rejection-samples families with n ∈ [2,5] members of dimension 1-3 in an
/// ambient space of dimension ≤ max_ambient until r(E) ≤ r_max.
inline RandomFamily random_family(std::mt19937_64& rng, double r_max,
                                  Index max_ambient = 30) {
  std::uniform_int_distribution<int> count(2, 5);
  std::uniform_int_distribution<int> dim(1, 3);
  for (;;) {
    const int n = count(rng);
    std::vector<Index> dims;
    Index total = 0;
    for (int i = 0; i < n; ++i) {
      dims.push_back(dim(rng));
      total += dims.back();
    }
    std::uniform_int_distribution<Index> ambient(std::min(total, max_ambient),
                                                 max_ambient);
    const Index d = ambient(rng);
    std::vector<Subspace> members;
    for (Index k : dims) members.push_back(random_subspace(rng, d, k));
    SubspaceFamily f(std::move(members));
    const double r = spectral_radius(build_e_matrix(f));
    if (r <= r_max) return {std::move(f), r};
  }
}

}  // namespace subsum::testing
