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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "subsum/criterion.hpp"
#include "subsum/errors.hpp"
#include "test_util.hpp"

using namespace subsum;
using namespace subsum::testing;

namespace {

EMatrix constant_e(Index n, double eps) {
  Matrix m = Matrix::Constant(n, n, eps);
  m.diagonal().setZero();
  return EMatrix::from_entries(m);
}

EMatrix three(double e12, double e23, double e31) {
  Matrix m(3, 3);
  m << 0, e12, e31, e12, 0, e23, e31, e23, 0;
  return EMatrix::from_entries(m);
}

}  // namespace

TEST_CASE("EMatrix validation") {
  Matrix asym(2, 2);
  asym << 0, 0.5, 0.4, 0;
  CHECK_THROWS_AS(EMatrix::from_entries(asym), InvalidEMatrix);
  Matrix diag(2, 2);
  diag << 0.1, 0.5, 0.5, 0;
  CHECK_THROWS_AS(EMatrix::from_entries(diag), InvalidEMatrix);
  Matrix neg(2, 2);
  neg << 0, -0.5, -0.5, 0;
  CHECK_THROWS_AS(EMatrix::from_entries(neg), InvalidEMatrix);
  CHECK_THROWS_AS(EMatrix::from_entries(Matrix::Zero(2, 3)), InvalidEMatrix);
  CHECK_NOTHROW(EMatrix::from_entries(Matrix::Zero(1, 1)));
}

TEST_CASE("build_e_matrix from measured restricted norms") {
  CHECK(max_abs(build_e_matrix(SubspaceFamily({line({1, 0})})).entries()) == 0.0);

  const EMatrix e60 = build_e_matrix(two_lines(deg(60)));
  CHECK(e60(0, 0) == 0.0);
  CHECK(e60(0, 1) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(e60(1, 0) == e60(0, 1));

  const SubspaceFamily axes({line({1, 0, 0}), line({0, 1, 0}), line({0, 0, 1})});
  CHECK(max_abs(build_e_matrix(axes).entries()) == 0.0);
}

TEST_CASE("looser user bounds are accepted only above the measured norms") {
  const SubspaceFamily f = two_lines(deg(60));
  Matrix ok(2, 2);
  ok << 0, 0.7, 0.7, 0;
  CHECK(spectral_radius(EMatrix::from_bounds(f, ok)) ==
        doctest::Approx(0.7).epsilon(1e-14));
  Matrix tight(2, 2);
  tight << 0, 0.5 - 1e-12, 0.5 - 1e-12, 0;
  CHECK_NOTHROW(EMatrix::from_bounds(f, tight));
  Matrix low(2, 2);
  low << 0, 0.4, 0.4, 0;
  CHECK_THROWS_AS(EMatrix::from_bounds(f, low), InvalidEMatrix);
  CHECK_THROWS_AS(EMatrix::from_bounds(f, Matrix::Zero(3, 3)), DimensionMismatch);
}

TEST_CASE("spectral radius of simple matrices") {
  CHECK(spectral_radius(constant_e(2, 0.5)) == doctest::Approx(0.5).epsilon(1e-15));
  for (Index n = 2; n <= 6; ++n)
    CHECK(spectral_radius(constant_e(n, 0.3)) ==
          doctest::Approx((n - 1) * 0.3).epsilon(1e-14));
  CHECK(spectral_radius(EMatrix::from_entries(Matrix::Zero(1, 1))) == 0.0);
}

TEST_CASE("spectral radius agrees with power iteration and has a small residual") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const EMatrix e = EMatrix::from_entries(random_hollow(rng, 5));
    const Eigenpair pair = dominant_eigenpair(e);
    CHECK(std::abs(pair.value - power_iteration_radius(e.entries(), 10000)) <= 1e-8);
    const double residual = (e.entries() * pair.vector - pair.value * pair.vector).norm();
    CHECK(residual <= 1e-10 * 5 * max_abs(e.entries()));
  }
}

TEST_CASE("spectral radius bounds, monotonicity and scaling") {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> u(0.0, 0.3);
  for (int trial = 0; trial < 200; ++trial) {
    const Index n = 2 + trial % 5;
    const Matrix m = random_hollow(rng, n);
    const double r = spectral_radius(EMatrix::from_entries(m));
    CHECK(r >= m.maxCoeff() - 1e-14);
    CHECK(r <= m.rowwise().sum().maxCoeff() + 1e-14);

    Matrix bigger = m + random_hollow(rng, n, 0.0, 0.3);
    CHECK(spectral_radius(EMatrix::from_entries(bigger)) >= r - 1e-14);

    const double c = 3.0 * u(rng);
    const double rc = spectral_radius(EMatrix::from_entries(m).scaled(c));
    CHECK(std::abs(rc - c * r) <= 1e-12 * std::max(1.0, c * r));
  }
}

TEST_CASE("leading minors of I - E") {
  const auto two = leading_minors(constant_e(2, 0.5));
  REQUIRE(two.size() == 2);
  CHECK(two[0] == doctest::Approx(1.0));
  CHECK(two[1] == doctest::Approx(0.75).epsilon(1e-15));

  const auto boundary = leading_minors(constant_e(3, 0.5));
  REQUIRE(boundary.size() == 3);
  CHECK(std::abs(boundary[2]) <= 1e-15);

  for (double m : leading_minors(EMatrix::from_entries(Matrix::Zero(4, 4))))
    CHECK(m == 1.0);
}

TEST_CASE("three-subspace angle test") {
  CHECK_FALSE(three_subspace_angle_test(three(0.5, 0.5, 0.5)));
  CHECK(three_subspace_angle_test(three(0, 0, 0)));
  CHECK_FALSE(three_subspace_angle_test(three(1, 0, 0)));
  CHECK_THROWS_AS(three_subspace_angle_test(constant_e(2, 0.5)), WrongArity);
  CHECK_THROWS_AS(three_subspace_angle_test(three(1.5, 0, 0)), InvalidArgument);
}

TEST_CASE("evaluate_criterion examples") {
  const CriterionReport r60 = evaluate_criterion(build_e_matrix(two_lines(deg(60))));
  CHECK(r60.spectral_radius == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(r60.satisfied);
  CHECK(r60.verdict == Verdict::kSatisfied);
  CHECK(r60.margin == doctest::Approx(0.5).epsilon(1e-14));
  CHECK_FALSE(r60.angle_sum.has_value());

  const CriterionReport r06 = evaluate_criterion(constant_e(3, 0.6));
  CHECK(r06.spectral_radius == doctest::Approx(1.2).epsilon(1e-14));
  CHECK_FALSE(r06.satisfied);
  CHECK(r06.verdict == Verdict::kNotSatisfied);
  REQUIRE(r06.angle_sum.has_value());
  CHECK(*r06.angle_sum < std::numbers::pi);

  const CriterionReport rb = evaluate_criterion(constant_e(3, 0.5));
  CHECK(rb.verdict == Verdict::kBoundary);
  CHECK_FALSE(rb.satisfied);
}

TEST_CASE("duplicated subspace sits on the boundary") {
  const SubspaceFamily f({line({1, 2}), line({1, 2})});
  const CriterionReport r = evaluate_criterion(build_e_matrix(f));
  CHECK(r.spectral_radius == doctest::Approx(1.0));
  CHECK(r.verdict == Verdict::kBoundary);
}

TEST_CASE("the formulations agree on random 3x3 matrices off the boundary") {
  std::mt19937_64 rng(23);
  int satisfied = 0, checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const EMatrix e = EMatrix::from_entries(random_hollow(rng, 3));
    const CriterionReport r = evaluate_criterion(e);  // throws on disagreement
    if (r.verdict == Verdict::kBoundary) continue;
    ++checked;
    const bool minors = std::all_of(r.leading_minors.begin(), r.leading_minors.end(),
                                    [](double m) { return m > 0; });
    CHECK(minors == r.satisfied);
    CHECK(three_subspace_angle_test(e) == r.satisfied);
    satisfied += r.satisfied;
  }
  CHECK(checked > 990);
  CHECK(satisfied > 50);  // both outcomes are exercised
  CHECK(satisfied < checked - 50);
}

TEST_CASE("the formulations agree for larger n") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 500; ++trial) {
    const Index n = 2 + trial % 5;
    const EMatrix e = EMatrix::from_entries(random_hollow(rng, n, 0.0, 2.0 / n));
    CHECK_NOTHROW(evaluate_criterion(e));
  }
}
