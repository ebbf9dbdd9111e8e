// SPDX-License-Identifier: Apache-2.0

#include <limits>

#include "doctest.h"
#include "simplexqp/error.hpp"
#include "test_support.hpp"

using namespace simplexqp;

TEST_CASE("objective at hand-evaluated points") {
  const QPProblem identity(Matrix::identity(2), {0.0, 0.0});
  CHECK(objective(identity, SimplexPoint({1.0, 0.0})) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(objective(identity, SimplexPoint({0.5, 0.5})) == doctest::Approx(0.25).epsilon(1e-15));
  const QPProblem swap(Matrix{{0, 1}, {1, 0}}, {0.0, 0.0});
  CHECK(objective(swap, SimplexPoint({1.0, 0.0})) == 0.0);
}

TEST_CASE("gradient at hand-evaluated points") {
  const QPProblem identity(Matrix::identity(2), {0.0, 0.0});
  CHECK(gradient(identity, SimplexPoint({1.0, 0.0})) == RealVector{1.0, 0.0});
  const RealVector diag{1.0, 100.0};
  const QPProblem scaled(Matrix::diagonal(diag), {0.0, 0.0});
  CHECK(gradient(scaled, SimplexPoint({0.5, 0.5})) == RealVector{0.5, 50.0});
}

TEST_CASE("gradient matches central finite differences") {
  NormalSource rng(11);
  const double h = 1e-5;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = rng.index(1, 12);
    const QPProblem problem =
        generate_problem(n, trial % 2 ? ProblemKind::indefinite : ProblemKind::convex, 100 + trial);
    const SimplexPoint alpha = testing::random_point_with_zeros(rng, n, {});
    const RealVector delta = testing::normal_vector(rng, n);
    RealVector plus = alpha.values(), minus = alpha.values();
    for (std::size_t i = 0; i < n; ++i) {
      plus[i] += h * delta[i];
      minus[i] -= h * delta[i];
    }
    // objective() accepts any vector; the finite difference leaves the simplex
    const double fd = (objective(problem, plus) - objective(problem, minus)) / (2 * h);
    const RealVector d = gradient(problem, alpha);
    double analytic = 0.0;
    for (std::size_t i = 0; i < n; ++i) analytic += d[i] * delta[i];
    CHECK(std::abs(fd - analytic) <= 1e-6);
    CHECK(std::abs(fd - analytic) <= 1e-5 * std::max(1.0, std::abs(analytic)));
  }
}

TEST_CASE("dimension mismatches throw") {
  const QPProblem identity(Matrix::identity(2), {0.0, 0.0});
  CHECK_THROWS_AS(objective(identity, SimplexPoint({1.0 / 3, 1.0 / 3, 1.0 / 3})), DimensionError);
  CHECK_THROWS_AS(gradient(identity, SimplexPoint({1.0})), DimensionError);
  CHECK_THROWS_AS(QPProblem(Matrix::identity(3), {0.0, 0.0}), DimensionError);
}

TEST_CASE("problem construction symmetrizes and rejects non-finite data") {
  const QPProblem p(Matrix{{1, 2}, {4, 1}}, {0.0, 0.0});
  CHECK(p.hessian()(0, 1) == 3.0);
  CHECK(p.hessian()(1, 0) == 3.0);
  CHECK_THROWS_AS(QPProblem(Matrix{{1, std::numeric_limits<double>::quiet_NaN()}, {0, 1}}, {0, 0}),
                  InvalidArgument);
  CHECK_THROWS_AS(QPProblem(Matrix::identity(2), {0, std::numeric_limits<double>::infinity()}),
                  InvalidArgument);
}

TEST_CASE("simplex point repair and rejection") {
  SUBCASE("tiny negatives become exact zeros") {
    const SimplexPoint p({-1e-12, 1.0 + 1e-12});
    CHECK(p[0] == 0.0);
    CHECK(std::abs(p[0] + p[1] - 1.0) <= 1e-12);
  }
  SUBCASE("small sum drift is rescaled") {
    const SimplexPoint p({0.5 + 2e-10, 0.5});
    CHECK(std::abs(p[0] + p[1] - 1.0) <= 1e-15);
  }
  SUBCASE("exact input is untouched") {
    const SimplexPoint p({0.25, 0.75});
    CHECK(p.values() == RealVector{0.25, 0.75});
  }
  CHECK_THROWS_AS(SimplexPoint({-0.1, 1.1}), InvalidArgument);
  CHECK_THROWS_AS(SimplexPoint({0.3, 0.3}), InvalidArgument);
  CHECK_THROWS_AS(SimplexPoint(RealVector{}), InvalidArgument);
  CHECK_THROWS_AS(SimplexPoint({std::numeric_limits<double>::quiet_NaN(), 1.0}), InvalidArgument);
}

TEST_CASE("repaired points satisfy the invariants exactly as stated") {
  NormalSource rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng.index(1, 20);
    RealVector a(n);
    double total = 0.0;
    for (double& v : a) total += (v = rng.uniform());
    for (double& v : a) v = v / total + 1e-10 * (rng.uniform() - 0.5);
    const SimplexPoint p(a);
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(p[i] >= 0.0);
      s += p[i];
    }
    CHECK(std::abs(s - 1.0) <= 1e-12);
  }
}

TEST_CASE("index set construction and algebra") {
  CHECK_THROWS_AS(IndexSet({2, 1}, 3), InvalidArgument);
  CHECK_THROWS_AS(IndexSet({0, 3}, 3), InvalidArgument);
  CHECK_THROWS_AS(IndexSet::from_unordered({1, 1}, 3), InvalidArgument);
  const IndexSet s = IndexSet::from_unordered({4, 0, 2}, 5);
  CHECK(s.indices() == std::vector<std::size_t>{0, 2, 4});
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(3));
  CHECK(s.complement(5).indices() == std::vector<std::size_t>{1, 3});
  CHECK(s.difference(IndexSet({2}, 5)).indices() == std::vector<std::size_t>{0, 4});
  const RealVector v{0.0, 0.5, 0.0, 0.5};
  CHECK(IndexSet::zeros_of(v).indices() == std::vector<std::size_t>{0, 2});
}

TEST_CASE("solver config validation") {
  SolverConfig c;
  CHECK_NOTHROW(c.validate());
  CHECK(c.iteration_limit(5) == 1050);
  c.theta2 = c.theta1 * 2;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c = {};
  c.epsilon = 0.0;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c = {};
  c.theta1 = 4.0;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
}
