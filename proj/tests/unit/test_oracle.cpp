// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "simplexqp/error.hpp"
#include "simplexqp/oracle.hpp"
#include "simplexqp/solver.hpp"
#include "test_support.hpp"

using namespace simplexqp;

TEST_CASE("projection oracle examples") {
  CHECK(testing::max_abs_diff(oracle_project(ProjectionProblem({3, 1, -1}, IndexSet({0}, 3))),
                              RealVector{0, 1, -1}) <= 1e-15);
  CHECK(oracle_project(ProjectionProblem({2, 0, -2}, {})) == RealVector{2, 0, -2});
  CHECK(oracle_project(ProjectionProblem({1, 1}, IndexSet({0, 1}, 2))) == RealVector{0, 0});
}

TEST_CASE("projection oracle guard") {
  CHECK_THROWS_AS(oracle_project(ProjectionProblem(RealVector(21, 0.0), IndexSet::all(21))),
                  InvalidArgument);
}

TEST_CASE("QP oracle closed forms") {
  SUBCASE("identity: symmetric split") {
    const auto sol = oracle_qp(QPProblem(Matrix::identity(2), {0, 0}));
    CHECK(testing::max_abs_diff(sol.x_or_alpha, RealVector{0.5, 0.5}) <= 1e-14);
    CHECK(sol.objective == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(sol.active_set.empty());
  }
  SUBCASE("diag(1, 100): equal gradients on the support") {
    const RealVector diag{1.0, 100.0};
    const auto sol = oracle_qp(QPProblem(Matrix::diagonal(diag), {0, 0}));
    CHECK(testing::max_abs_diff(sol.x_or_alpha, RealVector{100.0 / 101.0, 1.0 / 101.0}) <= 1e-14);
  }
  SUBCASE("off-diagonal form: optimum at a vertex") {
    const auto sol = oracle_qp(QPProblem(Matrix{{0, 1}, {1, 0}}, {0, 0}));
    CHECK(sol.objective == 0.0);
    CHECK(sol.active_set.size() == 1);
  }
}

TEST_CASE("QP oracle guard and ordering") {
  const QPProblem big = generate_problem(13, ProblemKind::convex, 1);
  CHECK_THROWS_AS(oracle_qp(big), InvalidArgument);
  CHECK_NOTHROW(oracle_qp(big, 13));

  const auto cands = oracle_qp_candidates(generate_problem(6, ProblemKind::indefinite, 4));
  for (std::size_t k = 1; k < cands.size(); ++k) {
    CHECK(cands[k - 1].active_set.size() <= cands[k].active_set.size());
  }
}

TEST_CASE("QP oracle output is a KKT point") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    NormalSource rng(seed);
    const std::size_t n = rng.index(1, 9);
    const QPProblem problem =
        generate_problem(n, seed % 2 ? ProblemKind::indefinite : ProblemKind::convex, seed);
    const auto sol = oracle_qp(problem);
    CHECK(sol.kkt_residual <= 1e-8);
    CHECK(verify_qp_kkt(problem, sol.x_or_alpha) <= 1e-8);
    for (const auto& c : oracle_qp_candidates(problem)) CHECK(c.objective >= sol.objective);
  }
}

TEST_CASE("QP oracle beats random feasible points on convex problems") {
  NormalSource rng(17);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const std::size_t n = 2 + seed;
    const QPProblem problem = generate_problem(n, ProblemKind::convex, 50 + seed);
    const double best = oracle_qp(problem).objective;
    // uniform samples from the simplex via normalized exponentials
    RealVector a(n);
    for (int s = 0; s < 200000; ++s) {
      double total = 0.0;
      for (double& v : a) total += (v = -std::log(1.0 - rng.uniform()));
      for (double& v : a) v /= total;
      REQUIRE(objective(problem, a) >= best - 1e-12);
    }
  }
}
