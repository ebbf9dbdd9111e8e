// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "simplexqp/cg.hpp"
#include "simplexqp/error.hpp"
#include "test_support.hpp"

using namespace simplexqp;

namespace {

ReducedQP make_reduced(Matrix h, RealVector c) {
  const std::size_t m = c.size();
  return ReducedQP{std::move(h), std::move(c), IndexSet::all(m)};
}

}  // namespace

TEST_CASE("residual map") {
  CHECK(project_residual(RealVector{1, 0}) == RealVector{1, -1});
  CHECK(project_residual(RealVector{3}) == RealVector{0});
  // (3*2 - 6, 1 - 2, 3 - 2)
  CHECK(project_residual(RealVector{2, 1, 3}) == RealVector{0, -1, 1});
}

TEST_CASE("single variable is pinned by the sum constraint") {
  const auto out = constrained_cg(make_reduced(Matrix{{4}}, {7}), RealVector{1}, 1e-14);
  CHECK(out.alpha_reduced == RealVector{1});
  CHECK(out.iterations == 0);
  CHECK(out.final_t == 0.0);
  CHECK(out.status == CGStatus::converged);
}

TEST_CASE("hand-executed two-variable recurrence") {
  std::vector<double> ts;
  const auto out = constrained_cg(make_reduced(Matrix::identity(2), {0, 0}), RealVector{1, 0}, 1e-14,
                                  [&](const CGIterate& it) { ts.push_back(it.t); });
  CHECK(out.alpha_reduced == RealVector{0.5, 0.5});
  CHECK(out.iterations == 1);
  CHECK(out.status == CGStatus::converged);
  CHECK(ts == std::vector<double>{1.0, 0.0});
  CHECK(testing::max_abs_diff(out.alpha_reduced,
                              testing::equality_kkt_solve(Matrix::identity(2), RealVector{0, 0})) <=
        1e-15);
}

TEST_CASE("negative curvature is reported, not divided through") {
  const auto out =
      constrained_cg(make_reduced(Matrix{{-1, 0}, {0, -1}}, {0, 0}), RealVector{1, 0}, 1e-14);
  CHECK(out.status == CGStatus::nonpositive_curvature);
  CHECK(out.alpha_reduced == RealVector{1, 0});
}

TEST_CASE("identities along the iteration and agreement with a direct solve") {
  NormalSource rng(123);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = rng.index(1, 20);
    const Matrix h = testing::random_spd(rng, m);
    const RealVector c = testing::normal_vector(rng, m);
    RealVector start(m, 1.0 / static_cast<double>(m));
    std::size_t observed = 0;
    const auto out = constrained_cg(make_reduced(h, c), start, 1e-14, [&](const CGIterate& it) {
      ++observed;
      double sg = 0.0, sp = 0.0, sa = 0.0, spread = 0.0, rr = 0.0, scale = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        sg += it.projected[i];
        sp += it.direction[i];
        sa += it.alpha[i];
        spread += (it.residual[i] - it.residual[0]) * (it.residual[i] - it.residual[0]);
        rr += it.residual[i] * it.residual[i];
        scale = std::max(scale, std::abs(it.projected[i]) + std::abs(it.direction[i]));
      }
      CHECK(std::abs(sg) <= 1e-10 * std::max(1.0, scale));
      CHECK(std::abs(sp) <= 1e-10 * std::max(1.0, scale));
      CHECK(std::abs(sa - 1.0) <= 1e-8);
      // r'g equals sum_i (r_i - r_0)^2
      CHECK(std::abs(it.t - spread) <= 1e-10 * static_cast<double>(m) * std::max(1.0, rr));
    });
    CHECK(observed == out.iterations + 1);
    CHECK(out.iterations <= m);
    const RealVector direct = testing::equality_kkt_solve(h, c);
    double scale = 1.0;
    for (double v : direct) scale = std::max(scale, std::abs(v));
    CHECK(testing::max_abs_diff(out.alpha_reduced, direct) <= 1e-6 * scale);
  }
}

TEST_CASE("problem reduction") {
  const RealVector diag{1, 2, 3};
  const QPProblem problem(Matrix::diagonal(diag), {1, 2, 3});
  SUBCASE("empty working set is the identity") {
    const SimplexPoint alpha({0.2, 0.3, 0.5});
    auto [reduced, start] = reduce_problem(problem, {}, alpha);
    CHECK(reduced.hessian == problem.hessian());
    CHECK(start == alpha.values());
  }
  SUBCASE("row and column extraction") {
    const SimplexPoint alpha({0.4, 0.0, 0.6});
    auto [reduced, start] = reduce_problem(problem, IndexSet({1}, 3), alpha);
    CHECK(reduced.hessian == Matrix{{1, 0}, {0, 3}});
    CHECK(reduced.linear == RealVector{1, 3});
    CHECK(scatter(reduced, start, 3) == alpha.values());
    CHECK(reduced_objective(reduced, start) == doctest::Approx(objective(problem, alpha)));
  }
  CHECK_THROWS_AS(reduce_problem(problem, IndexSet({0}, 3), SimplexPoint({0.5, 0.5, 0.0})),
                  InvalidArgument);
  CHECK_THROWS_AS(reduce_problem(problem, IndexSet::all(3), SimplexPoint({0.5, 0.5, 0.0})),
                  InvalidArgument);
}

TEST_CASE("scatter inverts reduction on random states") {
  NormalSource rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = rng.index(1, 10);
    const QPProblem problem = generate_problem(n, ProblemKind::convex, trial);
    const IndexSet zeros = testing::random_subset(rng, n, n - 1);
    const SimplexPoint alpha = testing::random_point_with_zeros(rng, n, zeros);
    auto [reduced, start] = reduce_problem(problem, zeros, alpha);
    CHECK(scatter(reduced, start, n) == alpha.values());
  }
}

TEST_CASE("start must lie on the hyperplane") {
  CHECK_THROWS_AS(constrained_cg(make_reduced(Matrix::identity(2), {0, 0}), RealVector{1, 1}, 1e-14),
                  InvalidArgument);
}
