// SPDX-License-Identifier: Apache-2.0

#include "simplexqp/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "simplexqp/error.hpp"
#include "simplexqp/solver.hpp"

namespace simplexqp {

namespace {

// Visits every k-subset of {0..n-1} in lexicographic order, for k = 0..max_k.
template <typename Visit>
void for_each_subset_by_size(std::size_t n, std::size_t max_k, Visit&& visit) {
  std::vector<std::size_t> pick;
  for (std::size_t k = 0; k <= max_k && k <= n; ++k) {
    pick.resize(k);
    for (std::size_t j = 0; j < k; ++j) pick[j] = j;
    while (true) {
      visit(pick);
      // advance to the next combination
      std::size_t j = k;
      while (j > 0 && pick[j - 1] == n - k + (j - 1)) --j;
      if (j == 0) break;
      ++pick[j - 1];
      for (std::size_t l = j; l < k; ++l) pick[l] = pick[l - 1] + 1;
    }
  }
}

constexpr double kRcondFloor = 1e-10;
constexpr double kPrimalSlack = 1e-12;
constexpr double kDualSlack = 1e-8;

}  // namespace

RealVector oracle_project(const ProjectionProblem& problem) {
  const RealVector& g = problem.g;
  const std::size_t n = g.size();
  const std::size_t nc = problem.constrained.size();
  if (n == 0) throw InvalidArgument("cannot project an empty vector");
  if (nc > kProjectionOracleGuard) {
    throw InvalidArgument("projection oracle limited to " + std::to_string(kProjectionOracleGuard) +
                          " constrained coordinates");
  }

  double scale = 1.0;
  for (double v : g) scale = std::max(scale, std::abs(v));
  const double tol = 1e-12 * scale;

  RealVector best;
  double best_distance = std::numeric_limits<double>::infinity();
  RealVector x(n);
  std::vector<bool> zeroed(n);

  for_each_subset_by_size(nc, nc, [&](const std::vector<std::size_t>& pick) {
    std::fill(zeroed.begin(), zeroed.end(), false);
    for (std::size_t p : pick) zeroed[problem.constrained[p]] = true;

    double total = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!zeroed[i]) {
        total += g[i];
        ++count;
      }
    }
    // Everything zeroed: x = 0 is then the only feasible point.
    const double mean = count == 0 ? 0.0 : total / static_cast<double>(count);

    bool accepted = true;
    for (std::size_t i = 0; i < n && accepted; ++i) {
      if (zeroed[i]) {
        x[i] = 0.0;
        if (count > 0 && 2.0 * (g[i] - mean) < -tol) accepted = false;
      } else {
        x[i] = g[i] - mean;
        if (problem.constrained.contains(i) && x[i] > tol) accepted = false;
      }
    }
    if (!accepted) return;

    double distance = 0.0;
    for (std::size_t i = 0; i < n; ++i) distance += (x[i] - g[i]) * (x[i] - g[i]);
    if (distance < best_distance) {
      best_distance = distance;
      best = x;
    }
  });

  if (best.empty()) throw InternalError("projection oracle found no KKT-consistent zero set");
  return best;
}

std::vector<OracleSolution> oracle_qp_candidates(const QPProblem& problem, std::size_t guard) {
  const std::size_t n = problem.dimension();
  if (n > guard) {
    throw InvalidArgument("QP oracle limited to n <= " + std::to_string(guard) + " (got " +
                          std::to_string(n) + ")");
  }
  const Matrix& h = problem.hessian();
  const RealVector& c = problem.linear();

  std::vector<OracleSolution> out;
  std::vector<bool> zeroed(n);
  std::vector<std::size_t> free_idx;

  for_each_subset_by_size(n, n - 1, [&](const std::vector<std::size_t>& zero_pick) {
    std::fill(zeroed.begin(), zeroed.end(), false);
    for (std::size_t i : zero_pick) zeroed[i] = true;
    free_idx.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (!zeroed[i]) free_idx.push_back(i);
    }
    const auto m = static_cast<Eigen::Index>(free_idx.size());

    // [H_FF  -1] [a_F   ]   [c_F]
    // [1'     0] [lambda] = [ 1 ]
    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(m + 1, m + 1);
    Eigen::VectorXd rhs(m + 1);
    for (Eigen::Index r = 0; r < m; ++r) {
      for (Eigen::Index col = 0; col < m; ++col) kkt(r, col) = h(free_idx[r], free_idx[col]);
      kkt(r, m) = -1.0;
      kkt(m, r) = 1.0;
      rhs(r) = c[free_idx[r]];
    }
    rhs(m) = 1.0;

    Eigen::PartialPivLU<Eigen::MatrixXd> lu(kkt);
    if (!(lu.rcond() >= kRcondFloor)) return;
    const Eigen::VectorXd sol = lu.solve(rhs);

    RealVector alpha(n, 0.0);
    for (Eigen::Index r = 0; r < m; ++r) {
      if (sol(r) < -kPrimalSlack) return;
      alpha[free_idx[r]] = std::max(sol(r), 0.0);
    }
    const double lambda = sol(m);
    const RealVector d = gradient(problem, alpha);
    for (std::size_t i : zero_pick) {
      if (d[i] - lambda < -kDualSlack) return;
    }

    OracleSolution cand;
    SimplexPoint point(std::move(alpha));
    cand.objective = objective(problem, point);
    cand.kkt_residual = verify_qp_kkt(problem, point);
    cand.active_set = IndexSet(zero_pick, n);
    cand.x_or_alpha = point.values();
    out.push_back(std::move(cand));
  });
  return out;
}

OracleSolution oracle_qp(const QPProblem& problem, std::size_t guard) {
  auto candidates = oracle_qp_candidates(problem, guard);
  if (candidates.empty()) throw InternalError("QP oracle found no KKT point");
  std::size_t best = 0;
  for (std::size_t k = 1; k < candidates.size(); ++k) {
    if (candidates[k].objective < candidates[best].objective) best = k;
  }
  return std::move(candidates[best]);
}

}  // namespace simplexqp
