// SPDX-License-Identifier: Apache-2.0

#include "simplexqp/solver.hpp"

#include <algorithm>
#include <cmath>

#include "simplexqp/cg.hpp"
#include "simplexqp/directions.hpp"
#include "simplexqp/error.hpp"
#include "simplexqp/kernels.hpp"
#include "simplexqp/linesearch.hpp"

namespace simplexqp {

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::converged_projection:
      return "converged_projection";
    case SolveStatus::converged_cg:
      return "converged_cg";
    case SolveStatus::max_iterations:
      return "max_iterations";
  }
  return "unknown";
}

std::string_view to_string(DirectionKind kind) {
  return kind == DirectionKind::reduced ? "reduced" : "projected";
}

std::string_view to_string(CGEvent event) {
  switch (event) {
    case CGEvent::cg_attempt:
      return "cg_attempt";
    case CGEvent::cg_success:
      return "cg_success";
    case CGEvent::cg_rejected:
      return "cg_rejected";
  }
  return "unknown";
}

double verify_qp_kkt(const QPProblem& problem, std::span<const double> alpha) {
  const RealVector d = gradient(problem, alpha);
  const double lambda = *std::min_element(d.begin(), d.end());
  double residual = std::abs(kernels::sum(alpha) - 1.0);
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] > 0.0) residual = std::max(residual, std::abs(d[i] - lambda));
    residual = std::max(residual, std::max(-alpha[i], 0.0));
  }
  return residual;
}

namespace {

struct CGTrial {
  bool accepted = false;
  bool attempted = false;
  RealVector alpha;
};

// Runs CG on the complement of `working`. Accepts the result only if it
// stays in the orthant and does not raise the reduced objective.
CGTrial try_conjugate_gradient(const QPProblem& problem, const IndexSet& working,
                               const SimplexPoint& alpha, double zero_tol) {
  CGTrial trial;
  trial.attempted = true;
  auto [reduced, start] = reduce_problem(problem, working, alpha);
  const CGOutcome outcome = constrained_cg(reduced, start, zero_tol);
  if (outcome.status == CGStatus::nonpositive_curvature) return trial;
  for (double v : outcome.alpha_reduced) {
    if (v < 0.0) return trial;
  }
  if (reduced_objective(reduced, outcome.alpha_reduced) > reduced_objective(reduced, start)) {
    return trial;
  }
  trial.alpha = scatter(reduced, outcome.alpha_reduced, problem.dimension());
  trial.accepted = true;
  return trial;
}

}  // namespace

SolveResult solve(const QPProblem& problem, const SimplexPoint& start, const SolverConfig& config) {
  config.validate();
  const std::size_t n = problem.dimension();
  if (start.size() != n) throw DimensionError("start point and problem dimensions differ");
  const std::size_t limit = config.iteration_limit(n);

  SimplexPoint alpha = start;
  IndexSet working = IndexSet::zeros_of(alpha.values());
  std::size_t stable_count = 0;
  bool cg_allowed = true;

  SolveResult result{.alpha = start, .trace = std::nullopt};
  if (config.trace_enabled) result.trace.emplace();

  auto finish = [&](SolveStatus status) {
    result.objective = objective(problem, alpha);
    result.kkt_residual = verify_qp_kkt(problem, alpha.values());
    result.status = status;
    result.alpha = alpha;
    return result;
  };

  RealVector d = gradient(problem, alpha);
  DirectionPair dirs = compute_directions(d, working, alpha);

  bool after_cg = false;
  while (true) {
    if (std::sqrt(kernels::squared_norm(dirs.projected)) < config.epsilon) {
      return finish(after_cg ? SolveStatus::converged_cg : SolveStatus::converged_projection);
    }
    after_cg = false;
    if (result.iterations >= limit) return finish(SolveStatus::max_iterations);

    const DirectionKind kind =
        dirs.angle < config.theta1 ? DirectionKind::reduced : DirectionKind::projected;
    const RealVector& p = kind == DirectionKind::reduced ? dirs.reduced : dirs.projected;
    const double choice_angle = dirs.angle;

    const LineSearchResult ls = exact_line_search(problem, alpha, p, d);
    alpha = take_step(alpha, p, ls);
    ++result.iterations;

    ++stable_count;
    IndexSet next_working = IndexSet::zeros_of(alpha.values());
    if (next_working != working) {
      working = std::move(next_working);
      stable_count = 0;
      cg_allowed = true;
    }

    d = gradient(problem, alpha);
    dirs = compute_directions(d, working, alpha);

    IterationRecord record;
    if (result.trace) {
      record.iteration = result.iterations;
      record.direction_used = kind;
      record.angle = choice_angle;
      record.step = ls.step;
      record.working_set_size = working.size();
      record.check_angle = dirs.angle;
      record.stable_count = stable_count;
      record.cg_allowed = cg_allowed;
      record.working_set = working;
    }

    if (cg_allowed && stable_count > n && dirs.angle < config.theta2) {
      ++result.cg_invocations;
      const CGTrial trial = try_conjugate_gradient(problem, working, alpha, config.cg_zero_tolerance);
      if (trial.accepted) {
        // The CG point is stationary on the current face but the face may
        // still be wrong; the termination test at the top of the loop
        // decides, and gradient projection resumes otherwise.
        alpha = SimplexPoint(trial.alpha);
        after_cg = true;
        cg_allowed = false;
        next_working = IndexSet::zeros_of(alpha.values());
        if (next_working != working) {
          working = std::move(next_working);
          stable_count = 0;
          cg_allowed = true;
        }
        d = gradient(problem, alpha);
        dirs = compute_directions(d, working, alpha);
        if (result.trace) record.event = CGEvent::cg_success;
      } else {
        ++result.cg_rejections;
        cg_allowed = false;
        if (result.trace) record.event = CGEvent::cg_rejected;
      }
    }

    if (result.trace) {
      record.objective = objective(problem, alpha);
      record.alpha = alpha.values();
      result.trace->push_back(std::move(record));
    }
  }
}

}  // namespace simplexqp
