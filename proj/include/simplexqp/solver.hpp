// SPDX-License-Identifier: Apache-2.0
//
// Active-set driver for quadratic programs on the standard simplex.
//
// Each outer iteration projects the gradient twice: once with the working
// set held at zero (reduced direction) and once with only the binding part
// of the working set held (projected direction). The reduced direction is
// used while the two are within theta1 of each other, otherwise the
// projected one, followed by an exact line search. Once the working set has
// been stable for more than n steps and the directions are within theta2,
// conjugate gradient is run on the free variables; a result that raises
// the objective or leaves the orthant is discarded and CG stays disabled
// until the working set changes.

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "simplexqp/core_types.hpp"

namespace simplexqp {

enum class SolveStatus { converged_projection, converged_cg, max_iterations };
enum class DirectionKind { reduced, projected };
enum class CGEvent { cg_attempt, cg_success, cg_rejected };

std::string_view to_string(SolveStatus status);
std::string_view to_string(DirectionKind kind);
std::string_view to_string(CGEvent event);

/// One gradient-projection step. `angle` drove the direction choice;
/// `check_angle`, `stable_count` and `cg_allowed` are the values the CG
/// switch saw after the step. When CG was accepted, `objective` and `alpha`
/// are the post-CG values.
struct IterationRecord {
  std::size_t iteration = 0;
  double objective = 0.0;
  DirectionKind direction_used = DirectionKind::projected;
  double angle = 0.0;
  double step = 0.0;
  std::size_t working_set_size = 0;
  std::optional<CGEvent> event;  // final CG outcome of this iteration, if any
  double check_angle = 0.0;
  std::size_t stable_count = 0;
  bool cg_allowed = true;
  IndexSet working_set;
  RealVector alpha;
};

struct SolveResult {
  SimplexPoint alpha;
  double objective = 0.0;
  SolveStatus status = SolveStatus::max_iterations;
  double kkt_residual = 0.0;
  std::size_t iterations = 0;
  std::size_t cg_invocations = 0;
  std::size_t cg_rejections = 0;
  std::optional<std::vector<IterationRecord>> trace;
};

/// Throws InvalidArgument for an invalid configuration or mismatched
/// dimensions. Running out of iterations is reported through the status.
SolveResult solve(const QPProblem& problem, const SimplexPoint& start,
                  const SolverConfig& config = {});

/// First-order optimality residual: with d = H alpha - c and
/// lambda = min_i d_i, the max of |d_i - lambda| over the support,
/// |sum(alpha) - 1| and the largest negative component.
double verify_qp_kkt(const QPProblem& problem, std::span<const double> alpha);

}  // namespace simplexqp
