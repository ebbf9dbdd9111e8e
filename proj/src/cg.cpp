// SPDX-License-Identifier: Apache-2.0

#include "simplexqp/cg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "simplexqp/error.hpp"
#include "simplexqp/kernels.hpp"

namespace simplexqp {

std::pair<ReducedQP, RealVector> reduce_problem(const QPProblem& problem, const IndexSet& working,
                                                const SimplexPoint& alpha) {
  const std::size_t n = problem.dimension();
  if (alpha.size() != n) throw DimensionError("iterate and problem dimensions differ");
  for (std::size_t i : working) {
    if (i >= n) throw InvalidArgument("working set index out of range");
    if (alpha[i] != 0.0) {
      throw InvalidArgument("working set coordinate " + std::to_string(i) + " is not zero");
    }
  }
  IndexSet free = working.complement(n);
  if (free.empty()) throw InvalidArgument("no free variables outside the working set");

  ReducedQP reduced;
  reduced.hessian = problem.hessian().principal_submatrix(free);
  reduced.linear.reserve(free.size());
  RealVector start;
  start.reserve(free.size());
  for (std::size_t i : free) {
    reduced.linear.push_back(problem.linear()[i]);
    start.push_back(alpha[i]);
  }
  reduced.free_indices = std::move(free);
  return {std::move(reduced), std::move(start)};
}

RealVector scatter(const ReducedQP& reduced, std::span<const double> alpha_reduced, std::size_t n) {
  if (alpha_reduced.size() != reduced.free_indices.size()) {
    throw DimensionError("reduced vector does not match the free set");
  }
  RealVector out(n, 0.0);
  for (std::size_t k = 0; k < alpha_reduced.size(); ++k) {
    out.at(reduced.free_indices[k]) = alpha_reduced[k];
  }
  return out;
}

double reduced_objective(const ReducedQP& reduced, std::span<const double> alpha_reduced) {
  const RealVector ha = reduced.hessian.multiply(alpha_reduced);
  return 0.5 * kernels::dot(alpha_reduced, ha) - kernels::dot(alpha_reduced, reduced.linear);
}

RealVector project_residual(std::span<const double> r) {
  const std::size_t m = r.size();
  RealVector g(m);
  if (m == 0) return g;
  g[0] = static_cast<double>(m) * r[0] - kernels::sum(r);
  for (std::size_t i = 1; i < m; ++i) g[i] = r[i] - r[0];
  return g;
}

CGOutcome constrained_cg(const ReducedQP& reduced, std::span<const double> start, double zero_tol,
                         const CGObserver& observer) {
  const std::size_t m = start.size();
  if (m == 0) throw InvalidArgument("constrained CG needs at least one variable");
  if (reduced.hessian.rows() != m || reduced.hessian.cols() != m || reduced.linear.size() != m) {
    throw DimensionError("reduced problem does not match the start point");
  }
  if (std::abs(kernels::sum(start) - 1.0) > 1e-8) {
    throw InvalidArgument("constrained CG start point must sum to 1");
  }

  CGOutcome out;
  out.alpha_reduced.assign(start.begin(), start.end());
  RealVector& alpha = out.alpha_reduced;

  RealVector r = reduced.hessian.multiply(alpha);
  kernels::axpy(-1.0, reduced.linear, r);
  RealVector g = project_residual(r);
  RealVector p(m);
  for (std::size_t i = 0; i < m; ++i) p[i] = -g[i];

  const double t_floor = zero_tol * std::max(1.0, kernels::squared_norm(r));
  double t = kernels::dot(r, g);
  if (observer) observer({0, alpha, r, g, p, t});

  // Earlier directions with H times them and their curvature. In exact
  // arithmetic p is already H-conjugate to all of them; in floating point
  // conjugacy decays on ill-conditioned H and m steps stop being enough, so
  // each new p is conjugated against the stored ones explicitly.
  std::vector<RealVector> past_p, past_hp;
  std::vector<double> past_curvature;

  out.status = CGStatus::max_iterations;
  for (std::size_t iter = 1; iter <= m; ++iter) {
    if (t <= t_floor) {
      out.status = CGStatus::converged;
      break;
    }
    for (std::size_t j = 0; j < past_p.size(); ++j) {
      kernels::axpy(-kernels::dot(past_hp[j], p) / past_curvature[j], past_p[j], p);
    }
    RealVector hp = reduced.hessian.multiply(p);
    const double curvature = kernels::dot(p, hp);
    if (curvature <= zero_tol * kernels::squared_norm(p)) {
      out.status = CGStatus::nonpositive_curvature;
      break;
    }
    const double step = t / curvature;
    kernels::axpy(step, p, alpha);
    kernels::axpy(step, hp, r);
    g = project_residual(r);
    const double t_next = kernels::dot(r, g);
    const double beta = t_next / t;
    RealVector previous = p;
    for (std::size_t i = 0; i < m; ++i) p[i] = -g[i] + beta * p[i];
    t = t_next;
    past_p.push_back(std::move(previous));
    past_hp.push_back(std::move(hp));
    past_curvature.push_back(curvature);
    out.iterations = iter;
    if (observer) observer({iter, alpha, r, g, p, t});
  }
  if (out.status == CGStatus::max_iterations && t <= t_floor) out.status = CGStatus::converged;
  out.final_t = t;
  return out;
}

}  // namespace simplexqp
