// SPDX-License-Identifier: Apache-2.0
//
// Conjugate gradient for the QP restricted to the free variables, subject
// only to sum(alpha) = 1. The residual r = H alpha - c is mapped to the
// zero-sum subspace with
//
//   g = (m r_1 - sum_i r_i, r_2 - r_1, ..., r_m - r_1),
//
// a symmetric positive semidefinite operator whose null space is the
// constant vectors. Consequently sum(g) = 0, r'g = sum_i (r_i - r_1)^2, and
// every update preserves the sum constraint. Iterates may leave the
// non-negative orthant; the caller decides what to do with them.

#pragma once

#include <functional>

#include "simplexqp/core_types.hpp"

namespace simplexqp {

struct ReducedQP {
  Matrix hessian;
  RealVector linear;
  IndexSet free_indices;  // reduced position k -> original position free_indices[k]
};

enum class CGStatus { converged, max_iterations, nonpositive_curvature };

struct CGOutcome {
  RealVector alpha_reduced;
  std::size_t iterations = 0;
  double final_t = 0.0;
  CGStatus status = CGStatus::converged;
};

/// Snapshot handed to an observer after every CG update.
struct CGIterate {
  std::size_t iteration;
  std::span<const double> alpha;
  std::span<const double> residual;   // r
  std::span<const double> projected;  // g
  std::span<const double> direction;  // p
  double t;                           // r'g before the update
};

using CGObserver = std::function<void(const CGIterate&)>;

/// Restriction of the problem to the complement of `working`, along with
/// the matching sub-vector of alpha. Throws InvalidArgument if no variable
/// is free or alpha is nonzero somewhere in `working`.
std::pair<ReducedQP, RealVector> reduce_problem(const QPProblem& problem, const IndexSet& working,
                                                const SimplexPoint& alpha);

/// Full-length vector with reduced values at their original positions and
/// zeros elsewhere.
RealVector scatter(const ReducedQP& reduced, std::span<const double> alpha_reduced, std::size_t n);

/// 1/2 a'Ha - a'c on the reduced problem.
double reduced_objective(const ReducedQP& reduced, std::span<const double> alpha_reduced);

/// Runs at most m iterations. Stops when t = r'g drops to
/// zero_tol * max(1, ||r_0||^2); reports nonpositive_curvature (and returns
/// the current iterate) when p'Hp <= zero_tol * p'p. Keeps every search
/// direction and H times it, so memory grows to about 2m^2 doubles.
CGOutcome constrained_cg(const ReducedQP& reduced, std::span<const double> start, double zero_tol,
                         const CGObserver& observer = {});

/// The residual-to-direction map above, exposed for testing.
RealVector project_residual(std::span<const double> r);

}  // namespace simplexqp
