// SPDX-License-Identifier: Apache-2.0
//
// Exact minimization of q(alpha - u p) for u in [0, u_max], where u_max is
// the largest step keeping alpha - u p non-negative.

#pragma once

#include "simplexqp/core_types.hpp"

namespace simplexqp {

struct LineSearchResult {
  double step = 0.0;
  double max_step = 0.0;
  IndexSet blocking;  // coordinates written as exact zeros
  double curvature = 0.0;               // p' H p
  double directional_derivative = 0.0;  // d' p
};

/// min over {i : p_i > 0} of alpha_i / p_i, or +infinity if p has no
/// positive component.
double max_feasible_step(const SimplexPoint& alpha, std::span<const double> p);

/// Requires p != 0 (InvalidArgument) and d' p > 0 (InternalError: the
/// solver's directions always satisfy it, so a violation is a bug). A
/// minimizer within 1e-14 (relative) of u_max is treated as a boundary hit.
LineSearchResult exact_line_search(const QPProblem& problem, const SimplexPoint& alpha,
                                   std::span<const double> p, std::span<const double> d);

/// alpha - step * p with the blocking coordinates written as exact zeros.
SimplexPoint take_step(const SimplexPoint& alpha, std::span<const double> p,
                       const LineSearchResult& result);

}  // namespace simplexqp
