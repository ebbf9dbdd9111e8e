// SPDX-License-Identifier: Apache-2.0

#include "simplexqp/linesearch.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "simplexqp/error.hpp"
#include "simplexqp/kernels.hpp"

namespace simplexqp {

namespace {

constexpr double kBoundaryTie = 1e-14;

// d'p for a zero-sum p. Near a stationary point d is close to a multiple
// of the all-ones vector, so the plain product is dominated by that
// multiple times the rounding error in sum(p). Centering d on the support
// of p first gives the same value without the cancellation.
double centered_dot(std::span<const double> d, std::span<const double> p) {
  double total = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != 0.0) {
      total += d[i];
      ++count;
    }
  }
  const double shift = count == 0 ? 0.0 : total / static_cast<double>(count);
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != 0.0) acc += (d[i] - shift) * p[i];
  }
  return acc;
}

}  // namespace

double max_feasible_step(const SimplexPoint& alpha, std::span<const double> p) {
  if (p.size() != alpha.size()) throw DimensionError("direction and iterate lengths differ");
  double u_max = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) u_max = std::min(u_max, alpha[i] / p[i]);
  }
  return u_max;
}

LineSearchResult exact_line_search(const QPProblem& problem, const SimplexPoint& alpha,
                                   std::span<const double> p, std::span<const double> d) {
  const std::size_t n = problem.dimension();
  if (alpha.size() != n || p.size() != n || d.size() != n) {
    throw DimensionError("line search operands do not match the problem dimension");
  }
  bool nonzero = false;
  for (double v : p) nonzero = nonzero || v != 0.0;
  if (!nonzero) throw InvalidArgument("line search along a zero direction");

  LineSearchResult out;
  out.directional_derivative = centered_dot(d, p);
  if (!(out.directional_derivative > 0.0)) {
    std::ostringstream msg;
    msg << "line search direction is not a descent direction (d'p = " << out.directional_derivative
        << ")";
    throw InternalError(msg.str());
  }
  const RealVector hp = problem.hessian().multiply(p);
  out.curvature = kernels::dot(p, hp);
  out.max_step = max_feasible_step(alpha, p);

  // phi(u) = q(alpha) - u d'p + u^2/2 p'Hp
  bool at_boundary = true;
  if (out.curvature > 0.0) {
    const double interior = out.directional_derivative / out.curvature;
    if (interior < out.max_step * (1.0 - kBoundaryTie)) {
      out.step = interior;
      at_boundary = false;
    } else {
      out.step = out.max_step;
    }
  } else {
    if (std::isinf(out.max_step)) {
      throw InternalError("unbounded descent along a zero-sum direction on the simplex");
    }
    out.step = out.max_step;
  }

  std::vector<std::size_t> blocking;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(p[i] > 0.0)) continue;
    const bool hits = at_boundary && alpha[i] / p[i] <= out.step;
    if (hits || alpha[i] - out.step * p[i] <= 0.0) blocking.push_back(i);
  }
  out.blocking = IndexSet(std::move(blocking), n);
  return out;
}

SimplexPoint take_step(const SimplexPoint& alpha, std::span<const double> p,
                       const LineSearchResult& result) {
  RealVector next = alpha.values();
  kernels::axpy(-result.step, p, next);
  for (std::size_t i : result.blocking) next[i] = 0.0;
  return SimplexPoint(std::move(next));
}

}  // namespace simplexqp
