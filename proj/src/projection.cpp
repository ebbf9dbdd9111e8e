// SPDX-License-Identifier: Apache-2.0

#include "simplexqp/projection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "simplexqp/error.hpp"
#include "simplexqp/kernels.hpp"

namespace simplexqp {

ProjectionProblem::ProjectionProblem(RealVector g_in, IndexSet constrained_in)
    : g(std::move(g_in)), constrained(std::move(constrained_in)) {
  require_finite(g, "g");
  // re-run the range check against this vector's length
  constrained = IndexSet(constrained.indices(), g.size());
}

namespace {

ProjectionCertificate project_impl(const ProjectionProblem& problem,
                                   std::vector<double>* threshold_trace) {
  const RealVector& g = problem.g;
  const std::size_t n = g.size();
  if (n == 0) throw InvalidArgument("cannot project an empty vector");

  // Descending by value, ascending index on ties.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&g](std::size_t lhs, std::size_t rhs) {
    return g[lhs] > g[rhs] || (g[lhs] == g[rhs] && lhs < rhs);
  });
  std::vector<std::size_t> rank(n);
  for (std::size_t k = 0; k < n; ++k) rank[order[k]] = k;

  std::vector<std::size_t> constrained_ranks;
  constrained_ranks.reserve(problem.constrained.size());
  for (std::size_t i : problem.constrained) constrained_ranks.push_back(rank[i]);
  std::sort(constrained_ranks.begin(), constrained_ranks.end());

  double total = kernels::sum(g);
  std::size_t free_count = n;
  double threshold = total / static_cast<double>(n);
  if (threshold_trace) threshold_trace->push_back(threshold);

  std::vector<bool> removed(n, false);  // indexed by original position
  for (std::size_t pos : constrained_ranks) {
    const std::size_t i = order[pos];
    if (!(g[i] > threshold)) break;
    // The last free coordinate always equals the threshold exactly (set
    // below), so this cannot trigger; it keeps the division well defined.
    if (free_count == 1) break;
    total -= g[i];
    --free_count;
    removed[i] = true;
    if (free_count == 1) {
      // Pin the threshold to the survivor so its x is exactly zero rather
      // than the round-off left in the running sum.
      const auto survivor = std::find(removed.begin(), removed.end(), false) - removed.begin();
      threshold = g[static_cast<std::size_t>(survivor)];
    } else {
      threshold = total / static_cast<double>(free_count);
    }
    if (threshold_trace) threshold_trace->push_back(threshold);
  }

  ProjectionCertificate cert;
  cert.x.resize(n);
  cert.mu.assign(n, 0.0);
  cert.mean_free = threshold;
  cert.lambda = -2.0 * threshold;
  std::vector<std::size_t> zeros;
  for (std::size_t i = 0; i < n; ++i) {
    if (removed[i]) {
      cert.x[i] = 0.0;
      cert.mu[i] = 2.0 * (g[i] - threshold);
      zeros.push_back(i);
    } else {
      cert.x[i] = g[i] - threshold;
    }
  }
  cert.zero_set = IndexSet(std::move(zeros), n);
  return cert;
}

}  // namespace

ProjectionCertificate project_partial_sign(const ProjectionProblem& problem) {
  return project_impl(problem, nullptr);
}

ProjectionCertificate project_partial_sign(const ProjectionProblem& problem,
                                           std::vector<double>& threshold_trace) {
  threshold_trace.clear();
  return project_impl(problem, &threshold_trace);
}

RealVector project_hyperplane(std::span<const double> g) {
  if (g.empty()) throw InvalidArgument("cannot project an empty vector");
  require_finite(g, "g");
  const double mean = kernels::sum(g) / static_cast<double>(g.size());
  RealVector x(g.begin(), g.end());
  for (double& v : x) v -= mean;
  return x;
}

double verify_projection_kkt(const ProjectionProblem& problem, const ProjectionCertificate& cert) {
  const std::size_t n = problem.g.size();
  if (cert.x.size() != n || cert.mu.size() != n) {
    throw DimensionError("certificate does not match the projection problem dimension");
  }
  double residual = std::abs(kernels::sum(cert.x));
  const auto in_g = problem.constrained.mask(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (in_g[i]) {
      residual = std::max(residual, std::max(cert.x[i], 0.0));
      residual = std::max(residual, std::max(-cert.mu[i], 0.0));
      residual = std::max(residual, std::abs(cert.mu[i] * cert.x[i]));
    } else {
      // multipliers vanish off G by definition
      residual = std::max(residual, std::abs(cert.mu[i]));
    }
    const double stationarity = 2.0 * cert.x[i] - 2.0 * problem.g[i] - cert.lambda + cert.mu[i];
    residual = std::max(residual, std::abs(stationarity));
  }
  return residual;
}

}  // namespace simplexqp
