// SPDX-License-Identifier: Apache-2.0

#include "simplexqp/directions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "simplexqp/error.hpp"
#include "simplexqp/kernels.hpp"
#include "simplexqp/projection.hpp"

namespace simplexqp {

namespace {

constexpr double kDegenerateNorm = 1e-12;

}  // namespace

IndexSet binding_set(const IndexSet& working, std::span<const double> d) {
  std::vector<std::size_t> out;
  for (std::size_t i : working) {
    if (d[i] >= 0.0) out.push_back(i);
  }
  return IndexSet(std::move(out), d.size());
}

RealVector mask_gradient(std::span<const double> d, const IndexSet& mask) {
  RealVector out(d.begin(), d.end());
  for (std::size_t i : mask) out.at(i) = 0.0;
  return out;
}

RealVector project_direction(std::span<const double> g, const IndexSet& fixed,
                             const IndexSet& sign_constrained) {
  const std::size_t n = g.size();
  const IndexSet free = fixed.complement(n);
  RealVector out(n, 0.0);
  if (free.empty()) return out;

  // Gather the free coordinates and remap the sign constraints into them.
  RealVector sub(free.size());
  std::vector<std::size_t> sub_constrained;
  for (std::size_t k = 0; k < free.size(); ++k) {
    sub[k] = g[free[k]];
    if (sign_constrained.contains(free[k])) sub_constrained.push_back(k);
  }
  const ProjectionProblem problem(std::move(sub), IndexSet(std::move(sub_constrained), free.size()));
  const ProjectionCertificate cert = project_partial_sign(problem);
  for (std::size_t k = 0; k < free.size(); ++k) out[free[k]] = cert.x[k];
  return out;
}

double angle_between(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) throw DimensionError("angle_between: length mismatch");
  const double nu = std::sqrt(kernels::squared_norm(u));
  const double nv = std::sqrt(kernels::squared_norm(v));
  if (nu < kDegenerateNorm || nv < kDegenerateNorm) return std::numbers::pi;
  const double cosine = std::clamp(kernels::dot(u, v) / (nu * nv), -1.0, 1.0);
  return std::acos(cosine);
}

RealVector multiplier_estimates(std::span<const double> d, const IndexSet& working) {
  const std::size_t n = d.size();
  double total = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0, k = 0; i < n; ++i) {
    if (k < working.size() && working[k] == i) {
      ++k;
      continue;
    }
    total += d[i];
    ++count;
  }
  const double lambda = count == 0 ? 0.0 : total / static_cast<double>(count);
  RealVector out(d.begin(), d.end());
  for (double& v : out) v -= lambda;
  return out;
}

DirectionPair compute_directions(std::span<const double> d, const IndexSet& working,
                                 const SimplexPoint& alpha) {
  if (d.size() != alpha.size()) throw DimensionError("gradient and iterate lengths differ");
  const IndexSet zeros = IndexSet::zeros_of(alpha.values());

  DirectionPair out;
  out.binding = binding_set(working, multiplier_estimates(d, working));
  out.reduced = project_direction(mask_gradient(d, working), working, zeros);
  out.projected = project_direction(mask_gradient(d, out.binding), out.binding, zeros);
  out.angle = angle_between(out.projected, out.reduced);
  return out;
}

}  // namespace simplexqp
