// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "simplexqp/core_types.hpp"

namespace simplexqp {

/// Feasible search directions at one iterate. The solver steps along
/// minus the chosen direction.
struct DirectionPair {
  RealVector reduced;    // projection of d masked by the working set
  RealVector projected;  // projection of d masked by the binding set
  double angle = 0.0;    // radians in [0, pi]
  IndexSet binding;
};

/// {i in working : d_i >= 0}
IndexSet binding_set(const IndexSet& working, std::span<const double> d);

/// Copy of d with the masked coordinates set to zero.
RealVector mask_gradient(std::span<const double> d, const IndexSet& mask);

/// Keeps `fixed` at zero and projects the remaining coordinates onto the
/// zero-sum hyperplane with x_i <= 0 on sign_constrained \ fixed.
RealVector project_direction(std::span<const double> g, const IndexSet& fixed,
                             const IndexSet& sign_constrained);

/// arccos of the normalized inner product, clamped to [-1, 1]. Returns pi
/// when either norm is below 1e-12, so a vanishing direction never passes
/// a small-angle test.
double angle_between(std::span<const double> u, std::span<const double> v);

/// d minus the least-squares estimate of the equality multiplier, i.e. the
/// mean of d over the coordinates outside `working`. Entry i estimates the
/// multiplier of alpha_i >= 0.
RealVector multiplier_estimates(std::span<const double> d, const IndexSet& working);

/// Both directions and their angle. The binding set is taken on the
/// multiplier estimates rather than on raw d, so adding a constant to the
/// linear term (which leaves the problem unchanged) leaves the directions
/// unchanged too. The sign-constrained set is the exact zero set of alpha,
/// which need not coincide with `working`.
DirectionPair compute_directions(std::span<const double> d, const IndexSet& working,
                                 const SimplexPoint& alpha);

}  // namespace simplexqp
