// SPDX-License-Identifier: Apache-2.0
//
// Least-squares projection onto the zero-sum hyperplane with sign
// constraints on a subset of coordinates:
//
//   minimize ||x - g||^2  subject to  sum(x) = 0,  x_i <= 0 for i in G.
//
// The solver sorts g once, then walks the constrained coordinates from the
// largest value down, zeroing each one that still exceeds the running mean
// of the free coordinates. Cost is dominated by the sort.

#pragma once

#include <vector>

#include "simplexqp/core_types.hpp"

namespace simplexqp {

struct ProjectionProblem {
  RealVector g;
  IndexSet constrained;  // G

  /// Validates finiteness and index range. Throws InvalidArgument.
  ProjectionProblem(RealVector g, IndexSet constrained);
};

/// Optimal point together with the KKT multipliers that certify it:
///   2x - 2g - lambda e + mu = 0,  mu >= 0 on G, mu = 0 off G, mu_i x_i = 0.
struct ProjectionCertificate {
  RealVector x;
  double lambda = 0.0;
  RealVector mu;
  IndexSet zero_set;       // coordinates of G pinned to zero
  double mean_free = 0.0;  // mean of g over the complement of zero_set
};

/// Partial-sign projection. Ties between equal g values keep input order,
/// which selects the minimizer consistent with the ordering lemma.
/// Throws InvalidArgument for an empty g.
ProjectionCertificate project_partial_sign(const ProjectionProblem& problem);

/// Same as above, also recording the running threshold after every removal
/// (first entry is the initial mean). Used to check that it never increases.
ProjectionCertificate project_partial_sign(const ProjectionProblem& problem,
                                           std::vector<double>& threshold_trace);

/// g minus its mean. Throws InvalidArgument for an empty g.
RealVector project_hyperplane(std::span<const double> g);

/// Largest violation among sum, primal sign, dual sign, complementary
/// slackness and stationarity residuals.
double verify_projection_kkt(const ProjectionProblem& problem, const ProjectionCertificate& cert);

}  // namespace simplexqp
