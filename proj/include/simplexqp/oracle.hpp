// SPDX-License-Identifier: Apache-2.0
//
// Exhaustive active-set enumeration. Exponential in the dimension and only
// meant as ground truth for tests and the `oracle` CLI subcommand.

#pragma once

#include <cstddef>
#include <vector>

#include "simplexqp/core_types.hpp"
#include "simplexqp/projection.hpp"

namespace simplexqp {

struct OracleSolution {
  RealVector x_or_alpha;
  IndexSet active_set;
  double objective = 0.0;
  double kkt_residual = 0.0;
};

inline constexpr std::size_t kProjectionOracleGuard = 20;
inline constexpr std::size_t kQPOracleGuard = 12;

/// Tries every subset S of G as the zero set and keeps the KKT-consistent
/// candidate closest to g. Throws InvalidArgument when |G| > 20 and
/// InternalError if no subset passes.
RealVector oracle_project(const ProjectionProblem& problem);

/// Every KKT point with a nonsingular reduced system, in enumeration order
/// (ascending zero-set size, then lexicographic).
std::vector<OracleSolution> oracle_qp_candidates(const QPProblem& problem,
                                                 std::size_t guard = kQPOracleGuard);

/// Minimum-objective KKT point; ties keep the first one found.
/// Throws InvalidArgument when n > guard and InternalError if nothing
/// survives.
OracleSolution oracle_qp(const QPProblem& problem, std::size_t guard = kQPOracleGuard);

}  // namespace simplexqp
