// SPDX-License-Identifier: Apache-2.0
//
// JSON documents read and written by the command-line tool.
//
//   problem:    {"n", "hessian": [[...], ...], "linear": [...], "start"?: [...]}
//   projection: {"g": [...], "constrained": [...]}
//   solution:   {"alpha", "objective", "status", "kkt_residual", "iterations",
//                "cg_invocations", "cg_rejections", "config", "trace"?}
//
// Unknown keys are rejected. Doubles are written with the shortest decimal
// form that round-trips.

#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "simplexqp/error.hpp"
#include "simplexqp/core_types.hpp"
#include "simplexqp/oracle.hpp"
#include "simplexqp/projection.hpp"
#include "simplexqp/solver.hpp"

namespace simplexqp::io {

using Json = nlohmann::ordered_json;

/// Malformed document; the message names the offending field.
class FormatError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

struct ProblemFile {
  QPProblem problem;
  std::optional<SimplexPoint> start;

  SimplexPoint start_or_uniform() const;
};

Json parse_text(const std::string& text);

ProblemFile parse_problem(const Json& doc);
ProjectionProblem parse_projection(const Json& doc);

Json problem_to_json(const QPProblem& problem, const std::optional<SimplexPoint>& start = {});
Json config_to_json(const SolverConfig& config, std::size_t n);
Json solution_to_json(const SolveResult& result, const SolverConfig& config, std::size_t n);
Json oracle_to_json(const OracleSolution& solution, std::size_t guard, std::size_t candidates);
Json certificate_to_json(const ProjectionCertificate& cert, double kkt_residual);

/// Serialized form used for every document the tool writes.
std::string dump(const Json& doc);

}  // namespace simplexqp::io
