// SPDX-License-Identifier: Apache-2.0

#include "simplexqp/io.hpp"

#include <cmath>
#include <set>

#include "simplexqp/error.hpp"

namespace simplexqp::io {

namespace {

void reject_unknown_keys(const Json& doc, const std::set<std::string>& allowed, const char* what) {
  if (!doc.is_object()) throw FormatError(std::string(what) + ": document must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (!allowed.contains(key)) throw FormatError(std::string(what) + ": unknown key '" + key + "'");
  }
}

const Json& require_key(const Json& doc, const char* key) {
  if (!doc.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

RealVector number_array(const Json& value, const std::string& field) {
  if (!value.is_array()) throw FormatError(field + ": expected an array of numbers");
  RealVector out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (!value[i].is_number()) {
      throw FormatError(field + "[" + std::to_string(i) + "]: expected a number");
    }
    const double v = value[i].get<double>();
    if (!std::isfinite(v)) throw FormatError(field + "[" + std::to_string(i) + "]: not finite");
    out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> index_array(const Json& value, const std::string& field) {
  if (!value.is_array()) throw FormatError(field + ": expected an array of indices");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (!value[i].is_number_integer() || value[i].get<long long>() < 0) {
      throw FormatError(field + "[" + std::to_string(i) + "]: expected a non-negative integer");
    }
    out.push_back(value[i].get<std::size_t>());
  }
  return out;
}

Json index_json(const IndexSet& set) { return Json(set.indices()); }

}  // namespace

SimplexPoint ProblemFile::start_or_uniform() const {
  return start ? *start : SimplexPoint::uniform(problem.dimension());
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

ProblemFile parse_problem(const Json& doc) {
  reject_unknown_keys(doc, {"n", "hessian", "linear", "start"}, "problem");
  const Json& n_json = require_key(doc, "n");
  if (!n_json.is_number_integer() || n_json.get<long long>() < 1) {
    throw FormatError("n: expected a positive integer");
  }
  const auto n = n_json.get<std::size_t>();

  const Json& rows = require_key(doc, "hessian");
  if (!rows.is_array() || rows.size() != n) {
    throw FormatError("hessian: expected " + std::to_string(n) + " rows");
  }
  std::vector<double> data;
  data.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::string field = "hessian[" + std::to_string(r) + "]";
    RealVector row = number_array(rows[r], field);
    if (row.size() != n) throw FormatError(field + ": expected " + std::to_string(n) + " entries");
    data.insert(data.end(), row.begin(), row.end());
  }

  RealVector linear = number_array(require_key(doc, "linear"), "linear");
  if (linear.size() != n) throw FormatError("linear: expected " + std::to_string(n) + " entries");

  std::optional<SimplexPoint> start;
  if (doc.contains("start")) {
    RealVector s = number_array(doc.at("start"), "start");
    if (s.size() != n) throw FormatError("start: expected " + std::to_string(n) + " entries");
    try {
      start.emplace(std::move(s));
    } catch (const InvalidArgument& e) {
      throw FormatError(std::string("start: ") + e.what());
    }
  }
  return ProblemFile{QPProblem(Matrix(n, n, std::move(data)), std::move(linear)), std::move(start)};
}

ProjectionProblem parse_projection(const Json& doc) {
  reject_unknown_keys(doc, {"g", "constrained"}, "projection");
  RealVector g = number_array(require_key(doc, "g"), "g");
  if (g.empty()) throw FormatError("g: expected at least one entry");
  std::vector<std::size_t> idx;
  if (doc.contains("constrained")) idx = index_array(doc.at("constrained"), "constrained");
  const std::size_t n = g.size();
  try {
    return ProjectionProblem(std::move(g), IndexSet::from_unordered(std::move(idx), n));
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("constrained: ") + e.what());
  }
}

Json problem_to_json(const QPProblem& problem, const std::optional<SimplexPoint>& start) {
  const std::size_t n = problem.dimension();
  Json rows = Json::array();
  for (std::size_t r = 0; r < n; ++r) {
    const auto row = problem.hessian().row(r);
    rows.push_back(Json(std::vector<double>(row.begin(), row.end())));
  }
  Json doc;
  doc["n"] = n;
  doc["hessian"] = std::move(rows);
  doc["linear"] = problem.linear();
  if (start) doc["start"] = start->values();
  return doc;
}

Json config_to_json(const SolverConfig& config, std::size_t n) {
  Json doc;
  doc["epsilon"] = config.epsilon;
  doc["theta1"] = config.theta1;
  doc["theta2"] = config.theta2;
  doc["max_outer_iterations"] = config.iteration_limit(n);
  doc["cg_zero_tolerance"] = config.cg_zero_tolerance;
  doc["active_tolerance"] = config.active_tolerance;
  doc["trace_enabled"] = config.trace_enabled;
  return doc;
}

Json solution_to_json(const SolveResult& result, const SolverConfig& config, std::size_t n) {
  Json doc;
  doc["alpha"] = result.alpha.values();
  doc["objective"] = result.objective;
  doc["status"] = std::string(to_string(result.status));
  doc["kkt_residual"] = result.kkt_residual;
  doc["iterations"] = result.iterations;
  doc["cg_invocations"] = result.cg_invocations;
  doc["cg_rejections"] = result.cg_rejections;
  doc["config"] = config_to_json(config, n);
  if (result.trace) {
    Json trace = Json::array();
    for (const IterationRecord& rec : *result.trace) {
      Json item;
      item["iteration"] = rec.iteration;
      item["objective"] = rec.objective;
      item["direction_used"] = std::string(to_string(rec.direction_used));
      item["angle"] = rec.angle;
      item["step"] = rec.step;
      item["working_set_size"] = rec.working_set_size;
      item["event"] = rec.event ? Json(std::string(to_string(*rec.event))) : Json(nullptr);
      item["check_angle"] = rec.check_angle;
      item["stable_count"] = rec.stable_count;
      item["cg_allowed"] = rec.cg_allowed;
      item["working_set"] = index_json(rec.working_set);
      item["alpha"] = rec.alpha;
      trace.push_back(std::move(item));
    }
    doc["trace"] = std::move(trace);
  }
  return doc;
}

Json oracle_to_json(const OracleSolution& solution, std::size_t guard, std::size_t candidates) {
  Json doc;
  doc["alpha"] = solution.x_or_alpha;
  doc["objective"] = solution.objective;
  doc["status"] = "oracle";
  doc["kkt_residual"] = solution.kkt_residual;
  doc["iterations"] = candidates;
  doc["active_set"] = index_json(solution.active_set);
  doc["config"] = Json{{"guard", guard}};
  return doc;
}

Json certificate_to_json(const ProjectionCertificate& cert, double kkt_residual) {
  Json doc;
  doc["x"] = cert.x;
  doc["lambda"] = cert.lambda;
  doc["mu"] = cert.mu;
  doc["zero_set"] = index_json(cert.zero_set);
  doc["mean_free"] = cert.mean_free;
  doc["kkt_residual"] = kkt_residual;
  return doc;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace simplexqp::io
