// SPDX-License-Identifier: Apache-2.0

#include "simplexqp/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "simplexqp/bench.hpp"
#include "simplexqp/error.hpp"
#include "simplexqp/generate.hpp"
#include "simplexqp/io.hpp"
#include "simplexqp/kernels.hpp"
#include "simplexqp/oracle.hpp"
#include "simplexqp/projection.hpp"
#include "simplexqp/solver.hpp"

namespace simplexqp::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw InvalidArgument("cannot write '" + out_path + "'");
  file << text;
}

struct SolveArgs {
  std::string input;
  std::string out;
  SolverConfig config;
  std::size_t max_iter = 0;
};

struct ProjectArgs {
  std::string input;
  std::string out;
};

struct GenerateArgs {
  std::size_t n = 0;
  std::string kind = "convex";
  std::uint64_t seed = 0;
  double density = 1.0;
  std::string out;
};

struct OracleArgs {
  std::string input;
  std::string out;
  std::size_t guard = kQPOracleGuard;
};

struct BenchArgs {
  std::vector<std::size_t> sizes{1000, 10000, 100000, 1000000};
  std::size_t reps = 5;
  std::uint64_t seed = 1;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  SolverConfig config = a.config;
  if (a.max_iter > 0) config.max_outer_iterations = a.max_iter;
  const io::ProblemFile file = io::parse_problem(io::parse_text(read_file(a.input)));
  const SolveResult result = solve(file.problem, file.start_or_uniform(), config);
  emit(io::dump(io::solution_to_json(result, config, file.problem.dimension())), a.out, out);
  return result.status == SolveStatus::max_iterations ? kNotConverged : kOk;
}

int cmd_project(const ProjectArgs& a, std::ostream& out) {
  const ProjectionProblem problem = io::parse_projection(io::parse_text(read_file(a.input)));
  const ProjectionCertificate cert = project_partial_sign(problem);
  emit(io::dump(io::certificate_to_json(cert, verify_projection_kkt(problem, cert))), a.out, out);
  return kOk;
}

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  const QPProblem problem = generate_problem(a.n, parse_problem_kind(a.kind), a.seed);
  emit(io::dump(io::problem_to_json(problem)), a.out, out);
  return kOk;
}

int cmd_oracle(const OracleArgs& a, std::ostream& out) {
  const io::ProblemFile file = io::parse_problem(io::parse_text(read_file(a.input)));
  const OracleSolution best = oracle_qp(file.problem, a.guard);
  const std::size_t subsets = (std::size_t{1} << file.problem.dimension()) - 1;
  emit(io::dump(io::oracle_to_json(best, a.guard, subsets)), a.out, out);
  return kOk;
}

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  out << "n,median_seconds\n";
  for (const BenchRow& row : bench_projection(a.sizes, a.reps, a.seed)) {
    out << row.n << ',' << io::Json(row.median_seconds).dump() << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quadratic programs on the standard simplex"};
  app.require_subcommand(1);
  std::string kernels_name;
  app.add_option("--kernels", kernels_name, "Kernel variant: scalar or avx2")
      ->check(CLI::IsMember({"scalar", "avx2"}));

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a problem file");
  solve_cmd->add_option("input", solve_args.input, "Problem JSON")->required();
  solve_cmd->add_option("--out", solve_args.out, "Write the solution here instead of stdout");
  solve_cmd->add_option("--epsilon", solve_args.config.epsilon, "Stop when the projected gradient norm drops below this");
  solve_cmd->add_option("--theta1", solve_args.config.theta1, "Direction-choice angle (radians)");
  solve_cmd->add_option("--theta2", solve_args.config.theta2, "CG-switch angle (radians)");
  solve_cmd->add_option("--max-iter", solve_args.max_iter, "Outer iteration limit (default 10n+1000)");
  solve_cmd->add_flag("--trace", solve_args.config.trace_enabled, "Include the per-iteration trace");

  ProjectArgs project_args;
  auto* project_cmd = app.add_subcommand("project", "Partial-sign projection of a vector");
  project_cmd->add_option("input", project_args.input, "Projection JSON")->required();
  project_cmd->add_option("--out", project_args.out);

  GenerateArgs gen_args;
  auto* gen_cmd = app.add_subcommand("generate", "Write a seeded random problem");
  gen_cmd->add_option("--n", gen_args.n, "Dimension")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--kind", gen_args.kind, "convex or indefinite")
      ->check(CLI::IsMember({"convex", "indefinite"}));
  gen_cmd->add_option("--seed", gen_args.seed);
  gen_cmd->add_option("--density-ignored", gen_args.density, "Accepted for compatibility; dense output");
  gen_cmd->add_option("--out", gen_args.out);

  OracleArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force active-set enumeration");
  oracle_cmd->add_option("input", oracle_args.input, "Problem JSON")->required();
  oracle_cmd->add_option("--guard", oracle_args.guard, "Largest dimension to enumerate");
  oracle_cmd->add_option("--out", oracle_args.out);

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Time the projection across sizes");
  bench_cmd->add_option("--sizes", bench_args.sizes)->delimiter(',');
  bench_cmd->add_option("--reps", bench_args.reps)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench_args.seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (!kernels_name.empty()) {
      kernels::select_backend(kernels_name == "avx2" ? kernels::Backend::avx2
                                                     : kernels::Backend::scalar);
    }
    if (solve_cmd->parsed()) return cmd_solve(solve_args, out);
    if (project_cmd->parsed()) return cmd_project(project_args, out);
    if (gen_cmd->parsed()) return cmd_generate(gen_args, out);
    if (oracle_cmd->parsed()) return cmd_oracle(oracle_args, out);
    if (bench_cmd->parsed()) return cmd_bench(bench_args, out);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace simplexqp::cli
