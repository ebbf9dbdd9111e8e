// SPDX-License-Identifier: Apache-2.0

#include "simplexqp/bench.hpp"

#include <algorithm>
#include <chrono>

#include "simplexqp/error.hpp"
#include "simplexqp/generate.hpp"
#include "simplexqp/projection.hpp"

namespace simplexqp {

std::vector<BenchRow> bench_projection(const std::vector<std::size_t>& sizes, std::size_t reps,
                                       std::uint64_t seed) {
  if (reps == 0) throw InvalidArgument("bench needs at least one repetition");
  std::vector<BenchRow> rows;
  NormalSource rng(seed);
  for (std::size_t n : sizes) {
    if (n == 0) throw InvalidArgument("bench sizes must be positive");
    std::vector<double> times;
    for (std::size_t rep = 0; rep < reps; ++rep) {
      RealVector g(n);
      std::vector<std::size_t> constrained;
      for (std::size_t i = 0; i < n; ++i) {
        g[i] = rng.normal();
        if (rng.uniform() < 0.5) constrained.push_back(i);
      }
      const ProjectionProblem problem(std::move(g), IndexSet(std::move(constrained), n));

      const auto t0 = std::chrono::steady_clock::now();
      const ProjectionCertificate cert = project_partial_sign(problem);
      const auto t1 = std::chrono::steady_clock::now();
      if (cert.x.size() != n) throw InternalError("projection returned the wrong length");
      times.push_back(std::chrono::duration<double>(t1 - t0).count());
    }
    std::sort(times.begin(), times.end());
    const std::size_t mid = times.size() / 2;
    const double median =
        times.size() % 2 == 1 ? times[mid] : 0.5 * (times[mid - 1] + times[mid]);
    rows.push_back({n, median});
  }
  return rows;
}

}  // namespace simplexqp
