// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

namespace simplexqp {

struct BenchRow {
  std::size_t n = 0;
  double median_seconds = 0.0;
};

/// Median wall time of project_partial_sign over `reps` runs per size, on
/// standard normal g with each coordinate sign-constrained with
/// probability 1/2. Input generation is outside the timed region.
std::vector<BenchRow> bench_projection(const std::vector<std::size_t>& sizes, std::size_t reps,
                                       std::uint64_t seed);

}  // namespace simplexqp
