// SPDX-License-Identifier: Apache-2.0
//
// Seeded random instances. Draws come from std::mt19937_64, whose output
// sequence is fixed by the C++ standard, mapped to doubles in [0, 1) with
// the top 53 bits and to standard normals with the Box-Muller transform.
// The same seed therefore yields the same instance on every platform with
// a conforming libm.

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "simplexqp/core_types.hpp"

namespace simplexqp {

class NormalSource {
 public:
  explicit NormalSource(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform();
  /// Standard normal.
  double normal();
  /// Uniform integer in [lo, hi].
  std::size_t index(std::size_t lo, std::size_t hi);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

enum class ProblemKind { convex, indefinite };

/// Throws InvalidArgument for anything other than "convex" / "indefinite".
ProblemKind parse_problem_kind(std::string_view name);

/// convex:     H = A'A + 1e-3 I with A an n x n standard normal draw.
/// indefinite: H = (B + B')/2 with B an n x n standard normal draw.
/// The linear term is standard normal, drawn after the matrix.
QPProblem generate_problem(std::size_t n, ProblemKind kind, std::uint64_t seed);

}  // namespace simplexqp
