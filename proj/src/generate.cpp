// SPDX-License-Identifier: Apache-2.0

#include "simplexqp/generate.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "simplexqp/error.hpp"

namespace simplexqp {

double NormalSource::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double NormalSource::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double phase = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(phase);
  has_spare_ = true;
  return radius * std::cos(phase);
}

std::size_t NormalSource::index(std::size_t lo, std::size_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::size_t>(engine_() % span);
}

ProblemKind parse_problem_kind(std::string_view name) {
  if (name == "convex") return ProblemKind::convex;
  if (name == "indefinite") return ProblemKind::indefinite;
  throw InvalidArgument("unknown problem kind '" + std::string(name) + "'");
}

QPProblem generate_problem(std::size_t n, ProblemKind kind, std::uint64_t seed) {
  if (n == 0) throw InvalidArgument("problem dimension must be at least 1");
  NormalSource rng(seed);
  Matrix draw(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) draw(r, c) = rng.normal();
  }

  Matrix h(n, n);
  if (kind == ProblemKind::convex) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = r; c < n; ++c) {
        double acc = 0.0;
        for (std::size_t k = 0; k < n; ++k) acc += draw(k, r) * draw(k, c);
        h(r, c) = acc;
        h(c, r) = acc;
      }
      h(r, r) += 1e-3;
    }
  } else {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) h(r, c) = 0.5 * (draw(r, c) + draw(c, r));
    }
  }

  RealVector linear(n);
  for (double& v : linear) v = rng.normal();
  return QPProblem(std::move(h), std::move(linear));
}

}  // namespace simplexqp
