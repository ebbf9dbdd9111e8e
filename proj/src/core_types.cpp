// SPDX-License-Identifier: Apache-2.0

#include "simplexqp/core_types.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "simplexqp/error.hpp"
#include "simplexqp/kernels.hpp"

namespace simplexqp {

void require_finite(std::span<const double> values, const char* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw InvalidArgument(std::string(what) + ": component " + std::to_string(i) +
                            " is not finite");
    }
  }
}

// ---------------------------------------------------------------- IndexSet

IndexSet::IndexSet(std::vector<std::size_t> indices, std::size_t universe)
    : indices_(std::move(indices)) {
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (indices_[k] >= universe) {
      throw InvalidArgument("index " + std::to_string(indices_[k]) + " out of range for size " +
                            std::to_string(universe));
    }
    if (k > 0 && indices_[k] <= indices_[k - 1]) {
      throw InvalidArgument("index set must be strictly ascending");
    }
  }
}

IndexSet IndexSet::from_unordered(std::vector<std::size_t> indices, std::size_t universe) {
  std::sort(indices.begin(), indices.end());
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) {
    throw InvalidArgument("index set contains duplicates");
  }
  return IndexSet(std::move(indices), universe);
}

IndexSet IndexSet::all(std::size_t universe) {
  IndexSet out;
  out.indices_.resize(universe);
  for (std::size_t i = 0; i < universe; ++i) out.indices_[i] = i;
  return out;
}

IndexSet IndexSet::zeros_of(std::span<const double> values) {
  IndexSet out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 0.0) out.indices_.push_back(i);
  }
  return out;
}

bool IndexSet::contains(std::size_t index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

IndexSet IndexSet::difference(const IndexSet& other) const {
  IndexSet out;
  std::set_difference(indices_.begin(), indices_.end(), other.indices_.begin(),
                      other.indices_.end(), std::back_inserter(out.indices_));
  return out;
}

IndexSet IndexSet::complement(std::size_t universe) const {
  IndexSet out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < universe; ++i) {
    if (k < indices_.size() && indices_[k] == i) {
      ++k;
    } else {
      out.indices_.push_back(i);
    }
  }
  return out;
}

std::vector<bool> IndexSet::mask(std::size_t universe) const {
  std::vector<bool> out(universe, false);
  for (std::size_t i : indices_) out.at(i) = true;
  return out;
}

// ------------------------------------------------------------------ Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (data_.size() != rows * cols) {
    throw DimensionError("matrix data has " + std::to_string(data_.size()) + " entries, expected " +
                         std::to_string(rows * cols));
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

RealVector Matrix::multiply(std::span<const double> x) const {
  if (x.size() != cols_) {
    throw DimensionError("matrix has " + std::to_string(cols_) + " columns, vector has " +
                         std::to_string(x.size()) + " entries");
  }
  RealVector y(rows_);
  kernels::active().gemv(data_.data(), rows_, cols_, x.data(), y.data());
  return y;
}

Matrix Matrix::principal_submatrix(const IndexSet& keep) const {
  const std::size_t m = keep.size();
  Matrix out(m, m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) out(r, c) = (*this)(keep[r], keep[c]);
  }
  return out;
}

// --------------------------------------------------------------- QPProblem

QPProblem::QPProblem(Matrix hessian, RealVector linear)
    : hessian_(std::move(hessian)), linear_(std::move(linear)) {
  const std::size_t n = linear_.size();
  if (n == 0) throw InvalidArgument("problem dimension must be at least 1");
  if (hessian_.rows() != n || hessian_.cols() != n) {
    throw DimensionError("hessian is " + std::to_string(hessian_.rows()) + "x" +
                         std::to_string(hessian_.cols()) + " but linear term has length " +
                         std::to_string(n));
  }
  require_finite(hessian_.data(), "hessian");
  require_finite(linear_, "linear");
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r + 1; c < n; ++c) {
      const double avg = 0.5 * (hessian_(r, c) + hessian_(c, r));
      hessian_(r, c) = avg;
      hessian_(c, r) = avg;
    }
  }
}

// ------------------------------------------------------------ SimplexPoint

SimplexPoint::SimplexPoint(RealVector alpha) : alpha_(std::move(alpha)) {
  if (alpha_.empty()) throw InvalidArgument("simplex point must have at least one component");
  require_finite(alpha_, "simplex point");
  for (std::size_t i = 0; i < alpha_.size(); ++i) {
    if (alpha_[i] < 0.0) {
      if (alpha_[i] < -kRepairTolerance) {
        throw InvalidArgument("simplex point component " + std::to_string(i) + " is negative (" +
                              std::to_string(alpha_[i]) + ")");
      }
      alpha_[i] = 0.0;
    }
  }
  const double total = kernels::sum(alpha_);
  if (std::abs(total - 1.0) > kRepairTolerance) {
    throw InvalidArgument("simplex point components sum to " + std::to_string(total) +
                          ", expected 1");
  }
  if (std::abs(total - 1.0) > kRescaleThreshold) {
    for (double& a : alpha_) a /= total;
  }
}

SimplexPoint SimplexPoint::uniform(std::size_t n) {
  if (n == 0) throw InvalidArgument("simplex point must have at least one component");
  return SimplexPoint(RealVector(n, 1.0 / static_cast<double>(n)));
}

SimplexPoint SimplexPoint::vertex(std::size_t n, std::size_t k) {
  if (k >= n) throw InvalidArgument("vertex index out of range");
  RealVector v(n, 0.0);
  v[k] = 1.0;
  return SimplexPoint(std::move(v));
}

// ------------------------------------------------------------ SolverConfig

void SolverConfig::validate() const {
  if (!(epsilon > 0.0)) throw InvalidArgument("epsilon must be positive");
  if (!(theta2 > 0.0 && theta2 <= theta1 && theta1 < std::numbers::pi)) {
    throw InvalidArgument("angles must satisfy 0 < theta2 <= theta1 < pi");
  }
  if (!(cg_zero_tolerance >= 0.0)) throw InvalidArgument("cg_zero_tolerance must be >= 0");
  if (active_tolerance != 0.0) {
    // membership in the working set is exact comparison with zero
    throw InvalidArgument("only active_tolerance = 0 is supported");
  }
  if (max_outer_iterations && *max_outer_iterations == 0) {
    throw InvalidArgument("max_outer_iterations must be positive");
  }
}

std::size_t SolverConfig::iteration_limit(std::size_t n) const {
  return max_outer_iterations.value_or(10 * n + 1000);
}

// ---------------------------------------------------------------- objective

double objective(const QPProblem& problem, std::span<const double> alpha) {
  if (alpha.size() != problem.dimension()) {
    throw DimensionError("point has " + std::to_string(alpha.size()) + " components, problem has " +
                         std::to_string(problem.dimension()));
  }
  const RealVector h_alpha = problem.hessian().multiply(alpha);
  return 0.5 * kernels::dot(alpha, h_alpha) - kernels::dot(alpha, problem.linear());
}

double objective(const QPProblem& problem, const SimplexPoint& point) {
  return objective(problem, std::span<const double>(point.values()));
}

RealVector gradient(const QPProblem& problem, std::span<const double> alpha) {
  if (alpha.size() != problem.dimension()) {
    throw DimensionError("point has " + std::to_string(alpha.size()) + " components, problem has " +
                         std::to_string(problem.dimension()));
  }
  RealVector d = problem.hessian().multiply(alpha);
  kernels::axpy(-1.0, problem.linear(), d);
  return d;
}

RealVector gradient(const QPProblem& problem, const SimplexPoint& point) {
  return gradient(problem, std::span<const double>(point.values()));
}

}  // namespace simplexqp
