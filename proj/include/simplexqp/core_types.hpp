// SPDX-License-Identifier: Apache-2.0
//
// Value types shared by every solver component. All of them validate on
// construction and are immutable afterwards, so they can be shared freely
// between threads.

#pragma once

#include <cstddef>
#include <initializer_list>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

namespace simplexqp {

using RealVector = std::vector<double>;

/// Throws InvalidArgument naming `what` if any component is NaN or infinite.
void require_finite(std::span<const double> values, const char* what);

/// Strictly ascending set of 0-based positions.
class IndexSet {
 public:
  IndexSet() = default;

  /// `indices` must be strictly ascending and every entry < `universe`.
  IndexSet(std::vector<std::size_t> indices, std::size_t universe);

  /// Sorts `indices`; duplicates and out-of-range entries are rejected.
  static IndexSet from_unordered(std::vector<std::size_t> indices, std::size_t universe);

  /// {0, ..., universe - 1}
  static IndexSet all(std::size_t universe);

  /// Positions where `values` is exactly zero.
  static IndexSet zeros_of(std::span<const double> values);

  bool contains(std::size_t index) const;
  bool empty() const { return indices_.empty(); }
  std::size_t size() const { return indices_.size(); }
  std::size_t operator[](std::size_t k) const { return indices_[k]; }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }
  const std::vector<std::size_t>& indices() const { return indices_; }

  IndexSet difference(const IndexSet& other) const;
  IndexSet complement(std::size_t universe) const;

  /// Membership mask of length `universe`.
  std::vector<bool> mask(std::size_t universe) const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::size_t> indices_;
};

/// Dense row-major matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> row_major);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> data() const { return data_; }

  /// y = this * x via the active kernel table.
  RealVector multiply(std::span<const double> x) const;

  /// Square submatrix on the rows and columns listed in `keep`.
  Matrix principal_submatrix(const IndexSet& keep) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// q(alpha) = 1/2 alpha' H alpha - alpha' c over the standard simplex.
/// H is symmetrized as (H + H')/2 on construction; it need not be PSD.
class QPProblem {
 public:
  QPProblem(Matrix hessian, RealVector linear);

  std::size_t dimension() const { return linear_.size(); }
  const Matrix& hessian() const { return hessian_; }
  const RealVector& linear() const { return linear_; }

 private:
  Matrix hessian_;
  RealVector linear_;
};

/// A point of the standard simplex. Construction repairs round-off and
/// rejects anything else:
///   - components in [-kRepairTolerance, 0) are set to exactly 0,
///   - a component sum within kRepairTolerance of 1 is rescaled to 1 when
///     it is off by more than kRescaleThreshold,
///   - larger violations and non-finite values throw InvalidArgument.
class SimplexPoint {
 public:
  static constexpr double kRepairTolerance = 1e-9;
  static constexpr double kRescaleThreshold = 1e-13;

  explicit SimplexPoint(RealVector alpha);

  static SimplexPoint uniform(std::size_t n);
  static SimplexPoint vertex(std::size_t n, std::size_t k);

  std::size_t size() const { return alpha_.size(); }
  double operator[](std::size_t i) const { return alpha_[i]; }
  const RealVector& values() const { return alpha_; }
  operator std::span<const double>() const { return alpha_; }

 private:
  RealVector alpha_;
};

struct SolverConfig {
  double epsilon = 1e-8;
  double theta1 = std::numbers::pi / 18.0;
  double theta2 = std::numbers::pi / 90.0;
  std::optional<std::size_t> max_outer_iterations;  // default 10 n + 1000
  double cg_zero_tolerance = 1e-14;
  double active_tolerance = 0.0;
  bool trace_enabled = false;

  /// Throws InvalidArgument unless epsilon > 0 and 0 < theta2 <= theta1 < pi.
  void validate() const;
  std::size_t iteration_limit(std::size_t n) const;
};

/// 1/2 a' H a - a' c
double objective(const QPProblem& problem, std::span<const double> alpha);
double objective(const QPProblem& problem, const SimplexPoint& point);

/// H a - c
RealVector gradient(const QPProblem& problem, std::span<const double> alpha);
RealVector gradient(const QPProblem& problem, const SimplexPoint& point);

}  // namespace simplexqp
