// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace simplexqp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands whose sizes do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input that violates a documented precondition (non-finite values,
/// out-of-range indices, empty vectors, bad configuration).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An invariant the algorithms guarantee was observed broken. Reaching one
/// of these is a bug, not a property of the input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace simplexqp
