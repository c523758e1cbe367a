//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMH_ERROR_HPP_
#define SMH_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace smh {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A node with degree zero where the pipeline requires degree >= 1.
struct IsolatedNodeError : Error {
  using Error::Error;
};

/// The iterative eigensolver did not reach tolerance within its budget.
struct ConvergenceFailure : Error {
  using Error::Error;
};

/// Vector/matrix sizes do not agree.
struct DimensionMismatch : Error {
  using Error::Error;
};

/// Paired input vectors have different lengths.
struct LengthMismatch : Error {
  using Error::Error;
};

/// SMILES (or other text) rejected; `offset` is the byte position.
struct ParseError : Error {
  std::size_t offset;
  ParseError(const std::string& msg, std::size_t at)
      : Error(msg + " (at byte " + std::to_string(at) + ")"), offset(at) {}
};

struct IoError : Error {
  using Error::Error;
};

struct MissingColumnError : Error {
  using Error::Error;
};

struct EmptyDatasetError : Error {
  using Error::Error;
};

/// Target vector carries no usable spread (e.g. min == max).
struct DegenerateTargetsError : Error {
  using Error::Error;
};

struct InsufficientDataError : Error {
  using Error::Error;
};

struct NonFiniteTargetError : Error {
  using Error::Error;
};

/// Every candidate target has zero sampling weight.
struct AllZeroWeightsError : Error {
  using Error::Error;
};

/// Reconstruction produced a graph with no edges.
struct EmptyGraphError : Error {
  using Error::Error;
};

/// Covariance factorization failed even after ridge escalation.
struct CholeskyFailure : Error {
  using Error::Error;
};

struct EmptyCollectionError : Error {
  using Error::Error;
};

}  // namespace smh

#endif  // SMH_ERROR_HPP_
