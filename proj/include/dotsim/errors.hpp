// Copyright 2026 The dotsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace dotsim {

/// Base class for all dotsim-specific failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested sector constraints admit no basis states.
class EmptySectorError : public Error {
 public:
  using Error::Error;
};

/// Lowest eigenvalue is (numerically) degenerate, so no unique ground
/// state can be returned.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

/// State violates the amplitude-pair symmetry required to split it into
/// charge and spin ebit weights.
class AsymmetricStateError : public Error {
 public:
  using Error::Error;
};

/// Conditional complement statistics are not a point mass, i.e. the state
/// mixes conservation sectors.
class MixedSectorError : public Error {
 public:
  using Error::Error;
};

/// Qubit readout found weight outside the logical span.
class DecodingError : public Error {
 public:
  DecodingError(const std::string& what, double leaked)
      : Error(what), leaked_weight(leaked) {}

  double leaked_weight = 0.0;
};

/// Measurement outcome lies outside the channel's herald set; no
/// correction is defined for it.
class FilteredOutcomeError : public Error {
 public:
  using Error::Error;
};

}  // namespace dotsim
