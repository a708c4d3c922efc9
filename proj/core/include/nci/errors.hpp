#pragma once

#include <stdexcept>
#include <string>

namespace nci {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A domain type was constructed from values violating its invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Benchmark quadratic form is zero (all weight on one node, or an
/// all-zero benchmark matrix): the index ratio is undefined.
class DegenerateBenchmark : public Error {
 public:
  using Error::Error;
};

/// Density-normalized index requested on a graph with no edges.
class EmptyGraph : public Error {
 public:
  using Error::Error;
};

/// Link probability outside the open interval (0, 1).
class InvalidProbability : public Error {
 public:
  using Error::Error;
};

/// Multi-layer inputs disagree on node count or layer count.
class LayerMismatch : public Error {
 public:
  using Error::Error;
};

/// Degree sequence fails the Erdos-Gallai realizability test.
class NonGraphicalSequence : public Error {
 public:
  using Error::Error;
};

/// Instance exceeds the configured size cap of an exhaustive solver.
class TooLarge : public Error {
 public:
  using Error::Error;
};

/// Coefficient matrix input is not square.
class NonSquare : public Error {
 public:
  using Error::Error;
};

/// Price panel contains a non-positive entry; log-returns undefined.
class NonPositivePrice : public Error {
 public:
  using Error::Error;
};

/// A return column is constant; its correlations are undefined.
class ZeroVariance : public Error {
 public:
  using Error::Error;
};

/// Scalar argument outside its admissible range.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// Distance input contains NaN or infinity.
class NonFinite : public Error {
 public:
  using Error::Error;
};

/// Time series shorter than the requested window.
class InsufficientData : public Error {
 public:
  using Error::Error;
};

/// Fixed-size scenario generator invoked with an unsupported node count.
class UnsupportedSize : public Error {
 public:
  using Error::Error;
};

/// Input file is malformed; message carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  explicit ParseError(const std::string& what) : Error(what), line_(0) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Node labels of two input files do not agree; message lists offenders.
class LabelMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace nci
