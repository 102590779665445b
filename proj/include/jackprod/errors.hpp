#pragma once

#include <stdexcept>
#include <string>

namespace jackprod {

/// Input outside the mathematical domain of an operation (negative
/// coordinates, |u| > 1, partitions longer than the ambient n, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed textual input (partition, rational, vector).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two partitions in the triangular solve share an eigenvalue.
class DegenerateEigenvalue : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A rising-factorial factor of the hypergeometric series vanished.
class PoleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Floating point result left its admissible range (e.g. a negative
/// discriminant beyond rounding noise).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Neither candidate Bessel order reproduces the series representation.
class ResolutionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace jackprod
