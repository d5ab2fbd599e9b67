#pragma once

#include <stdexcept>
#include <string>

namespace qnr {

// Raised when a variance or band computation would divide by n - dof <= 0.
class DegreesOfFreedomError : public std::runtime_error {
public:
  explicit DegreesOfFreedomError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when every kernel weight at an evaluation point is zero.
class EmptyNeighborhoodError : public std::runtime_error {
public:
  explicit EmptyNeighborhoodError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an input file cannot be parsed; the message names the offending
// row and column where known.
class CsvError : public std::runtime_error {
public:
  explicit CsvError(const std::string& what) : std::runtime_error(what) {}
};

// Raised for invalid run configuration (bad flag values, missing columns).
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qnr
