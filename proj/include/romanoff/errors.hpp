#pragma once

#include <stdexcept>
#include <string>

namespace romanoff {

// Bad caller-supplied parameter (CLI exit code 2).
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// Input outside the mathematical domain of an operation (exit code 2).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// The extremal construction has no prime in (y, z].
class ConstructionError : public DomainError {
 public:
  explicit ConstructionError(const std::string& what) : DomainError(what) {}
};

// Argument exceeds the range covered by a precomputed table (exit code 3).
class RangeError : public std::out_of_range {
 public:
  explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

// Memory cap, work budget or integer width exceeded (exit code 3).
class CapacityError : public std::length_error {
 public:
  explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

}  // namespace romanoff
