#pragma once

#include <stdexcept>
#include <string>

namespace unit_shapes {

/// Adaptive quadrature could not reach the requested tolerance.
class QuadratureFailure : public std::runtime_error {
 public:
  explicit QuadratureFailure(const std::string& what) : std::runtime_error(what) {}
};

/// A parameter lies outside the domain of a family or operation.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// An iterative search hit its iteration cap before meeting its tolerance.
class NotConverged : public std::runtime_error {
 public:
  explicit NotConverged(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed shape input (open chain, degenerate piece, bad JSON).
class ShapeError : public std::invalid_argument {
 public:
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace unit_shapes
