#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace phrecon {

// Base of every error the toolkit raises. Violations of general position
// found by validate() are data, not errors, and do not derive from this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroDirection : public Error {
 public:
  ZeroDirection() : Error("direction vector is zero") {}
};

class ParallelLines : public Error {
 public:
  ParallelLines() : Error("lines are parallel") {}
};

class CoincidentPoints : public Error {
 public:
  CoincidentPoints() : Error("points coincide") {}
};

// Two vertices sit at the same height along the filtration direction.
class DegenerateDirection : public Error {
 public:
  DegenerateDirection(std::size_t first, std::size_t second)
      : Error("vertices " + std::to_string(first) + " and " + std::to_string(second) +
              " have equal height along the direction"),
        first_(first),
        second_(second) {}

  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

class DuplicateHeights : public Error {
 public:
  explicit DuplicateHeights(double height)
      : Error("two births coincide at height " + std::to_string(height)) {}
};

class WrongCardinality : public Error {
 public:
  explicit WrongCardinality(std::size_t found)
      : Error("expected exactly one zero-dimensional feature, found " + std::to_string(found)) {}
};

class GenerationFailed : public Error {
 public:
  using Error::Error;
};

class RetryExhausted : public Error {
 public:
  using Error::Error;
};

class DegeneratePoints : public Error {
 public:
  using Error::Error;
};

class Overflow : public Error {
 public:
  using Error::Error;
};

}  // namespace phrecon
