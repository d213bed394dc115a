#pragma once

#include <stdexcept>
#include <string>

namespace semideriv {

/// Operands belong to different semirings, or a matrix is over the wrong one.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dimension mismatch, or an index outside the upper triangle / valid range.
class ShapeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Malformed literal, matrix file, zero-set or pattern text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive enumeration requested beyond the supported size.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace semideriv
