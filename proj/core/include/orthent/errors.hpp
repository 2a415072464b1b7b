#pragma once

#include <stdexcept>
#include <string>

namespace orthent {

/// Input text could not be parsed into a numeric matrix. The message pins
/// down the offending row/column so CLI users can fix their file.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A numeric precondition failed: a matrix is not orthogonal within
/// tolerance, a point is not stationary, a retraction produced garbage.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace orthent
