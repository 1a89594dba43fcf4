#pragma once

#include <stdexcept>
#include <string>

namespace fairaudit {

// Input data failed validation: bad CSV cell, missing column, empty group,
// mismatched lengths. The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A measure, comparison, or report was configured with unknown names or
// incompatible building blocks.
class SpecError : public std::runtime_error {
 public:
  explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fairaudit
