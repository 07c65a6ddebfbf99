#pragma once

#include <stdexcept>
#include <string>

namespace chmc {

// Violated step-size or argument contract. CLI maps this to exit code 2.
class precondition_error : public std::invalid_argument {
 public:
  explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

// Runtime numerical failure (divergence, non-finite values). CLI exit code 1.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace chmc
