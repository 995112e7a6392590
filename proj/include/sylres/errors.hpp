#pragma once

#include <stdexcept>
#include <string>

namespace sylres {

// Raised when a group enumeration would exceed the configured element budget.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an exact computation that must produce a nonnegative integer
// does not.  This always signals an arithmetic bug, never bad input.
struct IntegralityError : std::logic_error {
  explicit IntegralityError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace sylres
