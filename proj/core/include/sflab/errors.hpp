#pragma once

#include <stdexcept>
#include <string>

namespace sflab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A query needs valuation information finer than the working precision.
struct PrecisionError : Error {
  using Error::Error;
};

// A stated hypothesis of the statement under test does not hold.
struct HypothesisError : Error {
  using Error::Error;
};

// An enumeration would exceed the configured budget.
struct BudgetError : Error {
  using Error::Error;
};

// Invalid campaign configuration or CLI usage.
struct ConfigError : Error {
  using Error::Error;
};

// An internal algorithm claim failed; carries a human-readable trace.
struct InvariantError : Error {
  using Error::Error;
};

}  // namespace sflab
