#pragma once

#include <stdexcept>

namespace censtail {

// Estimator or simulation could not be evaluated on the given data
// (vanishing risk set, zero denominator, no uncensored extremes, ...).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable or malformed input file.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace censtail
