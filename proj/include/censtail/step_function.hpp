#pragma once

#include <cstddef>
#include <vector>

namespace censtail {

// Right-continuous step function: value_before_first on (-inf, knots[0]) and
// values[i] on [knots[i], knots[i+1]).  Knots are strictly increasing;
// evaluation is a binary search, O(log n) per query.
class StepFunction {
 public:
  StepFunction() = default;
  StepFunction(std::vector<double> knots, std::vector<double> values,
               double value_before_first);

  double operator()(double x) const;
  // Left limit: value just below x (sup over arguments strictly less than x).
  double left_limit(double x) const;

  const std::vector<double>& knots() const { return knots_; }
  const std::vector<double>& values() const { return values_; }
  double value_before_first() const { return value_before_first_; }
  std::size_t size() const { return knots_.size(); }

 private:
  std::vector<double> knots_;
  std::vector<double> values_;
  double value_before_first_ = 0.0;
};

}  // namespace censtail
