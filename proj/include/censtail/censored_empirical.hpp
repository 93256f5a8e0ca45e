#pragma once

#include "censtail/censored_sample.hpp"
#include "censtail/step_function.hpp"

namespace censtail {

// H_n(v) = n^{-1} #{i : Z_i <= v}.
StepFunction empirical_cdf(const OrderedSample& s);

// Empirical sub-distributions of the observed pairs:
//   which = 1:  H_n^{(1)}(v) = n^{-1} sum_i delta_i 1(Z_i <= v)
//   which = 0:  H_n^{(0)}(v) = n^{-1} sum_i (1 - delta_i) 1(Z_i <= v)
// The values are built so that H_n^{(0)} + H_n^{(1)} = H_n exactly, pointwise.
StepFunction empirical_subdist(const OrderedSample& s, int which);

// Nelson-Aalen cumulative hazard
//   Lambda_n(z) = sum_{i : Z_{i:n} <= z} delta_{[i:n]} / (n - i + 1),
// defined for z <= Z_{n:n}; evaluation above the largest observation returns
// Lambda_n(Z_{n:n}) with a beyond-support flag.
struct NelsonAalenHazard {
  struct Value {
    double value;
    bool beyond_support;
  };

  StepFunction step;
  double support_max;  // Z_{n:n}

  Value evaluate(double z) const {
    return {step(z), z > support_max};
  }
  double operator()(double z) const { return step(z); }
};

NelsonAalenHazard nelson_aalen_hazard(const OrderedSample& s);

// Nelson-Aalen cdf estimator, completed beyond the largest observation:
//   F_n(z) = 1 - exp(-Lambda_n(z))  for z <= Z_{n:n},
//   F_n(z) = 1                      for z >  Z_{n:n}.
// survival() evaluates exp(-Lambda_n(z)) directly, avoiding 1 - (1 - s) noise.
class CompletedCdf {
 public:
  CompletedCdf(StepFunction cumulative_hazard, double support_max)
      : cum_hazard_(std::move(cumulative_hazard)), support_max_(support_max) {}

  double operator()(double z) const;
  double survival(double z) const;

  double support_max() const { return support_max_; }
  const StepFunction& cumulative_hazard() const { return cum_hazard_; }

 private:
  StepFunction cum_hazard_;
  double support_max_;
};

CompletedCdf nelson_aalen_cdf(const OrderedSample& s);

enum class KmTarget { F, G };

// Behavior at and beyond Z_{n:n}, where the product-limit estimator is not
// defined.  LastValue keeps the final product (which is already 1 when the top
// observation is an event for the chosen target); One forces the value 1 from
// Z_{n:n} on.  The choice never affects the tail-index estimators, which only
// evaluate strictly below the top observation.
enum class KmCompletion { LastValue, One };

// Kaplan-Meier product-limit estimator
//   1 - prod_{i : Z_{i:n} <= z} ((n-i)/(n-i+1))^{e_i},
// with exponent e_i = delta_{[i:n]} for F and 1 - delta_{[i:n]} for G.
StepFunction kaplan_meier_cdf(const OrderedSample& s, KmTarget target,
                              KmCompletion completion = KmCompletion::LastValue);

}  // namespace censtail
