#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "censtail/censored_sample.hpp"

namespace censtail {

enum class Method { New, NewIntegral, Hill, Efg, W1, W2 };

inline constexpr Method kAllMethods[] = {Method::New,  Method::NewIntegral,
                                         Method::Hill, Method::Efg,
                                         Method::W1,   Method::W2};

std::string_view method_name(Method m);  // "NEW", "NEW_INTEGRAL", ...
// Case-insensitive, '-'/'_' tolerant; nullopt for unknown names.
std::optional<Method> parse_method(std::string_view name);

struct ConfidenceInterval {
  double lower;
  double upper;
  double level;
};

struct EviEstimate {
  Method method;
  double gamma1_hat;
  int k;
  int n;
  std::optional<double> p_hat;
  std::optional<ConfidenceInterval> ci;
};

// Parameters of the limiting law sqrt(k)(gamma1_hat - gamma1) ->
// N(lambda/(1-tau), p*gamma1^2/(2p-1)).  tau <= 0 is the second-order index;
// lambda defaults to 0, meaning the asymptotic bias is ignored when unknown.
struct LimitLawParams {
  double gamma1;
  double p;
  double tau = 0.0;
  double lambda = 0.0;
};

// Fraction of uncensored observations among the top k.
double p_hat(const OrderedSample& s, int k);

// Hill estimator: k^{-1} sum_{i<=k} log(Z_{n-i+1:n} / Z_{n-k:n}).
EviEstimate hill(const OrderedSample& s, int k);

// Adapted Hill estimator: hill / p_hat.
EviEstimate efg(const OrderedSample& s, int k);

// Weights of the Nelson-Aalen based estimator,
//   a_{i,n} = n^{-1} delta_{[n-i+1:n]} prod_{j=i}^{n} e^{1/j}
//                                      prod_{j=i}^{k} e^{-delta_{[n-j+1:n]}/j},
// computed as exponentials of shared suffix sums, O(n + k) total.
// a_{i,n} = 0 exactly when delta_{[n-i+1:n]} = 0.
std::vector<double> new_estimator_weights(const OrderedSample& s, int k);

// gamma1_hat = sum_{i<=k} a_{i,n} log(Z_{n-i+1:n} / Z_{n-k:n}).
EviEstimate new_estimator(const OrderedSample& s, int k);

// Same estimator evaluated by the defining tail integral
//   (1 / Sbar_n(Z_{n-k:n})) * int_{Z_{n-k:n}}^inf log(x / Z_{n-k:n}) dF_n(x),
// where dF_n(z) = exp{ int_0^z dH_n^{(0)}(v) / Hbar_n(v-) } dH_n^{(1)}(z) and
// Sbar_n = exp(-Lambda_n).  Evaluated through the step-function machinery as a
// Stieltjes sum over the atoms strictly above the threshold; agrees with the
// explicit weighted form identically and serves as its independent check.
EviEstimate new_estimator_integral(const OrderedSample& s, int k);

// Kaplan-Meier integral estimators:
//   W1: (1/(n(1-F_km(Z_{n-k:n})))) sum_{i<=k} delta_{[n-i+1:n]}
//         / (1 - G_km(Z_{n-i+1:n}-)) * log(Z_{n-i+1:n}/Z_{n-k:n})
//   W2: (1/(n(1-F_km(Z_{n-k:n})))) sum_{i<=k} i * log(Z_{n-i+1:n}/Z_{n-i:n})
//         / (1 - G_km(Z_{n-i+1:n}-))
EviEstimate worms_w1(const OrderedSample& s, int k);
EviEstimate worms_w2(const OrderedSample& s, int k);

// Plug-in normal interval from the limiting law:
//   gamma1_hat - lambda/((1-tau) sqrt(k)) -+ z_{(1+level)/2} *
//   sqrt(p/(2p-1)) * gamma1_hat / sqrt(k).
// Requires p > 1/2; level = 0 gives the degenerate interval at the (bias
// centered) point.  Applies to the New estimator's law.
ConfidenceInterval asymptotic_ci(const EviEstimate& est,
                                 const LimitLawParams& params, double level);

// Per-sample precomputation that makes every estimator O(1) per k after an
// O(n) setup; the fast path for k sweeps in simulations.  eval() returns NaN
// where the single-k functions above would throw; equivalence with them is
// covered by tests.
class TailSweep {
 public:
  explicit TailSweep(const OrderedSample& s);

  double eval(Method m, int k) const;  // NaN on failure
  double p_hat(int k) const;
  int n() const { return n_; }

 private:
  int n_ = 0;
  std::vector<double> logz_top_;   // [i] = log Z_{n-i+1:n}, i = 1..n
  std::vector<double> pre_logz_;   // prefix sums of logz_top_
  std::vector<int> pre_delta_;     // prefix counts of top deltas
  std::vector<double> tinf_;       // [i] = sum_{j=i}^{n} delta_{[n-j+1:n]}/j
  std::vector<double> pre_b_;      // b_i = delta * exp(S_i - tinf_i)
  std::vector<double> pre_bl_;     // b_i * log z
  std::vector<double> pre_c_;      // c_i = delta / (1 - G_km(Z_{n-i+1:n}-))
  std::vector<double> pre_cl_;     // c_i * log z
  std::vector<double> pre_e_;      // e_i = i (L_i - L_{i+1}) / (1 - G_km(..-))
  std::vector<double> pre_m_;      // integral-form atom masses, from the top
  std::vector<double> pre_ml_;     // atom mass * log z
  std::vector<double> surv_f_top_;  // [i] = 1 - F_km(Z_{n-i+1:n})
  std::vector<double> na_top_;      // [i] = Lambda_n(Z_{n-i+1:n})
};

}  // namespace censtail
