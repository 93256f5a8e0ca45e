#pragma once

#include <optional>
#include <vector>

#include "censtail/censored_empirical.hpp"
#include "censtail/evi_estimators.hpp"
#include "censtail/rng.hpp"

namespace censtail {

struct TailProcessCurve {
  std::vector<double> x;
  std::vector<double> d;
  int k = 0;
  int n = 0;
};

// Limit-theorem domain guard: every grid point must satisfy x >= p^gamma.
struct TailDomain {
  double p;
  double gamma;
};

// Tail product-limit process
//   D_n(x) = sqrt(k) * ( Sbar_n(x Z_{n-k:n}) / Sbar_n(Z_{n-k:n}) - x^{-1/gamma1} ),
// with Sbar_n the completed Nelson-Aalen survival function (0 above Z_{n:n}).
// D_n(1) = 0 exactly.  Pass a TailDomain to enforce the x >= p^gamma domain,
// or leave it out to opt out of the check.
TailProcessCurve d_n_curve(const OrderedSample& s, int k, double gamma1,
                           const std::vector<double>& x_grid,
                           std::optional<TailDomain> domain = std::nullopt);

// One realization of the limit decomposition, reduced by Brownian scaling to
//   C1 = gamma sqrt(q) I[B2],   C2 = gamma (1 - q/p) sqrt(p) I[B1],
//   C3 = -gamma1 sqrt(p) B1(1),
// where I[B] = int_0^1 s^{-q-1} B(s) ds and B1, B2 are independent standard
// Brownian paths.  total = c1 + c2 + c3 has variance p*gamma1^2/(2p-1).
struct GaussianLimitSample {
  double c1;
  double c2;
  double c3;
  double total;
};

// Simulates the limit triple.  The singular integral is evaluated exactly on
// the piecewise-linear interpolant of a Brownian path over a geometric grid
// refined toward 0 (smallest cell 1e-8); grid_size >= 1000 knots.
std::vector<GaussianLimitSample> simulate_limit_rvs(const LimitLawParams& params,
                                                    int grid_size, int reps,
                                                    Rng& rng);

// Asymptotic variance p*gamma1^2/(2p-1) (= gamma^2/(p(2p-1)) with gamma = p*gamma1).
double limit_variance(const LimitLawParams& params);

// The four terms of E[C1+C2+C3]^2; they sum to gamma^2/(p(2p-1)).
struct LimitVarianceDecomposition {
  double var_c1;
  double var_c2;
  double var_c3;
  double twice_cov_c2_c3;
  double total;
};
LimitVarianceDecomposition limit_variance_decomposition(const LimitLawParams& params);

// Brownian path on a uniform grid of [0, t_max] with `steps` increments, W(0) = 0.
struct BrownianPath {
  std::vector<double> times;
  std::vector<double> values;
  double operator()(double t) const;  // linear interpolation, clamped
};
BrownianPath simulate_brownian_path(Rng& rng, int steps, double t_max = 1.0);

// One realization of the limiting process J(x) = J_1(x) + J_2(x) on a grid
// (the Gaussian approximation of D_n, after Brownian scaling):
//   J_1(x) = sqrt(p) { x^{1/gamma2} B1(x^{-1/gamma}) - x^{-1/gamma1} B1(1) }
//   J_2(x) = x^{-1/gamma1}/gamma * int_1^x u^{1/gamma-1}
//              { p sqrt(q) B2(u^{-1/gamma}) - q sqrt(p) B1(u^{-1/gamma}) } du.
// Offered as a diagnostic companion to d_n_curve.
std::vector<double> simulate_jn_curve(const LimitLawParams& params,
                                      const std::vector<double>& x_grid,
                                      int path_steps, Rng& rng);

}  // namespace censtail
