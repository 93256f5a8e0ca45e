#pragma once

#include <cstddef>
#include <vector>

#include "censtail/rng.hpp"

namespace censtail {

// Burr distribution with survival (1 + x^{1/eta})^{-eta/gamma}, x >= 0.
// Tail index gamma, shape eta.
struct BurrModel {
  double eta;
  double gamma;
  BurrModel(double eta, double gamma);
  double survival(double x) const;
  // Closed form ((1-u)^{-gamma/eta} - 1)^eta, the inverse of 1 - survival.
  double quantile(double u) const;
};

// Pareto with survival (x/scale)^{-1/gamma} for x >= scale, 1 below.
struct ParetoModel {
  double gamma;
  double scale;
  explicit ParetoModel(double gamma, double scale = 1.0);
  double survival(double x) const;
  double quantile(double u) const;
};

// Frechet with cdf exp(-x^{-1/gamma}) for x > 0.
struct FrechetModel {
  double gamma;
  explicit FrechetModel(double gamma);
  double cdf(double x) const;
  double survival(double x) const;
  double quantile(double u) const;
};

// Tail algebra of a censored pair with indices (gamma1, gamma2):
//   gamma = gamma1*gamma2/(gamma1+gamma2),
//   p = gamma/gamma1 = gamma2/(gamma1+gamma2),  q = 1 - p.
// p is the limiting proportion of uncensored upper extremes; gamma1 < gamma2
// is required so that p > 1/2.
struct CensorshipDesign {
  double gamma1;
  double gamma2;
  double gamma;
  double p;
  double q;

  static CensorshipDesign from_gammas(double gamma1, double gamma2);
  // Solves p = gamma2/(gamma1+gamma2), i.e. gamma2 = p*gamma1/(1-p); needs 1/2 < p < 1.
  static CensorshipDesign from_p(double gamma1, double p);
};

// Inverse-transform sampling, one uniform per draw; deterministic given the
// stream state.  The uniform lies in [0,1), so quantile(1) is never evaluated.
template <class Model>
std::vector<double> sample(const Model& model, Rng& rng, std::size_t count) {
  std::vector<double> out(count);
  for (double& x : out) x = model.quantile(rng.uniform01());
  return out;
}

}  // namespace censtail
