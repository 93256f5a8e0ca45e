#pragma once

#include <cstdint>
#include <vector>

#include "censtail/evi_estimators.hpp"

namespace censtail {

enum class McModel { Burr, Pareto };

// Simulation protocol: X-sample from the target model with index gamma1,
// censored by an independent sample whose index gamma2 solves
// p = gamma2/(gamma1+gamma2).  p = 1 means no censoring (delta identically 1).
struct McConfig {
  double gamma1 = 0.2;
  double p = 0.9;
  double eta1 = 0.25;  // Burr shapes; ignored for Pareto
  double eta2 = 0.25;
  McModel model = McModel::Burr;
  int n = 300;
  int replicates = 2000;
  std::vector<int> k_grid;  // empty = default_k_grid(n)
  std::vector<Method> estimators = {Method::New, Method::W1, Method::W2};
  std::uint64_t seed = 20160;
  int threads = 0;  // 0 = auto; capped by CENSTAIL_THREADS
};

// Every integer in [5, n/2], thinned to at most 150 points.
std::vector<int> default_k_grid(int n);

// Worker count actually used for `requested` (0 = hardware), after the
// CENSTAIL_THREADS cap.  Results do not depend on the worker count.
int resolve_thread_count(int requested);

struct McCell {
  Method method;
  int k;
  double abs_bias;       // |mean(gamma1_hat) - gamma1|
  double mse;            // mean((gamma1_hat - gamma1)^2)
  double mean_estimate;
  int effective;         // replicates where the estimator was computable
};

struct McResult {
  McConfig config;
  std::vector<McCell> cells;  // method-major, k ascending
};

// Runs the replicate loop and aggregates bias/MSE per (estimator, k).
// Deterministic given the config (seed included): each replicate owns the
// substream (seed, r), per-replicate results are stored in a replicate-indexed
// table and reduced in replicate order, so scheduling and worker count never
// change the output bits.  Estimator failures are excluded and counted.
McResult run_experiment(const McConfig& cfg);

// Per-replicate estimates for the whole (estimator, k) grid, laid out
// values[(r*E + e)*K + j]; NaN marks a failed cell.  run_experiment and
// variance_check are both reductions of this table.
std::vector<double> replicate_values(const McConfig& cfg);

struct VarianceCheckReport {
  Method method;
  int k;
  int effective;
  double empirical_variance;  // of sqrt(k)(gamma1_hat - gamma1)
  double analytic_variance;   // p*gamma1^2/(2p-1)
  double ratio;               // empirical / analytic
  double mc_stderr;           // ~ empirical_variance * sqrt(2/(effective-1))
  double empirical_mean_scaled;  // mean of sqrt(k)(gamma1_hat - gamma1)
};

// Compares the sampling variance of sqrt(k)(gamma1_hat - gamma1) at one k
// against the limit variance, for the first configured estimator.  Refuses to
// report on fewer than 100 effective replicates.
VarianceCheckReport variance_check(const McConfig& cfg, int k_star);

}  // namespace censtail
