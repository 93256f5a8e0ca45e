#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace censtail {

// Observed pairs (Z_i, delta_i) with Z = min(X, Y) and delta = 1{X <= Y}.
struct CensoredSample {
  std::vector<double> z;
  std::vector<std::uint8_t> delta;
};

// Z order statistics with the concomitant censoring indicators delta_{[i:n]}.
struct OrderedSample {
  std::vector<double> z;            // non-decreasing
  std::vector<std::uint8_t> delta;  // delta_{[i:n]}
  std::size_t n() const { return z.size(); }
};

// Stable sort by z; ties keep input order, concomitants travel with their z.
OrderedSample order_sample(const CensoredSample& sample);

// Forms (Z, delta) from paired samples: Z_i = min(x_i, y_i), delta_i = 1{x_i <= y_i}.
CensoredSample censor(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace censtail
