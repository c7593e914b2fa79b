#pragma once

#include <map>
#include <vector>

#include "bigen/graph.hpp"
#include "bigen/metrics.hpp"

namespace bigen {

/// One logarithmic bin [lower, 2 * lower).
struct Bin {
  Degree lower = 1;
  double mean = 0.0;

  friend bool operator==(const Bin&, const Bin&) = default;
};

using BinnedSeries = std::vector<Bin>;

/// Bins an integer-indexed series at power-of-two borders. Each bin reports
/// the mean over every integer in [2^k, 2^(k+1)); missing keys count as 0.
/// Bins run from 1 up to the bin holding the largest key. Keys must be >= 1
/// (std::invalid_argument otherwise).
BinnedSeries log_bin(const std::map<Degree, double>& series);

/// Binned node counts per degree; isolated nodes are left out.
BinnedSeries binned_degree_distribution(const BipartiteGraph& g, Side side);

/// Binned degreewise coefficients, with absent degrees counted as 0.
BinnedSeries binned_coefficients(const DegreeProfile& profile);

}  // namespace bigen
