#include "bigen/binning.hpp"

#include <bit>
#include <stdexcept>

namespace bigen {

BinnedSeries log_bin(const std::map<Degree, double>& series) {
  BinnedSeries out;
  if (series.empty()) return out;
  if (series.begin()->first == 0) throw std::invalid_argument("log_bin keys must be >= 1");

  const Degree max_key = series.rbegin()->first;
  const int top = std::bit_width(max_key) - 1;
  out.reserve(static_cast<std::size_t>(top) + 1);
  auto it = series.begin();
  for (int k = 0; k <= top; ++k) {
    const Degree lower = Degree{1} << k;
    const Degree upper = lower << 1;
    double sum = 0.0;
    for (; it != series.end() && it->first < upper; ++it) sum += it->second;
    out.push_back({lower, sum / static_cast<double>(lower)});
  }
  return out;
}

BinnedSeries binned_degree_distribution(const BipartiteGraph& g, Side side) {
  std::map<Degree, double> series;
  for (const auto& [d, count] : degree_distribution(g, side)) {
    if (d > 0) series.emplace(d, static_cast<double>(count));
  }
  return log_bin(series);
}

BinnedSeries binned_coefficients(const DegreeProfile& profile) {
  std::map<Degree, double> series;
  for (const auto& [d, entry] : profile) {
    if (d > 0) series.emplace(d, entry.coefficient);
  }
  return log_bin(series);
}

}  // namespace bigen
