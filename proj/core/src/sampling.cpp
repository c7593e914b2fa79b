#include <algorithm>
#include <stdexcept>

#include "bigen/generators.hpp"

namespace bigen {

DiscreteSampler::DiscreteSampler(std::span<const double> weights) {
  if (weights.empty()) throw std::invalid_argument("cannot sample from an empty weight list");
  cumulative_.reserve(weights.size());
  double running = 0.0;
  bool any = false;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (!(weights[k] >= 0.0)) throw std::invalid_argument("sampling weights must be non-negative");
    if (weights[k] > 0.0) {
      any = true;
      last_positive_ = k;
    }
    running += weights[k];
    cumulative_.push_back(running);
  }
  if (!any) throw std::invalid_argument("cannot sample from all-zero weights");
}

std::size_t DiscreteSampler::operator()(double r) const noexcept {
  const double x = r * cumulative_.back();
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), x);
  if (it == cumulative_.end()) return last_positive_;
  return static_cast<std::size_t>(it - cumulative_.begin());
}

std::size_t sample_index(std::span<const double> weights, double r) { return DiscreteSampler(weights)(r); }

}  // namespace bigen
