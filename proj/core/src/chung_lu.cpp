#include <algorithm>
#include <limits>
#include <stdexcept>

#include "bigen/generators.hpp"

namespace bigen {
namespace {

DiscreteSampler degree_sampler(std::span<const Degree> weights) {
  std::vector<double> w(weights.begin(), weights.end());
  return DiscreteSampler(w);
}

NodeIndex checked_size(std::size_t n) {
  if (n > std::numeric_limits<NodeIndex>::max()) throw std::invalid_argument("partition too large for 32-bit node ids");
  return static_cast<NodeIndex>(n);
}

}  // namespace

void chung_lu_draws(std::span<const Degree> weight_u, std::span<const Degree> weight_v, std::uint64_t count,
                    UniformStream& rng, std::vector<Edge>& out) {
  if (count == 0) return;
  const DiscreteSampler pick_u = degree_sampler(weight_u);
  const DiscreteSampler pick_v = degree_sampler(weight_v);
  out.reserve(out.size() + count);
  for (std::uint64_t k = 0; k < count; ++k) {
    const auto i = static_cast<NodeIndex>(pick_u(rng.next()));
    const auto j = static_cast<NodeIndex>(pick_v(rng.next()));
    out.push_back({i, j});
  }
}

ChungLuResult fast_bipartite_cl(const DegreeTarget& targets, const GeneratorConfig& cfg) {
  targets.require_balanced();
  const NodeIndex n_u = checked_size(targets.du.size());
  const NodeIndex n_v = checked_size(targets.dv.size());
  const Degree m = targets.sum_u();

  ChungLuResult result;
  result.draws = m;
  const Degree max_u = targets.du.empty() ? 0 : *std::max_element(targets.du.begin(), targets.du.end());
  const Degree max_v = targets.dv.empty() ? 0 : *std::max_element(targets.dv.begin(), targets.dv.end());
  const auto over = [m](Degree d) { return static_cast<double>(d) * static_cast<double>(d) > static_cast<double>(m); };
  result.degree_bound_exceeded = over(max_u) || over(max_v);

  UniformStream rng(cfg.seed);
  std::vector<Edge> pairs;
  chung_lu_draws(targets.du, targets.dv, m, rng, pairs);
  auto built = BipartiteGraph::from_edge_list(pairs, n_u, n_v);
  result.graph = std::move(built.graph);
  result.duplicates = built.duplicates;
  return result;
}

}  // namespace bigen
