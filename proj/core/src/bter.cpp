#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bigen/generators.hpp"

namespace bigen {
namespace {

NodeIndex block_side(double size) {
  // Round half away from zero, never below one node.
  const double r = std::max(1.0, std::round(size));
  constexpr auto kMax = static_cast<double>(std::numeric_limits<NodeIndex>::max());
  return static_cast<NodeIndex>(std::min(r, kMax));
}

void require_ascending(std::span<const Degree> d, const char* side) {
  if (!std::is_sorted(d.begin(), d.end())) {
    throw std::invalid_argument(std::string("partition ") + side + " degrees must be sorted ascending");
  }
}

void require_nonnegative(const DegreeProfile& p, const char* side) {
  for (const auto& [d, entry] : p) {
    if (!(entry.coefficient >= 0.0)) {
      throw std::invalid_argument(std::string("partition ") + side + " coefficient for degree " + std::to_string(d) +
                                  " is negative");
    }
  }
}

std::uint64_t first_above_one(std::span<const Degree> d) {
  return static_cast<std::uint64_t>(std::upper_bound(d.begin(), d.end(), Degree{1}) - d.begin());
}

std::vector<NodeIndex> ascending_order(const std::vector<Degree>& d) {
  std::vector<NodeIndex> order(d.size());
  std::iota(order.begin(), order.end(), NodeIndex{0});
  std::stable_sort(order.begin(), order.end(), [&](NodeIndex a, NodeIndex b) { return d[a] < d[b]; });
  return order;
}

}  // namespace

double profile_lookup(const DegreeProfile& profile, Degree d) noexcept {
  auto it = profile.upper_bound(d);
  if (it == profile.begin()) return 0.0;
  return std::prev(it)->second.coefficient;
}

AffinityBlockPlan size_affinity_block(Degree d_u, Degree d_v, double c_u, double c_v, bool& clamped) {
  AffinityBlockPlan b;
  b.d_hat_u = d_u;
  b.d_hat_v = d_v;
  b.c_hat_u = c_u;
  b.c_hat_v = c_v;

  const double du = static_cast<double>(d_u);
  const double dv = static_cast<double>(d_v);
  double rho4 = 0.0;
  double denom = 0.0;
  if (c_u / c_v >= 1.0) {
    b.n_hat_u = block_side(dv);
    b.n_hat_v = block_side(c_u / c_v * du);
    denom = c_u * du - c_v;
    rho4 = (du - 1.0) * c_v * c_v;
  } else {
    b.n_hat_v = block_side(du);
    b.n_hat_u = block_side(c_v / c_u * dv);
    denom = c_v * dv - c_u;
    rho4 = (dv - 1.0) * c_u * c_u;
  }

  clamped = false;
  if (!(denom > 0.0) || !(rho4 >= 0.0)) {
    clamped = true;
    b.rho = 0.0;
    return b;
  }
  rho4 /= denom;
  if (rho4 > 1.0) {
    clamped = true;
    rho4 = 1.0;
  }
  b.rho = std::pow(rho4, 0.25);
  return b;
}

BlockPlanResult plan_affinity_blocks(std::span<const Degree> du_sorted, std::span<const Degree> dv_sorted,
                                     const DegreeProfile& c_u, const DegreeProfile& c_v) {
  require_ascending(du_sorted, "1");
  require_ascending(dv_sorted, "2");
  require_nonnegative(c_u, "1");
  require_nonnegative(c_v, "2");

  BlockPlanResult out;
  const std::uint64_t n_u = du_sorted.size();
  const std::uint64_t n_v = dv_sorted.size();
  std::uint64_t i = first_above_one(du_sorted);
  std::uint64_t j = first_above_one(dv_sorted);

  while (i < n_u && j < n_v) {
    const Degree d_u = du_sorted[i];
    const Degree d_v = dv_sorted[j];
    const double hat_u = profile_lookup(c_u, d_u);
    const double hat_v = profile_lookup(c_v, d_v);

    if (!(hat_u > 0.0) || !(hat_v > 0.0)) {
      // No target clustering here: leave these nodes to the CL phase, but
      // still step over an ideal block's worth of nodes.
      ++out.zero_coefficient_steps;
      i += d_v;
      j += d_u;
      continue;
    }

    bool clamped = false;
    AffinityBlockPlan block = size_affinity_block(d_u, d_v, hat_u, hat_v, clamped);
    block.u_begin = static_cast<NodeIndex>(i);
    block.v_begin = static_cast<NodeIndex>(j);
    if (i + block.n_hat_u <= n_u && j + block.n_hat_v <= n_v) {
      if (clamped) ++out.rho_clamps;
      out.blocks.push_back(block);
    } else {
      ++out.oversized_steps;
    }
    i += block.n_hat_u;
    j += block.n_hat_v;
  }
  return out;
}

void realize_affinity_block(const AffinityBlockPlan& block, UniformStream& rng, std::vector<Edge>& out) {
  const NodeIndex u_end = block.u_begin + block.n_hat_u;
  const NodeIndex v_end = block.v_begin + block.n_hat_v;
  for (NodeIndex i = block.u_begin; i < u_end; ++i) {
    for (NodeIndex j = block.v_begin; j < v_end; ++j) {
      if (rng.next() < block.rho) out.push_back({i, j});
    }
  }
}

BipartiteGraph BterResult::graph_in_input_order() const { return graph.relabeled(order_u, order_v); }

BterResult bipartite_bter(const DegreeTarget& targets, const DegreeProfile& c_u, const DegreeProfile& c_v,
                          const GeneratorConfig& cfg) {
  targets.require_balanced();
  if (targets.du.size() > std::numeric_limits<NodeIndex>::max() ||
      targets.dv.size() > std::numeric_limits<NodeIndex>::max()) {
    throw std::invalid_argument("partition too large for 32-bit node ids");
  }

  BterResult result;
  result.order_u = ascending_order(targets.du);
  result.order_v = ascending_order(targets.dv);

  std::vector<Degree> excess_u(targets.du.size());
  std::vector<Degree> excess_v(targets.dv.size());
  for (std::size_t k = 0; k < excess_u.size(); ++k) excess_u[k] = targets.du[result.order_u[k]];
  for (std::size_t k = 0; k < excess_v.size(); ++k) excess_v[k] = targets.dv[result.order_v[k]];

  result.plan = plan_affinity_blocks(excess_u, excess_v, c_u, c_v);

  UniformStream rng(cfg.seed);
  std::vector<Edge> edges;
  for (const AffinityBlockPlan& block : result.plan.blocks) {
    realize_affinity_block(block, rng, edges);
  }
  result.block_edges = edges.size();
  for (const Edge& e : edges) {
    if (excess_u[e.u] > 0) --excess_u[e.u];
    if (excess_v[e.v] > 0) --excess_v[e.v];
  }

  result.excess_u = std::accumulate(excess_u.begin(), excess_u.end(), Degree{0});
  result.excess_v = std::accumulate(excess_v.begin(), excess_v.end(), Degree{0});
  result.cl_draws = std::min(result.excess_u, result.excess_v);
  chung_lu_draws(excess_u, excess_v, result.cl_draws, rng, edges);

  auto built = BipartiteGraph::from_edge_list(edges, static_cast<NodeIndex>(targets.du.size()),
                                              static_cast<NodeIndex>(targets.dv.size()));
  result.graph = std::move(built.graph);
  result.duplicates = built.duplicates;
  return result;
}

}  // namespace bigen
