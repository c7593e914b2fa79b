#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "bigen/graph.hpp"
#include "bigen/metrics.hpp"

namespace bigen {

struct GeneratorConfig {
  std::uint64_t seed = 1;
  std::uint32_t trials = 1;
};

/// Seeded stream of uniform doubles in [0, 1). mt19937_64's output sequence
/// is fixed by the standard and the conversion is done here, so a seed gives
/// the same stream on every platform.
class UniformStream {
 public:
  explicit UniformStream(std::uint64_t seed) : engine_(seed) {}

  double next() noexcept { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

/// Index k drawn with probability weights[k] / sum(weights) by inverting a
/// cumulative table, O(log n) per draw. Zero-weight entries are never drawn.
class DiscreteSampler {
 public:
  /// Throws std::invalid_argument when weights are empty, negative, or all 0.
  explicit DiscreteSampler(std::span<const double> weights);

  std::size_t operator()(double r) const noexcept;
  std::size_t size() const noexcept { return cumulative_.size(); }
  double total() const noexcept { return cumulative_.empty() ? 0.0 : cumulative_.back(); }

 private:
  std::vector<double> cumulative_;
  std::size_t last_positive_ = 0;
};

/// One-shot form of DiscreteSampler for a single draw `r` in [0, 1).
std::size_t sample_index(std::span<const double> weights, double r);

/// Realized Chung-Lu graph plus what happened while drawing it.
struct ChungLuResult {
  BipartiteGraph graph;
  std::uint64_t draws = 0;
  std::uint64_t duplicates = 0;
  /// Some target degree exceeds sqrt(m), so d_i d_j / m is not a probability
  /// for every pair. Generation is still well defined.
  bool degree_bound_exceeded = false;
};

/// Fast bipartite Chung-Lu: m endpoint pairs, each endpoint drawn
/// independently in proportion to its target degree, with repeated pairs
/// discarded. Throws std::invalid_argument when the two degree sums differ.
ChungLuResult fast_bipartite_cl(const DegreeTarget& targets, const GeneratorConfig& cfg);

/// Draws `count` pairs, the U endpoint proportional to `weight_u` and the V
/// endpoint proportional to `weight_v`, consuming two uniforms per pair (U
/// first). Either sum may differ from `count`.
void chung_lu_draws(std::span<const Degree> weight_u, std::span<const Degree> weight_v, std::uint64_t count,
                    UniformStream& rng, std::vector<Edge>& out);

/// Degreewise coefficient with the nearest-lower fallback used by the block
/// planner: exact entry if present, else the largest smaller degree present,
/// else 0.
double profile_lookup(const DegreeProfile& profile, Degree d) noexcept;

/// One affinity block: node ranges [u_begin, u_begin + n_hat_u) and
/// [v_begin, v_begin + n_hat_v) in ascending-degree order, joined by a
/// bipartite Erdos-Renyi graph with edge probability rho.
struct AffinityBlockPlan {
  NodeIndex u_begin = 0;
  NodeIndex v_begin = 0;
  NodeIndex n_hat_u = 0;
  NodeIndex n_hat_v = 0;
  double rho = 0.0;
  Degree d_hat_u = 0;
  Degree d_hat_v = 0;
  double c_hat_u = 0.0;
  double c_hat_v = 0.0;
};

struct BlockPlanResult {
  std::vector<AffinityBlockPlan> blocks;
  /// Cursor steps with a zero target coefficient (no block, all excess).
  std::uint64_t zero_coefficient_steps = 0;
  /// Cursor steps whose block did not fit in the remaining nodes.
  std::uint64_t oversized_steps = 0;
  /// Blocks whose rho had to be clamped into [0, 1].
  std::uint64_t rho_clamps = 0;
};

/// Sizes a block for target degrees (d_u, d_v) and coefficients (c_u, c_v).
/// When c_u >= c_v the U side gets d_v nodes and the V side round(c_u/c_v d_u);
/// otherwise the roles swap. rho^4 follows from requiring the expected node
/// metamorphosis to equal the targets. Coefficients must be positive and
/// both degrees >= 2. Sets `clamped` when rho needed clamping.
AffinityBlockPlan size_affinity_block(Degree d_u, Degree d_v, double c_u, double c_v, bool& clamped);

/// Walks both ascending degree sequences from their first degree > 1 and
/// emits one block per cursor step that fits in the remaining nodes. Throws
/// std::invalid_argument for unsorted degrees or negative coefficients.
BlockPlanResult plan_affinity_blocks(std::span<const Degree> du_sorted, std::span<const Degree> dv_sorted,
                                     const DegreeProfile& c_u, const DegreeProfile& c_v);

/// Appends the realized edges of `block` (global indices) to `out`,
/// row-major, one uniform per candidate pair.
void realize_affinity_block(const AffinityBlockPlan& block, UniformStream& rng, std::vector<Edge>& out);

struct BterResult {
  /// Nodes are labeled in ascending target-degree order.
  BipartiteGraph graph;
  /// order_u[k] is the input index of sorted node k (likewise order_v).
  std::vector<NodeIndex> order_u;
  std::vector<NodeIndex> order_v;
  BlockPlanResult plan;
  std::uint64_t block_edges = 0;
  Degree excess_u = 0;
  Degree excess_v = 0;
  std::uint64_t cl_draws = 0;
  std::uint64_t duplicates = 0;

  /// The generated graph with nodes renamed back to input indices.
  BipartiteGraph graph_in_input_order() const;
};

/// Bipartite BTER: affinity blocks sized from the degreewise coefficient
/// profiles, then fast Chung-Lu over the leftover excess degree. The CL phase
/// takes min(sum excess_u, sum excess_v) draws, each side weighted by its own
/// excess. Throws std::invalid_argument when the target sums differ.
BterResult bipartite_bter(const DegreeTarget& targets, const DegreeProfile& c_u, const DegreeProfile& c_v,
                          const GeneratorConfig& cfg);

}  // namespace bigen
