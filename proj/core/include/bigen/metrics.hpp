#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "bigen/count.hpp"
#include "bigen/graph.hpp"

namespace bigen {

struct MetricsOptions {
  /// Worker threads for wedge enumeration; 0 selects the hardware count.
  unsigned threads = 0;
};

/// Sum over edges of (d_i - 1)(d_j - 1): every caterpillar has exactly one
/// center edge.
WideCount count_caterpillars(const BipartiteGraph& g);

/// Caterpillars centered at each edge, indexed by edge id.
std::vector<std::uint64_t> caterpillars_per_edge(const BipartiteGraph& g);

/// Total number of butterflies (4-cycles).
///
/// Enumerates wedges from the side whose opposite partition has the smaller
/// sum of d(d-1), accumulating common-neighbor counts k per source pair and
/// adding C(k, 2). The count is exact and does not depend on the side or the
/// thread schedule.
WideCount count_butterflies(const BipartiteGraph& g, const MetricsOptions& opts = {});

/// Same count with wedge sources forced onto `source`.
WideCount count_butterflies_from(const BipartiteGraph& g, Side source, const MetricsOptions& opts = {});

/// The side count_butterflies() and butterflies_per_edge() use as sources.
Side preferred_wedge_source(const BipartiteGraph& g);

/// Number of butterflies containing each edge, indexed by edge id. Sums to
/// four times count_butterflies().
std::vector<std::uint64_t> butterflies_per_edge(const BipartiteGraph& g, const MetricsOptions& opts = {});

std::vector<std::uint64_t> butterflies_per_edge_from(const BipartiteGraph& g, Side source,
                                                     const MetricsOptions& opts = {});

/// Edge metamorphosis: butterflies through the edge over caterpillars
/// centered at it, or 0 when no caterpillar is centered there.
std::vector<double> metamorphosis_edge(const BipartiteGraph& g, std::span<const std::uint64_t> edge_butterflies);
std::vector<double> metamorphosis_edge(const BipartiteGraph& g, const MetricsOptions& opts = {});

struct NodeCoefficients {
  std::vector<double> u;
  std::vector<double> v;
};

/// Node metamorphosis: mean edge coefficient over incident edges. Isolated
/// nodes get 0.
NodeCoefficients metamorphosis_node(const BipartiteGraph& g, std::span<const double> edge_c);
NodeCoefficients metamorphosis_node(const BipartiteGraph& g, const MetricsOptions& opts = {});

struct DegreeCoefficient {
  double coefficient = 0.0;
  std::uint64_t class_size = 0;

  friend bool operator==(const DegreeCoefficient&, const DegreeCoefficient&) = default;
};

/// Degreewise coefficients keyed by degree. Only degrees >= 1 that occur in
/// the partition have entries.
using DegreeProfile = std::map<Degree, DegreeCoefficient>;

struct DegreeProfiles {
  DegreeProfile u;
  DegreeProfile v;

  const DegreeProfile& side(Side s) const noexcept { return s == Side::U ? u : v; }
};

DegreeProfiles metamorphosis_per_degree(const BipartiteGraph& g, const NodeCoefficients& node_c);
DegreeProfiles metamorphosis_per_degree(const BipartiteGraph& g, const MetricsOptions& opts = {});

/// Coefficient for degree d, 0 when no node has that degree.
double coefficient_at(const DegreeProfile& profile, Degree d) noexcept;

/// 4 * butterflies / caterpillars, or 0 without caterpillars.
double metamorphosis_ratio(WideCount butterflies, WideCount caterpillars) noexcept;

double global_metamorphosis(const BipartiteGraph& g, const MetricsOptions& opts = {});

/// Node count per degree, degree 0 included; counts sum to the partition size.
std::map<Degree, std::uint64_t> degree_distribution(const BipartiteGraph& g, Side side);

/// Every metamorphosis statistic of a graph, computed from one per-edge pass.
struct MetamorphosisProfile {
  WideCount butterflies_total = 0;
  WideCount caterpillars_total = 0;
  double global_c = 0.0;
  std::vector<std::uint64_t> edge_butterflies;
  std::vector<double> edge_c;
  NodeCoefficients node_c;
  DegreeProfiles degree_c;
};

MetamorphosisProfile measure_metamorphosis(const BipartiteGraph& g, const MetricsOptions& opts = {});

/// One row of a size / motif summary table.
struct GraphSummary {
  NodeIndex n_u = 0;
  NodeIndex n_v = 0;
  EdgeId edges = 0;
  WideCount caterpillars = 0;
  WideCount butterflies = 0;
  double metamorphosis = 0.0;
};

GraphSummary summarize(const BipartiteGraph& g, const MetricsOptions& opts = {});
GraphSummary summarize(const BipartiteGraph& g, const MetamorphosisProfile& profile);

/// Brute-force butterfly enumeration over every pair {i, i'} x {j, j'}.
/// Independent of the wedge-based counters; used to verify them.
struct OracleResult {
  WideCount total = 0;
  std::vector<std::uint64_t> per_edge;
};

inline constexpr std::uint64_t kDefaultOracleBudget = 1'000'000;

/// Throws std::length_error naming the bound when C(n_u,2) * C(n_v,2)
/// exceeds `quadruple_budget`.
OracleResult butterfly_oracle(const BipartiteGraph& g, std::uint64_t quadruple_budget = kDefaultOracleBudget);

}  // namespace bigen
