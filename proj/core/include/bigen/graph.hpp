#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bigen {

using NodeIndex = std::uint32_t;
using EdgeId = std::uint64_t;
using Degree = std::uint64_t;

/// Which vertex partition a node or series belongs to. `U` is partition one
/// (rows, e.g. authors), `V` is partition two (columns, e.g. papers).
enum class Side : std::uint8_t { U, V };

constexpr Side other(Side s) noexcept { return s == Side::U ? Side::V : Side::U; }

struct Edge {
  NodeIndex u = 0;
  NodeIndex v = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Desired (or measured) degree of every node in both partitions.
struct DegreeTarget {
  std::vector<Degree> du;
  std::vector<Degree> dv;

  Degree sum_u() const noexcept;
  Degree sum_v() const noexcept;

  /// Throws std::invalid_argument naming both sums when they differ.
  void require_balanced() const;
};

class BipartiteGraph;

struct BuildResult;

/// Simple bipartite graph stored as two sorted CSR indexes, one per side.
///
/// Edge ids are positions in the U-side index, so edges are numbered in
/// lexicographic (u, v) order. The V-side index keeps, for every entry, the
/// id of the same edge in the U-side index.
///
/// Immutable after construction; safe for concurrent readers.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  /// Builds a graph from arbitrary (u, v) pairs. Duplicates are collapsed and
  /// counted; an out-of-range pair is rejected with std::out_of_range naming
  /// its position and value.
  static BuildResult from_edge_list(std::span<const Edge> pairs, NodeIndex n_u, NodeIndex n_v);

  NodeIndex n_u() const noexcept { return n_u_; }
  NodeIndex n_v() const noexcept { return n_v_; }
  NodeIndex size(Side s) const noexcept { return s == Side::U ? n_u_ : n_v_; }
  EdgeId num_edges() const noexcept { return static_cast<EdgeId>(u_neighbors_.size()); }

  std::span<const NodeIndex> neighbors_u(NodeIndex i) const noexcept {
    return {u_neighbors_.data() + u_offsets_[i], u_neighbors_.data() + u_offsets_[i + 1]};
  }
  std::span<const NodeIndex> neighbors_v(NodeIndex j) const noexcept {
    return {v_neighbors_.data() + v_offsets_[j], v_neighbors_.data() + v_offsets_[j + 1]};
  }
  std::span<const NodeIndex> neighbors(Side s, NodeIndex x) const noexcept {
    return s == Side::U ? neighbors_u(x) : neighbors_v(x);
  }

  /// Id of the edge at each position of neighbors_v(j).
  std::span<const EdgeId> edge_ids_v(NodeIndex j) const noexcept {
    return {v_edge_ids_.data() + v_offsets_[j], v_edge_ids_.data() + v_offsets_[j + 1]};
  }
  /// First edge id of node i; neighbors_u(i)[k] is edge first_edge_u(i) + k.
  EdgeId first_edge_u(NodeIndex i) const noexcept { return u_offsets_[i]; }

  Degree degree_u(NodeIndex i) const noexcept { return u_offsets_[i + 1] - u_offsets_[i]; }
  Degree degree_v(NodeIndex j) const noexcept { return v_offsets_[j + 1] - v_offsets_[j]; }
  Degree degree(Side s, NodeIndex x) const noexcept {
    return s == Side::U ? degree_u(x) : degree_v(x);
  }

  bool has_edge(NodeIndex i, NodeIndex j) const noexcept;

  /// All edges in edge-id order.
  std::vector<Edge> edge_list() const;

  /// Per-node degrees of both sides.
  DegreeTarget degrees() const;

  /// Graph with node `k` of side U renamed to `new_u[k]` (likewise for V).
  /// Both maps must be permutations of the respective partition.
  BipartiteGraph relabeled(std::span<const NodeIndex> new_u, std::span<const NodeIndex> new_v) const;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  NodeIndex n_u_ = 0;
  NodeIndex n_v_ = 0;
  std::vector<EdgeId> u_offsets_{0};
  std::vector<NodeIndex> u_neighbors_;
  std::vector<EdgeId> v_offsets_{0};
  std::vector<NodeIndex> v_neighbors_;
  std::vector<EdgeId> v_edge_ids_;
};

struct BuildResult {
  BipartiteGraph graph;
  std::uint64_t duplicates = 0;
};

/// Per-node degrees of both sides of `g`.
inline DegreeTarget degrees(const BipartiteGraph& g) { return g.degrees(); }

}  // namespace bigen
