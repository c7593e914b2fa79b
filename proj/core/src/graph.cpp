#include "bigen/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bigen {

Degree DegreeTarget::sum_u() const noexcept { return std::accumulate(du.begin(), du.end(), Degree{0}); }

Degree DegreeTarget::sum_v() const noexcept { return std::accumulate(dv.begin(), dv.end(), Degree{0}); }

void DegreeTarget::require_balanced() const {
  const Degree su = sum_u();
  const Degree sv = sum_v();
  if (su != sv) {
    throw std::invalid_argument("degree sums differ: partition 1 sums to " + std::to_string(su) +
                                ", partition 2 sums to " + std::to_string(sv));
  }
}

BuildResult BipartiteGraph::from_edge_list(std::span<const Edge> pairs, NodeIndex n_u, NodeIndex n_v) {
  std::vector<Edge> edges(pairs.begin(), pairs.end());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (edges[k].u >= n_u || edges[k].v >= n_v) {
      throw std::out_of_range("edge pair #" + std::to_string(k) + " (" + std::to_string(edges[k].u) + ", " +
                              std::to_string(edges[k].v) + ") is outside a " + std::to_string(n_u) + " x " +
                              std::to_string(n_v) + " graph");
    }
  }
  std::sort(edges.begin(), edges.end());
  const auto last = std::unique(edges.begin(), edges.end());
  const auto duplicates = static_cast<std::uint64_t>(edges.end() - last);
  edges.erase(last, edges.end());

  BuildResult out;
  out.duplicates = duplicates;
  BipartiteGraph& g = out.graph;
  g.n_u_ = n_u;
  g.n_v_ = n_v;

  g.u_offsets_.assign(static_cast<std::size_t>(n_u) + 1, 0);
  g.v_offsets_.assign(static_cast<std::size_t>(n_v) + 1, 0);
  g.u_neighbors_.resize(edges.size());
  g.v_neighbors_.resize(edges.size());
  g.v_edge_ids_.resize(edges.size());

  for (const Edge& e : edges) {
    ++g.u_offsets_[e.u + 1];
    ++g.v_offsets_[e.v + 1];
  }
  std::partial_sum(g.u_offsets_.begin(), g.u_offsets_.end(), g.u_offsets_.begin());
  std::partial_sum(g.v_offsets_.begin(), g.v_offsets_.end(), g.v_offsets_.begin());

  // Edges are sorted by (u, v), so filling both indexes in this order leaves
  // every adjacency list sorted.
  std::vector<EdgeId> v_cursor(g.v_offsets_.begin(), g.v_offsets_.end() - 1);
  for (EdgeId id = 0; id < edges.size(); ++id) {
    const Edge& e = edges[id];
    g.u_neighbors_[id] = e.v;
    const EdgeId slot = v_cursor[e.v]++;
    g.v_neighbors_[slot] = e.u;
    g.v_edge_ids_[slot] = id;
  }
  return out;
}

bool BipartiteGraph::has_edge(NodeIndex i, NodeIndex j) const noexcept {
  if (i >= n_u_ || j >= n_v_) return false;
  const auto nbrs = neighbors_u(i);
  return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

std::vector<Edge> BipartiteGraph::edge_list() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (NodeIndex i = 0; i < n_u_; ++i) {
    for (NodeIndex j : neighbors_u(i)) out.push_back({i, j});
  }
  return out;
}

DegreeTarget BipartiteGraph::degrees() const {
  DegreeTarget t;
  t.du.resize(n_u_);
  t.dv.resize(n_v_);
  for (NodeIndex i = 0; i < n_u_; ++i) t.du[i] = degree_u(i);
  for (NodeIndex j = 0; j < n_v_; ++j) t.dv[j] = degree_v(j);
  return t;
}

BipartiteGraph BipartiteGraph::relabeled(std::span<const NodeIndex> new_u, std::span<const NodeIndex> new_v) const {
  if (new_u.size() != n_u_ || new_v.size() != n_v_) {
    throw std::invalid_argument("relabeling maps must cover every node of both partitions");
  }
  const auto is_permutation = [](std::span<const NodeIndex> map) {
    std::vector<bool> seen(map.size(), false);
    for (NodeIndex x : map) {
      if (x >= map.size() || seen[x]) return false;
      seen[x] = true;
    }
    return true;
  };
  if (!is_permutation(new_u) || !is_permutation(new_v)) {
    throw std::invalid_argument("relabeling maps are not permutations");
  }
  std::vector<Edge> edges;
  edges.reserve(num_edges());
  for (NodeIndex i = 0; i < n_u_; ++i) {
    for (NodeIndex j : neighbors_u(i)) edges.push_back({new_u[i], new_v[j]});
  }
  return std::move(from_edge_list(edges, n_u_, n_v_).graph);
}

}  // namespace bigen
