#include "bigen/metrics.hpp"

#include <algorithm>
#include <cassert>

#include "parallel.hpp"

namespace bigen {
namespace {

constexpr std::size_t kSourceChunk = 512;

// Sum of d(d-1) over one partition: the wedges centered on that side.
WideCount wedges_centered_on(const BipartiteGraph& g, Side center) {
  WideCount total = 0;
  const NodeIndex n = g.size(center);
  for (NodeIndex x = 0; x < n; ++x) {
    const Degree d = g.degree(center, x);
    if (d > 1) total += static_cast<WideCount>(d) * (d - 1);
  }
  return total;
}

// Sparse common-neighbor accumulator for one source node, reset between
// sources by walking the touched list.
struct PairCounter {
  std::vector<std::uint32_t> count;
  std::vector<NodeIndex> touched;

  void ensure(std::size_t n) {
    if (count.size() != n) count.assign(n, 0);
  }
  void add(NodeIndex x) {
    if (count[x]++ == 0) touched.push_back(x);
  }
  void clear() {
    for (NodeIndex x : touched) count[x] = 0;
    touched.clear();
  }
};

}  // namespace

WideCount count_caterpillars(const BipartiteGraph& g) {
  WideCount total = 0;
  for (NodeIndex i = 0; i < g.n_u(); ++i) {
    const Degree du = g.degree_u(i);
    if (du < 2) continue;
    for (NodeIndex j : g.neighbors_u(i)) {
      const Degree dv = g.degree_v(j);
      if (dv > 1) total += static_cast<WideCount>(du - 1) * (dv - 1);
    }
  }
  return total;
}

std::vector<std::uint64_t> caterpillars_per_edge(const BipartiteGraph& g) {
  std::vector<std::uint64_t> out(g.num_edges(), 0);
  for (NodeIndex i = 0; i < g.n_u(); ++i) {
    const Degree du = g.degree_u(i);
    const auto nbrs = g.neighbors_u(i);
    const EdgeId first = g.first_edge_u(i);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      const Degree dv = g.degree_v(nbrs[k]);
      out[first + k] = (du > 0 && dv > 0) ? (du - 1) * (dv - 1) : 0;
    }
  }
  return out;
}

Side preferred_wedge_source(const BipartiteGraph& g) {
  // Sources on U walk wedges centered on V, and vice versa.
  return wedges_centered_on(g, Side::V) <= wedges_centered_on(g, Side::U) ? Side::U : Side::V;
}

WideCount count_butterflies_from(const BipartiteGraph& g, Side source, const MetricsOptions& opts) {
  const Side middle = other(source);
  const NodeIndex n = g.size(source);
  const unsigned threads = detail::resolve_threads(opts.threads);

  std::vector<PairCounter> counters(threads);
  std::vector<WideCount> partial(threads, 0);

  detail::parallel_chunks(n, threads, kSourceChunk, [&](unsigned w, std::size_t begin, std::size_t end) {
    PairCounter& acc = counters[w];
    acc.ensure(n);
    WideCount sum = 0;
    for (auto s = static_cast<NodeIndex>(begin); s < end; ++s) {
      for (NodeIndex y : g.neighbors(source, s)) {
        const auto back = g.neighbors(middle, y);
        // Only partners s2 > s, so each unordered source pair is seen once.
        for (auto it = std::upper_bound(back.begin(), back.end(), s); it != back.end(); ++it) acc.add(*it);
      }
      for (NodeIndex t : acc.touched) {
        const WideCount k = acc.count[t];
        sum += k * (k - 1) / 2;
      }
      acc.clear();
    }
    partial[w] += sum;
  });

  WideCount total = 0;
  for (WideCount p : partial) total += p;
  return total;
}

WideCount count_butterflies(const BipartiteGraph& g, const MetricsOptions& opts) {
  return count_butterflies_from(g, preferred_wedge_source(g), opts);
}

std::vector<std::uint64_t> butterflies_per_edge_from(const BipartiteGraph& g, Side source,
                                                     const MetricsOptions& opts) {
  const Side middle = other(source);
  const NodeIndex n = g.size(source);
  const unsigned threads = detail::resolve_threads(opts.threads);

  std::vector<std::uint64_t> out(g.num_edges(), 0);
  std::vector<PairCounter> counters(threads);

  detail::parallel_chunks(n, threads, kSourceChunk, [&](unsigned w, std::size_t begin, std::size_t end) {
    PairCounter& acc = counters[w];
    acc.ensure(n);
    for (auto s = static_cast<NodeIndex>(begin); s < end; ++s) {
      const auto nbrs = g.neighbors(source, s);
      for (NodeIndex y : nbrs) {
        for (NodeIndex s2 : g.neighbors(middle, y)) {
          if (s2 != s) acc.add(s2);
        }
      }
      // Edge (s, y): every partner s2 of y shares y with s, so it closes
      // count[s2] - 1 further butterflies through (s, y).
      for (std::size_t k = 0; k < nbrs.size(); ++k) {
        std::uint64_t b = 0;
        for (NodeIndex s2 : g.neighbors(middle, nbrs[k])) {
          if (s2 != s) b += acc.count[s2] - 1;
        }
        const EdgeId id = source == Side::U ? g.first_edge_u(s) + k : g.edge_ids_v(s)[k];
        out[id] = b;
      }
      acc.clear();
    }
  });
  return out;
}

std::vector<std::uint64_t> butterflies_per_edge(const BipartiteGraph& g, const MetricsOptions& opts) {
  return butterflies_per_edge_from(g, preferred_wedge_source(g), opts);
}

std::vector<double> metamorphosis_edge(const BipartiteGraph& g, std::span<const std::uint64_t> edge_butterflies) {
  assert(edge_butterflies.size() == g.num_edges());
  std::vector<double> out(g.num_edges(), 0.0);
  for (NodeIndex i = 0; i < g.n_u(); ++i) {
    const Degree du = g.degree_u(i);
    const auto nbrs = g.neighbors_u(i);
    const EdgeId first = g.first_edge_u(i);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      const Degree dv = g.degree_v(nbrs[k]);
      const std::uint64_t cats = (du - 1) * (dv - 1);
      if (cats > 0) out[first + k] = static_cast<double>(edge_butterflies[first + k]) / static_cast<double>(cats);
    }
  }
  return out;
}

std::vector<double> metamorphosis_edge(const BipartiteGraph& g, const MetricsOptions& opts) {
  const auto b = butterflies_per_edge(g, opts);
  return metamorphosis_edge(g, b);
}

NodeCoefficients metamorphosis_node(const BipartiteGraph& g, std::span<const double> edge_c) {
  assert(edge_c.size() == g.num_edges());
  NodeCoefficients out;
  out.u.assign(g.n_u(), 0.0);
  out.v.assign(g.n_v(), 0.0);
  for (NodeIndex i = 0; i < g.n_u(); ++i) {
    const Degree d = g.degree_u(i);
    if (d == 0) continue;
    const EdgeId first = g.first_edge_u(i);
    double sum = 0.0;
    for (EdgeId k = 0; k < d; ++k) sum += edge_c[first + k];
    out.u[i] = sum / static_cast<double>(d);
  }
  for (NodeIndex j = 0; j < g.n_v(); ++j) {
    const Degree d = g.degree_v(j);
    if (d == 0) continue;
    double sum = 0.0;
    for (EdgeId id : g.edge_ids_v(j)) sum += edge_c[id];
    out.v[j] = sum / static_cast<double>(d);
  }
  return out;
}

NodeCoefficients metamorphosis_node(const BipartiteGraph& g, const MetricsOptions& opts) {
  const auto c = metamorphosis_edge(g, opts);
  return metamorphosis_node(g, c);
}

namespace {

DegreeProfile average_by_degree(const BipartiteGraph& g, Side side, std::span<const double> node_c) {
  std::map<Degree, std::pair<double, std::uint64_t>> acc;
  const NodeIndex n = g.size(side);
  for (NodeIndex x = 0; x < n; ++x) {
    const Degree d = g.degree(side, x);
    if (d == 0) continue;
    auto& slot = acc[d];
    slot.first += node_c[x];
    ++slot.second;
  }
  DegreeProfile out;
  for (const auto& [d, slot] : acc) {
    out.emplace(d, DegreeCoefficient{slot.first / static_cast<double>(slot.second), slot.second});
  }
  return out;
}

}  // namespace

DegreeProfiles metamorphosis_per_degree(const BipartiteGraph& g, const NodeCoefficients& node_c) {
  return {average_by_degree(g, Side::U, node_c.u), average_by_degree(g, Side::V, node_c.v)};
}

DegreeProfiles metamorphosis_per_degree(const BipartiteGraph& g, const MetricsOptions& opts) {
  return metamorphosis_per_degree(g, metamorphosis_node(g, opts));
}

double coefficient_at(const DegreeProfile& profile, Degree d) noexcept {
  const auto it = profile.find(d);
  return it == profile.end() ? 0.0 : it->second.coefficient;
}

double metamorphosis_ratio(WideCount butterflies, WideCount caterpillars) noexcept {
  if (caterpillars == 0) return 0.0;
  return 4.0 * to_double(butterflies) / to_double(caterpillars);
}

double global_metamorphosis(const BipartiteGraph& g, const MetricsOptions& opts) {
  return metamorphosis_ratio(count_butterflies(g, opts), count_caterpillars(g));
}

std::map<Degree, std::uint64_t> degree_distribution(const BipartiteGraph& g, Side side) {
  std::map<Degree, std::uint64_t> out;
  const NodeIndex n = g.size(side);
  for (NodeIndex x = 0; x < n; ++x) ++out[g.degree(side, x)];
  return out;
}

MetamorphosisProfile measure_metamorphosis(const BipartiteGraph& g, const MetricsOptions& opts) {
  MetamorphosisProfile p;
  p.edge_butterflies = butterflies_per_edge(g, opts);
  WideCount four_times = 0;
  for (std::uint64_t b : p.edge_butterflies) four_times += b;
  p.butterflies_total = four_times / 4;
  p.caterpillars_total = count_caterpillars(g);
  p.global_c = metamorphosis_ratio(p.butterflies_total, p.caterpillars_total);
  p.edge_c = metamorphosis_edge(g, p.edge_butterflies);
  p.node_c = metamorphosis_node(g, p.edge_c);
  p.degree_c = metamorphosis_per_degree(g, p.node_c);
  return p;
}

GraphSummary summarize(const BipartiteGraph& g, const MetricsOptions& opts) {
  GraphSummary s;
  s.n_u = g.n_u();
  s.n_v = g.n_v();
  s.edges = g.num_edges();
  s.caterpillars = count_caterpillars(g);
  s.butterflies = count_butterflies(g, opts);
  s.metamorphosis = metamorphosis_ratio(s.butterflies, s.caterpillars);
  return s;
}

GraphSummary summarize(const BipartiteGraph& g, const MetamorphosisProfile& profile) {
  GraphSummary s;
  s.n_u = g.n_u();
  s.n_v = g.n_v();
  s.edges = g.num_edges();
  s.caterpillars = profile.caterpillars_total;
  s.butterflies = profile.butterflies_total;
  s.metamorphosis = profile.global_c;
  return s;
}

}  // namespace bigen
