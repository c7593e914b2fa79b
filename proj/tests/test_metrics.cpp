#include <doctest.h>

#include <map>
#include <stdexcept>

#include "bigen/metrics.hpp"
#include "support/test_graphs.hpp"
#include "support/wide_count_printer.hpp"

using namespace bigen;
using namespace bigen::testing;

namespace {

// Reference coefficient chain evaluated straight from the definitions, fed
// with oracle per-edge butterflies.
struct ReferenceCoefficients {
  std::vector<double> edge;
  std::vector<double> node_u, node_v;
  std::map<Degree, double> degree_u, degree_v;
};

ReferenceCoefficients reference_coefficients(const BipartiteGraph& g) {
  const OracleResult oracle = butterfly_oracle(g);
  ReferenceCoefficients ref;
  const auto edges = g.edge_list();
  ref.edge.resize(edges.size());
  std::vector<double> sum_u(g.n_u(), 0.0), sum_v(g.n_v(), 0.0);
  for (std::size_t id = 0; id < edges.size(); ++id) {
    const auto [i, j] = edges[id];
    const double cats = static_cast<double>((g.degree_u(i) - 1) * (g.degree_v(j) - 1));
    ref.edge[id] = cats > 0 ? static_cast<double>(oracle.per_edge[id]) / cats : 0.0;
    sum_u[i] += ref.edge[id];
    sum_v[j] += ref.edge[id];
  }
  std::map<Degree, std::pair<double, int>> acc_u, acc_v;
  ref.node_u.resize(g.n_u());
  ref.node_v.resize(g.n_v());
  for (NodeIndex i = 0; i < g.n_u(); ++i) {
    const Degree d = g.degree_u(i);
    ref.node_u[i] = d ? sum_u[i] / static_cast<double>(d) : 0.0;
    if (d) acc_u[d].first += ref.node_u[i], ++acc_u[d].second;
  }
  for (NodeIndex j = 0; j < g.n_v(); ++j) {
    const Degree d = g.degree_v(j);
    ref.node_v[j] = d ? sum_v[j] / static_cast<double>(d) : 0.0;
    if (d) acc_v[d].first += ref.node_v[j], ++acc_v[d].second;
  }
  for (const auto& [d, a] : acc_u) ref.degree_u[d] = a.first / a.second;
  for (const auto& [d, a] : acc_v) ref.degree_v[d] = a.first / a.second;
  return ref;
}

WideCount choose2(WideCount n) { return n * (n - 1) / 2; }

}  // namespace

TEST_CASE("caterpillar counts") {
  CHECK(count_caterpillars(complete_bipartite(2, 2)) == 4);
  CHECK(count_caterpillars(three_path()) == 1);
  CHECK(count_caterpillars(star(5)) == 0);
  CHECK(count_caterpillars(make_graph({}, 0, 0)) == 0);
}

TEST_CASE("butterfly counts on small graphs") {
  CHECK(count_butterflies(complete_bipartite(2, 2)) == 1);
  // Brute-force enumeration of K33 quadruples gives C(3,2) * C(3,2) = 9.
  CHECK(butterfly_oracle(complete_bipartite(3, 3)).total == 9);
  CHECK(count_butterflies(complete_bipartite(3, 3)) == 9);
  CHECK(count_butterflies(three_path()) == 0);
  CHECK(count_butterflies(make_graph({}, 3, 0)) == 0);
}

TEST_CASE("butterflies per edge on small graphs") {
  for (auto b : butterflies_per_edge(complete_bipartite(2, 2))) CHECK(b == 1);
  const auto path = three_path();
  const auto per_edge = butterflies_per_edge(path);
  // Center edge is (1, 0).
  const auto edges = path.edge_list();
  for (std::size_t id = 0; id < edges.size(); ++id) CHECK(per_edge[id] == 0);
}

TEST_CASE("oracle basics and budget") {
  const auto k22 = butterfly_oracle(complete_bipartite(2, 2));
  CHECK(k22.total == 1);
  CHECK(k22.per_edge == std::vector<std::uint64_t>{1, 1, 1, 1});

  const auto empty = butterfly_oracle(make_graph({}, 0, 0));
  CHECK(empty.total == 0);
  CHECK(empty.per_edge.empty());

  try {
    (void)butterfly_oracle(complete_bipartite(60, 60));
    FAIL("expected refusal");
  } catch (const std::length_error& e) {
    CHECK(std::string(e.what()).find("1000000") != std::string::npos);
  }
  CHECK(butterfly_oracle(complete_bipartite(60, 60), 4'000'000).total == choose2(60) * choose2(60));
}

TEST_CASE("wedge counters agree with the oracle on random graphs") {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const NodeIndex nu = 2 + seed % 29;
    const NodeIndex nv = 2 + (seed * 7) % 29;
    const double p = 0.05 + 0.45 * static_cast<double>(seed % 10) / 9.0;
    const auto g = random_bipartite(nu, nv, p, seed);
    const OracleResult oracle = butterfly_oracle(g);
    CAPTURE(seed);
    CHECK(count_butterflies_from(g, Side::U) == oracle.total);
    CHECK(count_butterflies_from(g, Side::V) == oracle.total);
    CHECK(butterflies_per_edge_from(g, Side::U) == oracle.per_edge);
    CHECK(butterflies_per_edge_from(g, Side::V) == oracle.per_edge);
  }
}

TEST_CASE("edge, node and degree coefficients match direct evaluation") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto g = random_bipartite(20, 20, 0.3, 1000 + seed);
    const auto ref = reference_coefficients(g);
    const auto p = measure_metamorphosis(g);
    CAPTURE(seed);
    REQUIRE(p.edge_c.size() == ref.edge.size());
    for (std::size_t k = 0; k < ref.edge.size(); ++k) CHECK(p.edge_c[k] == doctest::Approx(ref.edge[k]).epsilon(1e-12));
    for (NodeIndex i = 0; i < g.n_u(); ++i) CHECK(p.node_c.u[i] == doctest::Approx(ref.node_u[i]).epsilon(1e-12));
    for (NodeIndex j = 0; j < g.n_v(); ++j) CHECK(p.node_c.v[j] == doctest::Approx(ref.node_v[j]).epsilon(1e-12));
    CHECK(p.degree_c.u.size() == ref.degree_u.size());
    for (const auto& [d, c] : ref.degree_u) CHECK(coefficient_at(p.degree_c.u, d) == doctest::Approx(c).epsilon(1e-12));
    for (const auto& [d, c] : ref.degree_v) CHECK(coefficient_at(p.degree_c.v, d) == doctest::Approx(c).epsilon(1e-12));
  }
}

TEST_CASE("coefficients on named graphs") {
  const auto k22 = complete_bipartite(2, 2);
  for (double c : metamorphosis_edge(k22)) CHECK(c == 1.0);
  const auto nodes = metamorphosis_node(k22);
  for (double c : nodes.u) CHECK(c == 1.0);
  for (double c : nodes.v) CHECK(c == 1.0);
  const auto per_degree = metamorphosis_per_degree(k22);
  CHECK(per_degree.u.size() == 1);
  CHECK(per_degree.u.at(2) == DegreeCoefficient{1.0, 2});
  CHECK(per_degree.v.at(2) == DegreeCoefficient{1.0, 2});
  CHECK(coefficient_at(per_degree.u, 3) == 0.0);

  // Pendant edge: one endpoint of degree 1.
  const auto pendant = make_graph({{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 1}}, 3, 2);
  const auto edges = pendant.edge_list();
  const auto c = metamorphosis_edge(pendant);
  for (std::size_t id = 0; id < edges.size(); ++id) {
    if (edges[id].u == 2) CHECK(c[id] == 0.0);
  }

  const auto s = star(5);
  CHECK(metamorphosis_node(s).u[0] == 0.0);
}

TEST_CASE("isolated nodes get zero node coefficient and no degree class") {
  const auto g = make_graph({{0, 0}, {0, 1}, {1, 0}, {1, 1}}, 4, 3);
  const auto nodes = metamorphosis_node(g);
  CHECK(nodes.u[3] == 0.0);
  CHECK(nodes.v[2] == 0.0);
  CHECK(metamorphosis_per_degree(g).u.count(0) == 0);
}

TEST_CASE("complete bipartite identities") {
  for (NodeIndex a = 2; a <= 6; ++a) {
    for (NodeIndex b = 2; b <= 6; ++b) {
      const auto g = complete_bipartite(a, b);
      CAPTURE(a);
      CAPTURE(b);
      CHECK(count_butterflies(g) == choose2(a) * choose2(b));
      CHECK(count_caterpillars(g) == WideCount{a} * b * (a - 1) * (b - 1));
      CHECK(global_metamorphosis(g) == 1.0);
    }
  }
}

TEST_CASE("sum identities and coefficient range") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto g = seed % 2 ? random_bipartite(25, 18, 0.1 + 0.01 * seed, seed) : random_skewed(60, 40, 300, seed);
    const auto p = measure_metamorphosis(g);
    WideCount per_edge_sum = 0;
    WideCount cat_sum = 0;
    for (auto b : p.edge_butterflies) per_edge_sum += b;
    for (auto c : caterpillars_per_edge(g)) cat_sum += c;
    CAPTURE(seed);
    CHECK(per_edge_sum == 4 * count_butterflies(g));
    CHECK(cat_sum == count_caterpillars(g));
    CHECK(p.butterflies_total == count_butterflies(g));
    const auto in_unit = [](double c) { return c >= 0.0 && c <= 1.0; };
    for (double c : p.edge_c) CHECK(in_unit(c));
    for (double c : p.node_c.u) CHECK(in_unit(c));
    for (double c : p.node_c.v) CHECK(in_unit(c));
    for (const auto& [d, e] : p.degree_c.u) CHECK(in_unit(e.coefficient));
    for (const auto& [d, e] : p.degree_c.v) CHECK(in_unit(e.coefficient));
    CHECK(in_unit(p.global_c));
  }
}

TEST_CASE("counts do not depend on thread count") {
  const auto g = random_skewed(3000, 2000, 40000, 99);
  const WideCount serial = count_butterflies(g, {.threads = 1});
  const auto serial_edges = butterflies_per_edge(g, {.threads = 1});
  for (unsigned t : {2u, 3u, 7u}) {
    CHECK(count_butterflies(g, {.threads = t}) == serial);
    CHECK(butterflies_per_edge(g, {.threads = t}) == serial_edges);
  }
  CHECK(count_butterflies_from(g, Side::U, {.threads = 4}) == count_butterflies_from(g, Side::V, {.threads = 2}));
}

TEST_CASE("wedge source is the side with fewer wedges to walk") {
  // Star center on U: wedges centered on U are 5*4, none on V.
  CHECK(preferred_wedge_source(star(5)) == Side::U);
  const auto flipped = make_graph({{0, 0}, {1, 0}, {2, 0}, {3, 0}}, 4, 1);
  CHECK(preferred_wedge_source(flipped) == Side::V);
}

TEST_CASE("degree distributions") {
  CHECK(degree_distribution(complete_bipartite(2, 2), Side::U) == std::map<Degree, std::uint64_t>{{2, 2}});
  CHECK(degree_distribution(three_path(), Side::U) == std::map<Degree, std::uint64_t>{{1, 1}, {2, 1}});
  const auto g = make_graph({{0, 0}}, 3, 1);
  CHECK(degree_distribution(g, Side::U) == std::map<Degree, std::uint64_t>{{0, 2}, {1, 1}});
}

TEST_CASE("summary and global ratio") {
  const auto s = summarize(complete_bipartite(2, 2));
  CHECK(s.n_u == 2);
  CHECK(s.edges == 4);
  CHECK(s.caterpillars == 4);
  CHECK(s.butterflies == 1);
  CHECK(s.metamorphosis == 1.0);
  CHECK(metamorphosis_ratio(0, 0) == 0.0);
  const auto e = summarize(make_graph({}, 0, 0));
  CHECK(e.metamorphosis == 0.0);
  CHECK(e.butterflies == 0);
}
