#include <limits>
#include <stdexcept>
#include <string>

#include "bigen/metrics.hpp"

namespace bigen {

OracleResult butterfly_oracle(const BipartiteGraph& g, std::uint64_t quadruple_budget) {
  OracleResult out;
  out.per_edge.assign(g.num_edges(), 0);
  const std::uint64_t nu = g.n_u();
  const std::uint64_t nv = g.n_v();
  if (nu < 2 || nv < 2) return out;

  const WideCount quadruples = static_cast<WideCount>(nu * (nu - 1) / 2) * (nv * (nv - 1) / 2);
  if (quadruples > quadruple_budget) {
    throw std::length_error("butterfly oracle refuses " + to_string(quadruples) +
                            " vertex quadruples; bound is " + std::to_string(quadruple_budget));
  }

  // Dense edge-id matrix, built straight from the edge list so the oracle
  // shares nothing with the wedge counters beyond edge numbering.
  constexpr EdgeId kNone = std::numeric_limits<EdgeId>::max();
  std::vector<EdgeId> id(nu * nv, kNone);
  EdgeId next = 0;
  for (const Edge& e : g.edge_list()) id[e.u * nv + e.v] = next++;

  for (std::uint64_t i = 0; i < nu; ++i) {
    for (std::uint64_t i2 = i + 1; i2 < nu; ++i2) {
      for (std::uint64_t j = 0; j < nv; ++j) {
        const EdgeId a = id[i * nv + j];
        const EdgeId b = id[i2 * nv + j];
        if (a == kNone || b == kNone) continue;
        for (std::uint64_t j2 = j + 1; j2 < nv; ++j2) {
          const EdgeId c = id[i * nv + j2];
          const EdgeId d = id[i2 * nv + j2];
          if (c == kNone || d == kNone) continue;
          ++out.total;
          ++out.per_edge[a];
          ++out.per_edge[b];
          ++out.per_edge[c];
          ++out.per_edge[d];
        }
      }
    }
  }
  return out;
}

}  // namespace bigen
