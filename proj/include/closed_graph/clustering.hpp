#pragma once

// Exact local and Watts-Strogatz clustering coefficients, and the lower
// bounds that hold for connected closed graphs.

#include "closed_graph/closedness.hpp"
#include "closed_graph/errors.hpp"
#include "closed_graph/exact.hpp"
#include "closed_graph/graph.hpp"
#include "closed_graph/labeling_search.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace closed_graph {

/// Adjacent neighbor pairs over all neighbor pairs; 0 when deg(v) <= 1.
inline Rational local_clustering(const Graph &g, Vertex v) {
  auto nbrs = g.neighbors(v);
  const std::size_t d = nbrs.size();
  if (d <= 1)
    return 0;
  std::size_t linked = 0;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      linked += g.adjacent(nbrs[a], nbrs[b]) ? 1 : 0;
  return Rational(BigInt(linked), BigInt(d * (d - 1) / 2));
}

/// Mean of the local coefficients.
inline Rational watts_strogatz(const Graph &g) {
  Rational sum = 0;
  for (Vertex v = 1; v <= g.order(); ++v)
    sum += local_clustering(g, v);
  return sum / BigInt(g.order());
}

struct VertexClustering {
  Vertex vertex;
  std::size_t degree;
  Rational coefficient;
};

struct ClusteringVerdicts {
  bool degree_bound = false;      // C_v >= 1/2 - 1/(2(d-1)) whenever d >= 2
  bool third_bound = false;       // C_v >= 1/3 whenever d >= 3
  bool open_wedges_bound = false; // c <= h - 1
  bool leaf_bound = false;        // at most two leaves
  bool global_bound = false;      // C_WS >= 1/3 - (h+1)/(3n)

  bool all_true() const noexcept {
    return degree_bound && third_bound && open_wedges_bound && leaf_bound && global_bound;
  }
};

struct ClusteringReport {
  std::vector<VertexClustering> per_vertex;
  Rational cws;
  // Degree classes: deg >= 3; deg 2 with C_v = 1; deg 2 with C_v = 0; leaves.
  std::size_t high_degree = 0;
  std::size_t closed_wedges = 0;
  std::size_t open_wedges = 0;
  std::size_t leaves = 0;
  std::size_t isolated = 0;

  // Filled in by verify_clustering_bounds.
  std::optional<std::size_t> h;
  std::optional<Rational> cws_lower_bound;
  std::optional<ClusteringVerdicts> verdicts;

  /// c, the number of degree-2 vertices with C_v = 0.
  std::size_t c() const noexcept { return open_wedges; }
};

/// Coefficients and degree classes of any graph; no bound verdicts.
inline ClusteringReport measure_clustering(const Graph &g) {
  ClusteringReport r;
  Rational sum = 0;
  for (Vertex v = 1; v <= g.order(); ++v) {
    std::size_t d = g.degree(v);
    Rational cv = local_clustering(g, v);
    sum += cv;
    if (d == 0)
      ++r.isolated;
    else if (d == 1)
      ++r.leaves;
    else if (d == 2)
      ++(cv == 1 ? r.closed_wedges : r.open_wedges);
    else
      ++r.high_degree;
    r.per_vertex.push_back({v, d, std::move(cv)});
  }
  r.cws = sum / BigInt(g.order());
  return r;
}

/// Measures g and checks every clustering bound for connected closed graphs.
/// Comparisons are exact.
inline ClusteringReport verify_clustering_bounds(const Graph &g) {
  if (g.order() < 2)
    throw PreconditionError("clustering bounds need n > 1");
  if (!is_connected(g))
    throw NotConnected("clustering bounds need a connected graph");
  if (!is_closed_graph(g))
    throw NotClosed();

  ClusteringReport r = measure_clustering(g);
  const std::size_t h = diameter(g);
  const BigInt n = g.order();
  r.h = h;

  ClusteringVerdicts v;
  v.degree_bound = true;
  v.third_bound = true;
  for (const auto &pv : r.per_vertex) {
    if (pv.degree >= 2) {
      Rational bound = Rational(1, 2) - Rational(BigInt(1), BigInt(2 * (pv.degree - 1)));
      if (pv.coefficient < bound)
        v.degree_bound = false;
    }
    if (pv.degree >= 3 && pv.coefficient < Rational(1, 3))
      v.third_bound = false;
  }
  v.open_wedges_bound = h >= 1 && r.open_wedges <= h - 1;
  v.leaf_bound = r.leaves <= 2;
  r.cws_lower_bound = Rational(1, 3) - Rational(BigInt(h + 1), 3 * n);
  v.global_bound = r.cws >= *r.cws_lower_bound;
  r.verdicts = v;
  return r;
}

} // namespace closed_graph
