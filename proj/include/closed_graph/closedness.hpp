#pragma once

// Closedness of the identity labeling and the distance layers of a labeled
// connected graph.

#include "closed_graph/errors.hpp"
#include "closed_graph/exact.hpp"
#include "closed_graph/graph.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace closed_graph {

/// A triple (center; j, k) with j < k both above or both below center and
/// {j, k} not an edge.
struct ClosednessViolation {
  Vertex center;
  Vertex j;
  Vertex k;

  bool operator==(const ClosednessViolation &) const = default;
};

/// Definitional test, valid for disconnected graphs as well: whenever two
/// edges leave a vertex towards larger labels, or arrive from smaller labels,
/// their far endpoints are adjacent.
inline bool is_closed_by_definition(const Graph &g) {
  for (Vertex i = 1; i <= g.order(); ++i) {
    const auto &row = g.row(i);
    bool ok = true;
    row.for_each([&](std::size_t w) {
      if (!ok)
        return;
      // Pairs (w, x) with x beyond w on the same side of i.
      if (w > i)
        ok = row.is_subset_above(w, g.row(static_cast<Vertex>(w)));
      else
        ok = row.is_subset_below(w, g.row(static_cast<Vertex>(w)));
    });
    if (!ok)
      return false;
  }
  return true;
}

/// First violating triple in (center, j, k) lexicographic order.
inline std::optional<ClosednessViolation> find_closedness_violation(const Graph &g) {
  for (Vertex i = 1; i <= g.order(); ++i) {
    auto nbrs = g.neighbors(i);
    for (std::size_t a = 0; a < nbrs.size(); ++a)
      for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
        Vertex j = nbrs[a];
        Vertex k = nbrs[b];
        bool same_side = (j > i) == (k > i);
        if (same_side && !g.adjacent(j, k))
          return ClosednessViolation{i, j, k};
      }
  }
  return std::nullopt;
}

/// Connected graphs only: closed iff every N^>(i) is complete and an
/// interval [i+1, i+r]. An interval that does not start at i+1 is not enough:
/// 1-3-2 has N^>(1) = N^>(2) = {3} but is not closed.
inline bool is_closed_by_intervals(const Graph &g) {
  if (!is_connected(g))
    throw NotConnected("interval criterion applies to connected graphs only");
  for (Vertex i = 1; i <= g.order(); ++i) {
    auto upper = upper_neighborhood(g, i);
    if (upper.empty())
      continue;
    if (upper.front() != i + 1 || !is_interval(upper) || !is_complete_on(g, upper))
      return false;
  }
  return true;
}

struct LayerDecomposition {
  /// layers[N] = L_N, the vertices at distance N from vertex 1.
  std::vector<VertexSet> layers;
  /// layer_of[v - 1] = N with v in L_N.
  std::vector<std::size_t> layer_of;

  /// h, the index of the last layer.
  std::size_t top() const noexcept { return layers.size() - 1; }
  std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> a;
    for (const auto &l : layers)
      a.push_back(l.size());
    return a;
  }
};

inline LayerDecomposition layer_decomposition(const Graph &g) {
  auto dist = bfs_distances(g, 1);
  LayerDecomposition out;
  out.layer_of.resize(g.order());
  std::vector<std::vector<Vertex>> buckets;
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (!dist[v - 1])
      throw NotConnected("layer decomposition needs a connected graph");
    std::size_t d = *dist[v - 1];
    if (buckets.size() <= d)
      buckets.resize(d + 1);
    buckets[d].push_back(v);
    out.layer_of[v - 1] = d;
  }
  for (auto &b : buckets)
    out.layers.emplace_back(std::move(b));
  return out;
}

/// Every edge joins equal or consecutive layers. Holds for every connected
/// labeled graph, closed or not.
inline bool edges_span_adjacent_layers(const Graph &g, const LayerDecomposition &layers) {
  for (const Edge &e : g.edges()) {
    auto a = layers.layer_of[e.u - 1];
    auto b = layers.layer_of[e.v - 1];
    if ((a > b ? a - b : b - a) > 1)
      return false;
  }
  return true;
}

struct LayerTheoremReport {
  LayerDecomposition layers;
  std::size_t h = 0;
  std::size_t diameter = 0;
  /// Number of longest shortest paths inspected for the endpoint claim.
  BigInt longest_paths = 0;

  bool layers_complete_intervals = false; // each L_N complete and an interval
  bool next_layer_is_upper_of_max = false; // L_{N+1} = N^>(max L_N)
  bool diameter_equals_h = false;
  bool edges_span_adjacent = false;
  bool longest_path_endpoints = false; // one end in L_0 u L_1, the other in L_h

  bool all_true() const noexcept {
    return layers_complete_intervals && next_layer_is_upper_of_max && diameter_equals_h &&
           edges_span_adjacent && longest_path_endpoints;
  }
};

namespace detail {

// Number of shortest paths from src to every vertex.
inline std::vector<BigInt> shortest_path_counts(const Graph &g, Vertex src,
                                                const std::vector<std::optional<std::size_t>> &dist) {
  std::vector<Vertex> order;
  for (Vertex v = 1; v <= g.order(); ++v)
    order.push_back(v);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return *dist[a - 1] < *dist[b - 1]; });
  std::vector<BigInt> count(g.order() + 1, 0);
  count[src] = 1;
  for (Vertex v : order)
    g.row(v).for_each([&](std::size_t w) {
      if (*dist[w - 1] == *dist[v - 1] + 1)
        count[w] += count[v];
    });
  return count;
}

} // namespace detail

/// Checks the layer structure that every connected graph with a closed
/// identity labeling must have.
inline LayerTheoremReport verify_layer_theorems(const Graph &g) {
  if (!is_connected(g))
    throw NotConnected("layer claims need a connected graph");
  if (!is_closed_by_definition(g))
    throw PreconditionError(
        "identity labeling is not closed; layer completeness, upper-neighborhood, diameter and "
        "longest-path claims do not apply");

  LayerTheoremReport r;
  r.layers = layer_decomposition(g);
  r.h = r.layers.top();
  r.diameter = diameter(g);

  r.layers_complete_intervals = true;
  for (const auto &layer : r.layers.layers)
    if (!is_interval(layer) || !is_complete_on(g, layer))
      r.layers_complete_intervals = false;

  r.next_layer_is_upper_of_max = true;
  for (std::size_t N = 0; N <= r.h; ++N) {
    VertexSet expected = N < r.h ? r.layers.layers[N + 1] : VertexSet{};
    if (upper_neighborhood(g, r.layers.layers[N].back()) != expected)
      r.next_layer_is_upper_of_max = false;
  }

  r.diameter_equals_h = r.diameter == r.h;
  r.edges_span_adjacent = edges_span_adjacent_layers(g, r.layers);

  auto low_end = [&](Vertex v) { return r.layers.layer_of[v - 1] <= 1; };
  auto high_end = [&](Vertex v) { return r.layers.layer_of[v - 1] == r.h; };
  r.longest_path_endpoints = true;
  for (Vertex u = 1; u <= g.order(); ++u) {
    auto dist = bfs_distances(g, u);
    auto counts = detail::shortest_path_counts(g, u, dist);
    for (Vertex v = u + 1; v <= g.order(); ++v) {
      if (*dist[v - 1] != r.diameter)
        continue;
      r.longest_paths += counts[v];
      if (!((low_end(u) && high_end(v)) || (low_end(v) && high_end(u))))
        r.longest_path_endpoints = false;
    }
  }
  return r;
}

} // namespace closed_graph
