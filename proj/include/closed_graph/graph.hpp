#pragma once

// Simple undirected graphs on the vertex set {1..n}, labelings (permutations
// of {1..n}) and the elementary neighborhood and distance queries that every
// other module builds on.

#include "closed_graph/bitset.hpp"
#include "closed_graph/errors.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace closed_graph {

/// 1-based vertex identifier.
using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;

  auto operator<=>(const Edge &) const = default;
};

/// Strictly increasing set of vertices.
class VertexSet {
public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}
  explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  /// Interval [first, last]; empty when last < first.
  static VertexSet interval(Vertex first, Vertex last) {
    VertexSet s;
    for (Vertex v = first; v <= last && last >= first; ++v)
      s.members_.push_back(v);
    return s;
  }

  const_iterator begin() const noexcept { return members_.begin(); }
  const_iterator end() const noexcept { return members_.end(); }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  Vertex front() const { return members_.front(); }
  Vertex back() const { return members_.back(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Vertex> &members() const noexcept { return members_; }

  bool contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

  bool operator==(const VertexSet &) const = default;
  auto operator<=>(const VertexSet &) const = default;

private:
  std::vector<Vertex> members_;
};

class Graph {
public:
  /// Edgeless graph on n >= 1 vertices.
  explicit Graph(std::size_t n) : n_(n), rows_(n + 1, detail::DynamicBitset(n + 1)) {
    if (n == 0)
      throw DomainError("a graph needs at least one vertex");
  }

  Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
    for (const Edge &e : edges)
      add_edge(e.u, e.v);
  }
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  static Graph complete(std::size_t n) {
    Graph g(n);
    for (Vertex u = 1; u <= n; ++u)
      for (Vertex v = u + 1; v <= n; ++v)
        g.add_edge(u, v);
    return g;
  }

  static Graph path(std::size_t n) {
    Graph g(n);
    for (Vertex v = 1; v < n; ++v)
      g.add_edge(v, v + 1);
    return g;
  }

  /// Vertex count n.
  std::size_t order() const noexcept { return n_; }
  /// Edge count m.
  std::size_t size() const noexcept { return m_; }

  bool contains(Vertex v) const noexcept { return v >= 1 && v <= n_; }

  bool adjacent(Vertex u, Vertex v) const noexcept { return rows_[u].test(v); }

  std::size_t degree(Vertex v) const {
    check_vertex(v);
    return rows_[v].count();
  }

  VertexSet neighbors(Vertex v) const {
    check_vertex(v);
    std::vector<Vertex> out;
    rows_[v].for_each([&](std::size_t w) { out.push_back(static_cast<Vertex>(w)); });
    return VertexSet(std::move(out));
  }

  /// Adjacency row of v as a bitset indexed by vertex (bit 0 unused).
  const detail::DynamicBitset &row(Vertex v) const noexcept { return rows_[v]; }

  /// Edges {u,v} with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 1; u <= n_; ++u)
      rows_[u].for_each([&](std::size_t w) {
        if (w > u)
          out.push_back({u, static_cast<Vertex>(w)});
      });
    return out;
  }

  void check_vertex(Vertex v) const {
    if (!contains(v))
      throw DomainError("vertex " + std::to_string(v) + " outside [1," + std::to_string(n_) + "]");
  }

  bool operator==(const Graph &other) const { return n_ == other.n_ && rows_ == other.rows_; }
  std::strong_ordering operator<=>(const Graph &other) const {
    if (auto c = n_ <=> other.n_; c != 0)
      return c;
    return std::lexicographical_compare_three_way(rows_.begin(), rows_.end(), other.rows_.begin(),
                                                  other.rows_.end());
  }

private:
  void add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
      throw DomainError("self-loop at vertex " + std::to_string(u));
    if (rows_[u].test(v))
      return;
    rows_[u].set(v);
    rows_[v].set(u);
    ++m_;
  }

  std::size_t n_;
  std::size_t m_ = 0;
  std::vector<detail::DynamicBitset> rows_;
};

/// A bijection {1..n} -> {1..n}; label(v) is the label given to vertex v.
class Labeling {
public:
  explicit Labeling(std::vector<Vertex> labels) : labels_(std::move(labels)) {
    std::vector<bool> seen(labels_.size() + 1, false);
    for (Vertex l : labels_) {
      if (l < 1 || l > labels_.size() || seen[l])
        throw InvalidLabeling("labeling is not a bijection onto [1," +
                              std::to_string(labels_.size()) + "]");
      seen[l] = true;
    }
  }

  static Labeling identity(std::size_t n) {
    std::vector<Vertex> l(n);
    for (std::size_t i = 0; i < n; ++i)
      l[i] = static_cast<Vertex>(i + 1);
    return Labeling(std::move(l));
  }

  /// The transposition (i j) on {1..n}.
  static Labeling transposition(std::size_t n, Vertex i, Vertex j) {
    auto l = identity(n).labels_;
    if (i < 1 || j < 1 || i > n || j > n)
      throw DomainError("transposition outside [1," + std::to_string(n) + "]");
    std::swap(l[i - 1], l[j - 1]);
    return Labeling(std::move(l));
  }

  std::size_t size() const noexcept { return labels_.size(); }
  Vertex operator()(Vertex v) const { return labels_[v - 1]; }
  std::span<const Vertex> labels() const noexcept { return labels_; }

  Labeling inverse() const {
    std::vector<Vertex> inv(labels_.size());
    for (std::size_t v = 0; v < labels_.size(); ++v)
      inv[labels_[v] - 1] = static_cast<Vertex>(v + 1);
    return Labeling(std::move(inv));
  }

  /// v -> n + 1 - label(v).
  Labeling reversed() const {
    std::vector<Vertex> r(labels_);
    for (Vertex &l : r)
      l = static_cast<Vertex>(labels_.size() + 1 - l);
    return Labeling(std::move(r));
  }

  /// Composition: v -> next(label(v)).
  Labeling then(const Labeling &next) const {
    if (next.size() != size())
      throw InvalidLabeling("cannot compose labelings of different sizes");
    std::vector<Vertex> c(labels_.size());
    for (std::size_t v = 0; v < labels_.size(); ++v)
      c[v] = next(labels_[v]);
    return Labeling(std::move(c));
  }

  bool operator==(const Labeling &) const = default;
  auto operator<=>(const Labeling &) const = default;

private:
  std::vector<Vertex> labels_;
};

/// Graph with edge {lab(u), lab(v)} for every edge {u, v} of g.
inline Graph relabel(const Graph &g, const Labeling &lab) {
  if (lab.size() != g.order())
    throw InvalidLabeling("labeling has " + std::to_string(lab.size()) + " entries, graph has " +
                          std::to_string(g.order()) + " vertices");
  std::vector<Edge> moved;
  moved.reserve(g.size());
  for (const Edge &e : g.edges())
    moved.push_back({lab(e.u), lab(e.v)});
  return Graph(g.order(), moved);
}

/// N^>(i): neighbors of i with a larger label.
inline VertexSet upper_neighborhood(const Graph &g, Vertex i) {
  g.check_vertex(i);
  std::vector<Vertex> out;
  g.row(i).for_each([&](std::size_t w) {
    if (w > i)
      out.push_back(static_cast<Vertex>(w));
  });
  return VertexSet(std::move(out));
}

/// N^<(i): neighbors of i with a smaller label.
inline VertexSet lower_neighborhood(const Graph &g, Vertex i) {
  g.check_vertex(i);
  std::vector<Vertex> out;
  g.row(i).for_each([&](std::size_t w) {
    if (w < i)
      out.push_back(static_cast<Vertex>(w));
  });
  return VertexSet(std::move(out));
}

/// True iff s is empty or s = [min s, max s].
inline bool is_interval(const VertexSet &s) {
  return s.empty() || s.back() - s.front() + 1 == s.size();
}

inline bool is_complete_on(const Graph &g, const VertexSet &s) {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (!g.adjacent(s[a], s[b]))
        return false;
  return true;
}

/// Shortest-path edge counts from src; entry v-1 holds the distance to v,
/// std::nullopt when v is unreachable.
inline std::vector<std::optional<std::size_t>> bfs_distances(const Graph &g, Vertex src) {
  g.check_vertex(src);
  std::vector<std::optional<std::size_t>> dist(g.order());
  std::deque<Vertex> queue{src};
  dist[src - 1] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    g.row(u).for_each([&](std::size_t w) {
      if (!dist[w - 1]) {
        dist[w - 1] = *dist[u - 1] + 1;
        queue.push_back(static_cast<Vertex>(w));
      }
    });
  }
  return dist;
}

inline bool is_connected(const Graph &g) {
  auto dist = bfs_distances(g, 1);
  return std::all_of(dist.begin(), dist.end(), [](const auto &d) { return d.has_value(); });
}

inline std::size_t diameter(const Graph &g) {
  std::size_t best = 0;
  for (Vertex s = 1; s <= g.order(); ++s)
    for (const auto &d : bfs_distances(g, s)) {
      if (!d)
        throw NotConnected("diameter of a disconnected graph is undefined");
      best = std::max(best, *d);
    }
  return best;
}

/// Connected components, each sorted, ordered by their minimum vertex.
inline std::vector<VertexSet> connected_components(const Graph &g) {
  std::vector<bool> seen(g.order() + 1, false);
  std::vector<VertexSet> out;
  for (Vertex s = 1; s <= g.order(); ++s) {
    if (seen[s])
      continue;
    std::vector<Vertex> comp;
    auto dist = bfs_distances(g, s);
    for (Vertex v = 1; v <= g.order(); ++v)
      if (dist[v - 1]) {
        seen[v] = true;
        comp.push_back(v);
      }
    out.emplace_back(std::move(comp));
  }
  return out;
}

/// Number of vertex pairs, i.e. the number of bits in an edge mask.
inline std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

/// Graph whose edges are selected by mask; bit k corresponds to the k-th pair
/// in the order (1,2), (1,3), ..., (1,n), (2,3), ...
inline Graph graph_from_edge_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v, ++bit)
      if ((mask >> bit) & 1U)
        edges.push_back({u, v});
  return Graph(n, edges);
}

} // namespace closed_graph
