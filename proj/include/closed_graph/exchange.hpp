#pragma once

// Exchangeable vertices (equal full neighborhoods), the quotient graph on
// exchange classes, and the exact count and enumeration of closed labelings
// of a connected closed graph.

#include "closed_graph/closedness.hpp"
#include "closed_graph/errors.hpp"
#include "closed_graph/exact.hpp"
#include "closed_graph/graph.hpp"
#include "closed_graph/labeling_search.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace closed_graph {

/// {v} together with N(v).
inline VertexSet full_neighborhood(const Graph &g, Vertex v) {
  auto members = g.neighbors(v).members();
  members.push_back(v);
  return VertexSet(std::move(members));
}

struct ExchangePartition {
  /// Classes E_1, ..., E_r ordered by minimum element.
  std::vector<VertexSet> classes;
  /// class_of[v - 1] is the 0-based index of the class containing v.
  std::vector<std::size_t> class_of;

  std::size_t size() const noexcept { return classes.size(); }
};

inline ExchangePartition exchange_partition(const Graph &g) {
  std::map<detail::DynamicBitset, std::size_t> index;
  std::vector<std::vector<Vertex>> members;
  ExchangePartition p;
  p.class_of.resize(g.order());
  for (Vertex v = 1; v <= g.order(); ++v) {
    auto key = g.row(v);
    key.set(v);
    auto [it, inserted] = index.try_emplace(std::move(key), members.size());
    if (inserted)
      members.emplace_back();
    members[it->second].push_back(v);
    p.class_of[v - 1] = it->second;
  }
  for (auto &m : members)
    p.classes.emplace_back(std::move(m));
  return p;
}

inline bool exchangeable(const Graph &g, Vertex v, Vertex w) {
  return full_neighborhood(g, v) == full_neighborhood(g, w);
}

/// Relabels g by the transposition (i j). The identity labeling of g must be
/// closed and i, j exchangeable; the result is then closed again.
inline Graph swap_exchangeable(const Graph &g, Vertex i, Vertex j) {
  g.check_vertex(i);
  g.check_vertex(j);
  if (!is_closed_by_definition(g))
    throw PreconditionError("identity labeling is not closed");
  if (!exchangeable(g, i, j))
    throw ExchangeabilityError("vertices " + std::to_string(i) + " and " + std::to_string(j) +
                               " have different full neighborhoods");
  Graph swapped = relabel(g, Labeling::transposition(g.order(), i, j));
  if (!is_closed_by_definition(swapped))
    throw std::logic_error("swapping exchangeable vertices broke closedness");
  return swapped;
}

/// Every exchange class is a singleton.
inline bool is_collapsed(const Graph &g) { return exchange_partition(g).size() == g.order(); }

struct QuotientGraph {
  ExchangePartition partition;
  /// Vertex a stands for partition.classes[a - 1].
  Graph graph;
};

/// G/~ for a connected graph whose identity labeling is closed.
inline QuotientGraph quotient_graph(const Graph &g) {
  if (!is_connected(g))
    throw NotConnected("quotient graph needs a connected graph");
  if (!is_closed_by_definition(g))
    throw PreconditionError("identity labeling is not closed");
  auto part = exchange_partition(g);
  for (const auto &cls : part.classes)
    if (!is_interval(cls))
      throw std::logic_error("exchange class is not an interval under a closed labeling");

  std::vector<Edge> edges;
  const auto r = part.size();
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b) {
      std::size_t hits = 0;
      for (Vertex i : part.classes[a])
        for (Vertex j : part.classes[b])
          hits += g.adjacent(i, j) ? 1 : 0;
      if (hits == 0)
        continue;
      if (hits != part.classes[a].size() * part.classes[b].size())
        throw std::logic_error("exchange classes are only partially joined");
      edges.push_back({static_cast<Vertex>(a + 1), static_cast<Vertex>(b + 1)});
    }
  return QuotientGraph{std::move(part), Graph(r, edges)};
}

namespace detail {

// The lexicographically least closed labeling of a connected graph (the
// identity when it is closed), or the matching error.
inline Labeling base_closed_labeling(const Graph &g) {
  if (!is_connected(g))
    throw NotConnected("closed-labeling count is defined here for connected graphs only");
  if (is_closed_by_definition(g))
    return Labeling::identity(g.order());
  auto lab = find_closed_labeling(g);
  if (!lab)
    throw NotClosed();
  return *lab;
}

} // namespace detail

/// Number of closed labelings of a connected closed graph:
/// 2 * prod |E_a|! when there are r > 1 exchange classes, n! when g is complete.
inline BigInt count_closed_labelings(const Graph &g) {
  detail::base_closed_labeling(g);
  auto part = exchange_partition(g);
  if (part.size() == 1)
    return factorial(g.order());
  BigInt count = 2;
  for (const auto &cls : part.classes)
    count *= factorial(cls.size());
  return count;
}

/// Deterministic stream of all closed labelings of a connected closed graph.
///
/// Starting from the lexicographically least closed labeling, the exchange
/// classes are label intervals. The stream first keeps the class order and
/// then reverses it (skipped when there is a single class); within each pass
/// the per-class permutations run in lexicographic order, first class most
/// significant.
class ClosedLabelingStream {
public:
  explicit ClosedLabelingStream(const Graph &g) : base_(detail::base_closed_labeling(g)) {
    auto part = exchange_partition(relabel(g, base_));
    for (const auto &cls : part.classes) {
      if (!is_interval(cls))
        throw std::logic_error("exchange class is not an interval under a closed labeling");
      starts_.push_back(cls.front());
      std::vector<Vertex> order(cls.size());
      for (std::size_t t = 0; t < order.size(); ++t)
        order[t] = static_cast<Vertex>(t);
      within_.push_back(std::move(order));
    }
    passes_ = part.size() > 1 ? 2 : 1;
  }

  std::optional<Labeling> next() {
    if (done_)
      return std::nullopt;
    const std::size_t n = base_.size();
    // sigma acts on the labels of the base labeling.
    std::vector<Vertex> sigma(n);
    for (std::size_t a = 0; a < starts_.size(); ++a)
      for (std::size_t t = 0; t < within_[a].size(); ++t) {
        Vertex label = starts_[a] + static_cast<Vertex>(within_[a][t]);
        sigma[starts_[a] + t - 1] = pass_ == 0 ? label : static_cast<Vertex>(n + 1 - label);
      }
    Labeling out = base_.then(Labeling(std::move(sigma)));
    advance();
    return out;
  }

  const Labeling &base() const noexcept { return base_; }

private:
  void advance() {
    for (std::size_t a = within_.size(); a-- > 0;)
      if (std::next_permutation(within_[a].begin(), within_[a].end()))
        return;
    // Every class wrapped around to sorted order.
    if (++pass_ == passes_)
      done_ = true;
  }

  Labeling base_;
  std::vector<Vertex> starts_;
  std::vector<std::vector<Vertex>> within_;
  std::size_t pass_ = 0;
  std::size_t passes_ = 1;
  bool done_ = false;
};

inline ClosedLabelingStream enumerate_closed_labelings(const Graph &g) { return ClosedLabelingStream(g); }

inline std::vector<Labeling> collect_closed_labelings(const Graph &g) {
  std::vector<Labeling> out;
  auto stream = enumerate_closed_labelings(g);
  while (auto lab = stream.next())
    out.push_back(std::move(*lab));
  return out;
}

} // namespace closed_graph
