#pragma once

// Connected graphs whose identity labeling is closed, organised by their
// layer sizes (a_0 = 1, a_1, ..., a_h). Each such graph is determined by one
// weakly increasing sequence per non-top layer recording how many vertices
// of the next layer every vertex links to.

#include "closed_graph/closedness.hpp"
#include "closed_graph/errors.hpp"
#include "closed_graph/exact.hpp"
#include "closed_graph/graph.hpp"

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace closed_graph {

/// Composition n = a_0 + a_1 + ... + a_h with a_0 = 1 and every a_N >= 1.
class LayerPartition {
public:
  explicit LayerPartition(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty() || sizes_.front() != 1)
      throw DomainError("layer partition must start with a_0 = 1");
    for (std::size_t N = 0; N < sizes_.size(); ++N)
      if (sizes_[N] == 0)
        throw DomainError("layer size a_" + std::to_string(N) + " = 0");
  }

  /// Comma-separated positive integers. A leading 1 is taken as a_0; without
  /// it a_0 = 1 is prepended, so "2,1" and "1,2,1" denote the same partition.
  static LayerPartition parse(std::string_view text) {
    std::vector<std::size_t> sizes;
    std::size_t pos = 0;
    while (true) {
      auto comma = text.find(',', pos);
      auto token = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
      while (!token.empty() && (token.front() == ' ' || token.front() == '\t'))
        token.remove_prefix(1);
      while (!token.empty() && (token.back() == ' ' || token.back() == '\t'))
        token.remove_suffix(1);
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
        throw DomainError("invalid layer size '" + std::string(token) + "'");
      if (value == 0)
        throw DomainError("layer sizes must be positive (got a_N = 0)");
      sizes.push_back(value);
      if (comma == std::string_view::npos)
        break;
      pos = comma + 1;
    }
    if (sizes.front() != 1)
      sizes.insert(sizes.begin(), 1);
    return LayerPartition(std::move(sizes));
  }

  const std::vector<std::size_t> &sizes() const noexcept { return sizes_; }
  std::size_t size(std::size_t N) const { return sizes_.at(N); }
  /// Index h of the top layer.
  std::size_t top() const noexcept { return sizes_.size() - 1; }
  std::size_t order() const noexcept { return std::accumulate(sizes_.begin(), sizes_.end(), std::size_t{0}); }

  /// m_N, the smallest vertex of block N.
  Vertex first_of(std::size_t N) const {
    check_layer(N);
    return static_cast<Vertex>(std::accumulate(sizes_.begin(), sizes_.begin() + N, std::size_t{0}) + 1);
  }
  Vertex last_of(std::size_t N) const { return first_of(N) + static_cast<Vertex>(sizes_[N]) - 1; }
  VertexSet block(std::size_t N) const { return VertexSet::interval(first_of(N), last_of(N)); }

  std::string to_string() const {
    std::string out;
    for (std::size_t N = 0; N < sizes_.size(); ++N)
      out += (N ? "," : "") + std::to_string(sizes_[N]);
    return out;
  }

  bool operator==(const LayerPartition &) const = default;

private:
  void check_layer(std::size_t N) const {
    if (N > top())
      throw DomainError("layer " + std::to_string(N) + " exceeds h = " + std::to_string(top()));
  }

  std::vector<std::size_t> sizes_;
};

/// S_0, ..., S_{h-1}; sequences[N][s - 1] = b_s for layer N.
struct SequenceFamily {
  std::vector<std::vector<std::size_t>> sequences;

  bool operator==(const SequenceFamily &) const = default;
};

struct LayerEncoding {
  LayerPartition partition;
  SequenceFamily family;

  bool operator==(const LayerEncoding &) const = default;
};

/// Throws InvalidSequence unless every S_N has length a_N, is weakly
/// increasing and ends at a_{N+1}.
inline void validate(const LayerPartition &p, const SequenceFamily &f) {
  if (f.sequences.size() != p.top())
    throw InvalidSequence("expected " + std::to_string(p.top()) + " sequences, got " +
                          std::to_string(f.sequences.size()));
  for (std::size_t N = 0; N < p.top(); ++N) {
    const auto &seq = f.sequences[N];
    const std::string where = "S_" + std::to_string(N);
    if (seq.size() != p.size(N))
      throw InvalidSequence(where + " has length " + std::to_string(seq.size()) + ", expected a_" +
                            std::to_string(N) + " = " + std::to_string(p.size(N)));
    for (std::size_t s = 1; s < seq.size(); ++s)
      if (seq[s - 1] > seq[s])
        throw InvalidSequence(where + " is not weakly increasing");
    if (seq.back() != p.size(N + 1))
      throw InvalidSequence(where + " must end at a_" + std::to_string(N + 1) + " = " +
                            std::to_string(p.size(N + 1)));
  }
}

/// Layer sizes and forward-edge sequences of a connected graph whose
/// identity labeling is closed.
inline LayerEncoding sequences_of(const Graph &g) {
  if (!is_connected(g))
    throw NotConnected("layer sequences need a connected graph");
  if (!is_closed_by_definition(g))
    throw PreconditionError("identity labeling is not closed");
  auto layers = layer_decomposition(g);
  LayerPartition p(layers.sizes());
  SequenceFamily f;
  for (std::size_t N = 0; N < p.top(); ++N) {
    if (layers.layers[N] != p.block(N))
      throw std::logic_error("layer of a closed labeling is not the expected interval");
    std::vector<std::size_t> seq;
    for (Vertex u : layers.layers[N]) {
      std::size_t forward = 0;
      for (Vertex v : layers.layers[N + 1])
        forward += g.adjacent(u, v) ? 1 : 0;
      seq.push_back(forward);
    }
    f.sequences.push_back(std::move(seq));
  }
  validate(p, f);
  return {std::move(p), std::move(f)};
}

/// Every layer block is a clique, and the s-th vertex of block N links to
/// the first b_s vertices of block N + 1.
inline Graph graph_from_sequences(const LayerPartition &p, const SequenceFamily &f) {
  validate(p, f);
  std::vector<Edge> edges;
  for (std::size_t N = 0; N <= p.top(); ++N) {
    for (Vertex u = p.first_of(N); u <= p.last_of(N); ++u)
      for (Vertex v = u + 1; v <= p.last_of(N); ++v)
        edges.push_back({u, v});
    if (N == p.top())
      break;
    const Vertex next = p.first_of(N + 1);
    for (std::size_t s = 0; s < p.size(N); ++s)
      for (std::size_t k = 0; k < f.sequences[N][s]; ++k)
        edges.push_back({p.first_of(N) + static_cast<Vertex>(s), next + static_cast<Vertex>(k)});
  }
  return Graph(p.order(), edges);
}

/// Neighbors in block N + 1 of the s-th vertex (1-based) of block N:
/// [m_{N+1}, m_{N+1} + b_s - 1].
inline VertexSet forward_interval(const LayerPartition &p, const SequenceFamily &f, std::size_t N,
                                  std::size_t s) {
  validate(p, f);
  if (N >= p.top())
    throw DomainError("layer " + std::to_string(N) + " has no next layer");
  if (s < 1 || s > p.size(N))
    throw DomainError("position " + std::to_string(s) + " outside layer " + std::to_string(N));
  std::size_t b = f.sequences[N][s - 1];
  if (b == 0)
    throw EmptyLink("vertex " + std::to_string(s) + " of layer " + std::to_string(N) +
                    " has no forward edges");
  Vertex m = p.first_of(N + 1);
  return VertexSet::interval(m, m + static_cast<Vertex>(b) - 1);
}

/// Weakly increasing sequences of nonnegative integers with fixed length and
/// final entry, in lexicographic order.
class WeaklyIncreasingSequences {
public:
  WeaklyIncreasingSequences(std::size_t length, std::size_t last) : last_(last) {
    if (length == 0 || last == 0)
      throw DomainError("sequence length and final entry must be positive");
    current_.assign(length, 0);
    current_.back() = last;
  }

  std::optional<std::vector<std::size_t>> next() {
    if (done_)
      return std::nullopt;
    auto out = current_;
    advance();
    return out;
  }

  /// C(last + length - 1, length - 1).
  BigInt count() const { return binomial(last_ + current_.size() - 1, current_.size() - 1); }

private:
  void advance() {
    // Positions 0 .. length-2 are free.
    std::size_t i = current_.size() - 1;
    while (i > 0 && current_[i - 1] == last_)
      --i;
    if (i == 0) {
      done_ = true;
      return;
    }
    std::size_t value = ++current_[i - 1];
    for (std::size_t j = i; j + 1 < current_.size(); ++j)
      current_[j] = value;
  }

  std::size_t last_;
  std::vector<std::size_t> current_;
  bool done_ = false;
};

inline WeaklyIncreasingSequences enumerate_sequences(std::size_t length, std::size_t last) {
  return WeaklyIncreasingSequences(length, last);
}

/// prod_{N < h} C(a_{N+1} + a_N - 1, a_N - 1).
inline BigInt count_closed_graphs(const LayerPartition &p) {
  BigInt total = 1;
  for (std::size_t N = 0; N < p.top(); ++N)
    total *= binomial(p.size(N + 1) + p.size(N) - 1, p.size(N) - 1);
  return total;
}

/// All connected graphs with closed identity labeling and layer blocks given
/// by p, in lexicographic order of (S_0, ..., S_{h-1}).
class ClosedGraphStream {
public:
  explicit ClosedGraphStream(LayerPartition p) : partition_(std::move(p)) {
    for (std::size_t N = 0; N < partition_.top(); ++N) {
      streams_.emplace_back(partition_.size(N), partition_.size(N + 1));
      family_.sequences.push_back(*streams_.back().next());
    }
  }

  struct Item {
    SequenceFamily family;
    Graph graph;
  };

  std::optional<Item> next() {
    if (done_)
      return std::nullopt;
    Item out{family_, graph_from_sequences(partition_, family_)};
    advance();
    return out;
  }

  const LayerPartition &partition() const noexcept { return partition_; }

private:
  void advance() {
    for (std::size_t N = streams_.size(); N-- > 0;) {
      if (auto seq = streams_[N].next()) {
        family_.sequences[N] = std::move(*seq);
        return;
      }
      streams_[N] = WeaklyIncreasingSequences(partition_.size(N), partition_.size(N + 1));
      family_.sequences[N] = *streams_[N].next();
    }
    done_ = true;
  }

  LayerPartition partition_;
  std::vector<WeaklyIncreasingSequences> streams_;
  SequenceFamily family_;
  bool done_ = false;
};

inline ClosedGraphStream enumerate_closed_graphs(const LayerPartition &p) { return ClosedGraphStream(p); }

/// Every layer partition of n (compositions with a_0 = 1), in lexicographic
/// order of the size lists.
inline std::vector<LayerPartition> layer_partitions(std::size_t n) {
  if (n == 0)
    throw DomainError("n must be positive");
  std::vector<LayerPartition> out;
  std::vector<std::size_t> prefix{1};
  auto recurse = [&](auto &self, std::size_t remaining) -> void {
    if (remaining == 0) {
      out.emplace_back(prefix);
      return;
    }
    for (std::size_t k = 1; k <= remaining; ++k) {
      prefix.push_back(k);
      self(self, remaining - k);
      prefix.pop_back();
    }
  };
  recurse(recurse, n - 1);
  return out;
}

/// Number of connected graphs on {1..n} whose identity labeling is closed,
/// summed over all layer partitions by dynamic programming on the last part.
inline BigInt census_total(std::size_t n) {
  if (n == 0)
    throw DomainError("n must be positive");
  // ways[rem][last]: completions of rem further vertices after a layer of size last.
  std::vector<std::vector<BigInt>> ways(n, std::vector<BigInt>(n + 1, 0));
  for (std::size_t last = 1; last <= n; ++last)
    ways[0][last] = 1;
  for (std::size_t rem = 1; rem < n; ++rem)
    for (std::size_t last = 1; last <= n; ++last)
      for (std::size_t k = 1; k <= rem; ++k)
        ways[rem][last] += binomial(k + last - 1, last - 1) * ways[rem - k][k];
  return ways[n - 1][1];
}

inline constexpr std::size_t census_oracle_bound = 7;

/// Brute-force census: filters all 2^C(n,2) graphs on {1..n} for connected
/// graphs with closed identity labeling.
inline BigInt brute_force_census(std::size_t n) {
  if (n == 0)
    throw DomainError("n must be positive");
  if (n > census_oracle_bound)
    throw OracleLimit(n, census_oracle_bound);
  BigInt count = 0;
  const std::uint64_t masks = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    Graph g = graph_from_edge_mask(n, mask);
    if (is_connected(g) && is_closed_by_definition(g))
      ++count;
  }
  return count;
}

} // namespace closed_graph
