// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails or exceeds its time limit.

#include "closed_graph/closed_graph.hpp"
#include "golden_cases.hpp"
#include "test_support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

using namespace closed_graph;
namespace t = closed_graph::testing;

namespace {

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<std::string()> run; // empty string on success, else the first failure
};

std::string criterion_example_graph() {
  Graph g = t::kite();
  if (!is_closed_by_definition(g))
    return "example graph is not closed by definition";
  auto part = exchange_partition(g);
  if (part.classes != std::vector<VertexSet>{{1, 2}, {3}, {4}})
    return "unexpected exchange classes";
  BigInt formula = count_closed_labelings(g);
  std::size_t brute = all_closed_labelings_bruteforce(g).size();
  if (formula != 4 || brute != 4)
    return "formula " + to_string(formula) + ", brute force " + std::to_string(brute);
  auto q = quotient_graph(g);
  if (q.graph != Graph::path(3))
    return "quotient is not a 3-path";
  if (!is_collapsed(q.graph) || !is_connected(q.graph) || !is_closed_by_definition(q.graph))
    return "quotient is not collapsed, connected and closed";
  return {};
}

std::string criterion_interval_equivalence() {
  std::string failure;
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 6 && failure.empty(); ++n)
    t::for_each_connected_graph(n, [&](const Graph &g) {
      ++checked;
      if (failure.empty() && is_closed_by_intervals(g) != is_closed_by_definition(g))
        failure = "mismatch on\n" + format_edge_list(g);
    });
  if (failure.empty() && checked == 0)
    failure = "no graphs checked";
  return failure;
}

std::string criterion_labeling_count() {
  std::string failure;
  for (std::size_t n = 1; n <= 6 && failure.empty(); ++n)
    t::for_each_connected_graph(n, [&](const Graph &g) {
      if (!failure.empty())
        return;
      auto brute = all_closed_labelings_bruteforce(g);
      if (brute.empty())
        return;
      if (count_closed_labelings(g) != brute.size()) {
        failure = "count mismatch on\n" + format_edge_list(g);
        return;
      }
      auto listed = collect_closed_labelings(g);
      std::set<Labeling> a(listed.begin(), listed.end()), b(brute.begin(), brute.end());
      if (a != b || listed.size() != brute.size())
        failure = "enumeration mismatch on\n" + format_edge_list(g);
    });
  return failure;
}

std::string criterion_exactly_two() {
  std::string failure;
  for (std::size_t n = 3; n <= 6 && failure.empty(); ++n)
    t::for_each_graph(n, [&](const Graph &g) {
      if (!failure.empty())
        return;
      auto brute = all_closed_labelings_bruteforce(g);
      if (brute.empty())
        return;
      bool two = brute.size() == 2;
      bool shape = is_connected(g) && is_collapsed(g);
      if (two != shape)
        failure = "direction " + std::string(two ? "two => connected collapsed" : "connected collapsed => two") +
                  " fails on\n" + format_edge_list(g);
    });
  return failure;
}

std::string criterion_layer_census() {
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto &p : layer_partitions(n)) {
      std::set<Graph> seen;
      auto stream = enumerate_closed_graphs(p);
      while (auto item = stream.next()) {
        const Graph &g = item->graph;
        if (!is_connected(g) || !t::naive_is_closed(g))
          return "not connected and closed:\n" + format_edge_list(g);
        auto layers = layer_decomposition(g);
        for (std::size_t N = 0; N <= p.top(); ++N)
          if (N >= layers.layers.size() || layers.layers[N] != p.block(N))
            return "layer " + std::to_string(N) + " differs for partition " + p.to_string();
        if (layers.layers.size() != p.top() + 1)
          return "extra layers for partition " + p.to_string();
        if (!(sequences_of(g) == LayerEncoding{p, item->family}))
          return "round trip fails for partition " + p.to_string();
        if (!seen.insert(g).second)
          return "duplicate graph for partition " + p.to_string();
      }
      if (count_closed_graphs(p) != seen.size())
        return "count mismatch for partition " + p.to_string();
    }
  return {};
}

std::string criterion_census_total() {
  for (std::size_t n = 1; n <= 6; ++n) {
    BigInt formula = census_total(n);
    BigInt brute = brute_force_census(n);
    if (formula != brute)
      return "n = " + std::to_string(n) + ": " + to_string(formula) + " vs " + to_string(brute);
  }
  return {};
}

std::string criterion_clustering() {
  for (std::size_t n = 2; n <= 8; ++n)
    for (const Graph &g : t::census_graphs(n)) {
      auto r = verify_clustering_bounds(g);
      if (!r.verdicts->all_true())
        return "bound fails on\n" + format_edge_list(g);
    }
  if (local_clustering(t::kite(), 3) != Rational(1, 3))
    return "example vertex 3 is not at 1/3";
  for (std::size_t n = 2; n <= 8; ++n) {
    auto r = verify_clustering_bounds(Graph::path(n));
    if (r.cws != 0 || *r.h != n - 1 || *r.cws_lower_bound != 0)
      return "path on " + std::to_string(n) + " vertices is not tight";
  }
  return {};
}

std::string criterion_swap() {
  std::string failure;
  for (std::size_t n = 2; n <= 6 && failure.empty(); ++n)
    t::for_each_connected_graph(n, [&](const Graph &g) {
      if (!failure.empty() || !is_closed_by_definition(g))
        return;
      for (Vertex i = 1; i <= n; ++i)
        for (Vertex j = i + 1; j <= n; ++j)
          if (exchangeable(g, i, j) &&
              !is_closed_by_definition(relabel(g, Labeling::transposition(n, i, j))))
            failure = "swap " + std::to_string(i) + "," + std::to_string(j) + " breaks\n" + format_edge_list(g);
    });
  return failure;
}

std::string criterion_determinism() {
  for (const auto &c : t::golden_cases()) {
    auto first = t::run_cli(CLOSEDGRAPH_EXE, CORPUS_DIR, c.args);
    auto second = t::run_cli(CLOSEDGRAPH_EXE, CORPUS_DIR, c.args);
    if (first.output != second.output)
      return c.name + ": repeated runs differ";
    if (first.exit_code != c.exit_code)
      return c.name + ": exit code " + std::to_string(first.exit_code);
    if (first.output != t::read_file(t::golden_path(GOLDEN_DIR, c)))
      return c.name + ": output differs from golden file";
  }
  return {};
}

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "example graph: classes, count 4, quotient 3-path", 1, criterion_example_graph},
      {2, "interval criterion equals definition, connected n <= 6", 120, criterion_interval_equivalence},
      {3, "closed-labeling count and enumeration vs brute force, n <= 6", 300, criterion_labeling_count},
      {4, "exactly two closed labelings iff connected and collapsed, 3 <= n <= 6", 300, criterion_exactly_two},
      {5, "layer census: count, distinct, layered, round trip, n <= 8", 300, criterion_layer_census},
      {6, "census total vs exhaustive filter, n <= 6", 600, criterion_census_total},
      {7, "clustering bounds on every census graph n <= 8, tight witnesses", 300, criterion_clustering},
      {8, "swapping exchangeable vertices keeps closedness, n <= 6", 300, criterion_swap},
      {9, "CLI golden files are reproduced byte for byte", 300, criterion_determinism},
  };
  bool all = true;
  for (const auto &c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      failure = c.run();
    } catch (const std::exception &e) {
      failure = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (failure.empty() && seconds > c.limit_seconds)
      failure = "exceeded time limit of " + std::to_string(c.limit_seconds) + " s";
    all = all && failure.empty();
    std::printf("[%s] criterion %d: %s (%.2f s)\n", failure.empty() ? "PASS" : "FAIL", c.id, c.title.c_str(),
                seconds);
    if (!failure.empty())
      std::printf("       %s\n", failure.c_str());
  }
  return all ? 0 : 1;
}
