#include "closed_graph/labeling_search.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace closed_graph;
using closed_graph::testing::claw;
using closed_graph::testing::kite;

TEST(BruteForce, KiteHasFourClosedLabelings) {
  auto labs = all_closed_labelings_bruteforce(kite());
  ASSERT_EQ(labs.size(), 4U);
  EXPECT_EQ(labs.front(), Labeling::identity(4));
  EXPECT_NE(std::find(labs.begin(), labs.end(), Labeling::transposition(4, 1, 2)), labs.end());
  EXPECT_TRUE(std::is_sorted(labs.begin(), labs.end()));
}

TEST(BruteForce, CompleteAndClaw) {
  EXPECT_EQ(all_closed_labelings_bruteforce(Graph::complete(3)).size(), 6U);
  EXPECT_TRUE(all_closed_labelings_bruteforce(claw()).empty());
}

TEST(BruteForce, OracleLimit) {
  EXPECT_THROW(all_closed_labelings_bruteforce(Graph::path(10)), OracleLimit);
  EXPECT_THROW(all_closed_labelings_bruteforce(Graph::path(5), 4), OracleLimit);
  EXPECT_EQ(all_closed_labelings_bruteforce(Graph::path(5), 5).size(), 2U);
}

TEST(FindClosedLabeling, Examples) {
  EXPECT_EQ(find_closed_labeling(Graph(1)), Labeling::identity(1));
  EXPECT_FALSE(find_closed_labeling(claw()));
  EXPECT_EQ(find_closed_labeling(kite()), Labeling::identity(4));
}

TEST(FindClosedLabeling, ScrambledPathIsRecovered) {
  // Path 3-1-4-2: the least closed labeling puts vertex 1 second.
  Graph g(4, {{1, 3}, {1, 4}, {2, 4}});
  auto lab = find_closed_labeling(g);
  ASSERT_TRUE(lab);
  EXPECT_EQ(*lab, Labeling({2, 4, 1, 3}));
  EXPECT_TRUE(is_closed_by_definition(relabel(g, *lab)));
}

TEST(IsClosedGraph, Examples) {
  for (std::size_t n = 1; n <= 8; ++n)
    EXPECT_TRUE(is_closed_graph(Graph::path(n)));
  EXPECT_FALSE(is_closed_graph(claw()));
  EXPECT_TRUE(is_closed_graph(Graph(4, {{1, 2}, {3, 4}})));
  EXPECT_TRUE(is_closed_graph(Graph(4, {{1, 3}, {2, 4}})));
}

namespace {

void check_against_oracle(const Graph &g) {
  auto brute = all_closed_labelings_bruteforce(g);
  auto found = find_closed_labeling(g);
  ASSERT_EQ(found.has_value(), !brute.empty()) << format_edge_list(g);
  ASSERT_EQ(is_closed_graph(g), !brute.empty());
  if (!found)
    return;
  ASSERT_EQ(*found, brute.front()) << format_edge_list(g);
  ASSERT_TRUE(is_closed_by_definition(relabel(g, *found)));
  ASSERT_TRUE(is_closed_by_definition(relabel(g, found->reversed())));
}

} // namespace

TEST(FindClosedLabeling, AgreesWithOracleOnAllGraphsUpToFive) {
  for (std::size_t n = 1; n <= 5; ++n)
    closed_graph::testing::for_each_graph(n, check_against_oracle);
}

TEST(FindClosedLabeling, AgreesWithOracleOnRandomGraphs) {
  std::mt19937_64 rng(2024);
  for (std::size_t n : {6U, 7U}) {
    for (int trial = 0; trial < 10000; ++trial) {
      // Dense graphs are where closed labelings live; mix densities.
      double p = 0.3 + 0.6 * static_cast<double>(trial % 7) / 6.0;
      check_against_oracle(closed_graph::testing::random_graph(n, p, rng));
    }
  }
}

TEST(BruteForce, ReversalOfClosedIsClosed) {
  closed_graph::testing::for_each_graph(5, [](const Graph &g) {
    for (const auto &lab : all_closed_labelings_bruteforce(g))
      ASSERT_TRUE(is_closed_by_definition(relabel(g, lab.reversed())));
  });
}

TEST(LabelingSearch, VisitsEveryClosedLabelingOfConnectedGraphs) {
  // The search itself enumerates the same set as brute force.
  closed_graph::testing::for_each_connected_graph(5, [](const Graph &g) {
    std::vector<Labeling> seen;
    ClosedLabelingSearch(g).run([&](const Labeling &lab) {
      seen.push_back(lab);
      return true;
    });
    std::sort(seen.begin(), seen.end());
    ASSERT_EQ(seen, all_closed_labelings_bruteforce(g)) << format_edge_list(g);
  });
}

TEST(LabelingSearch, LargerGraphsStayFast) {
  // Band graph on 40 vertices: u ~ v iff |u - v| <= 4.
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= 40; ++u)
    for (Vertex v = u + 1; v <= std::min<Vertex>(40, u + 4); ++v)
      edges.push_back({u, v});
  Graph band(40, edges);
  std::vector<Vertex> perm(40);
  for (Vertex i = 0; i < 40; ++i)
    perm[i] = (i * 17) % 40 + 1;
  Graph scrambled = relabel(band, Labeling(perm));
  auto lab = find_closed_labeling(scrambled);
  ASSERT_TRUE(lab);
  EXPECT_TRUE(is_closed_by_definition(relabel(scrambled, *lab)));

  // Attaching a claw makes it non-closed.
  edges.push_back({41, 20});
  edges.push_back({42, 41});
  edges.push_back({43, 41});
  edges.push_back({44, 41});
  EXPECT_FALSE(is_closed_graph(Graph(44, edges)));
}
