/*
Copyright 2026 The metricdim Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <gtest/gtest.h>

#include <random>

#include "metricdim/distance.hpp"
#include "oracles.hpp"

using namespace metricdim;

TEST(Distance, SmallCases) {
  EXPECT_EQ(bfs_all_pairs(path_graph(3))(0, 2), 2);
  const DistanceMatrix k4 = bfs_all_pairs(complete_graph(4));
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v) EXPECT_EQ(k4(u, v), u == v ? 0 : 1);
  EXPECT_EQ(bfs_all_pairs(cycle_graph(6)).max_entry(), 3);
}

TEST(Distance, Diameter) {
  EXPECT_EQ(diameter(complete_graph(2)), 1);
  EXPECT_EQ(diameter(complete_graph(7)), 1);
  EXPECT_EQ(diameter(cycle_graph(6)), 3);
  EXPECT_EQ(diameter(path_graph(7)), 6);
  EXPECT_THROW(diameter(Graph(2)), disconnected_graph);
}

TEST(Distance, EdgeVertexDistance) {
  const DistanceMatrix p3 = bfs_all_pairs(path_graph(3));
  EXPECT_EQ(edge_vertex_distance(p3, {0, 1}, 0), 0);
  EXPECT_EQ(edge_vertex_distance(p3, {0, 1}, 2), 1);
  EXPECT_EQ(edge_vertex_distance(bfs_all_pairs(cycle_graph(6)), {0, 1}, 3), 2);
}

TEST(Distance, UnreachableMarked) {
  const DistanceMatrix d = bfs_all_pairs(from_edge_list(3, {{0, 1}}));
  EXPECT_EQ(d(0, 2), unreachable);
  EXPECT_EQ(d(0, 1), 1);
}

TEST(Distance, MatchesFloydWarshall) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 24);
    const Graph g = oracle::random_connected(rng, n, 0.08);
    const DistanceMatrix d = bfs_all_pairs(g);
    const auto ref = oracle::floyd_warshall(g);
    EXPECT_TRUE(distance_invariants_hold(g, d));
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) ASSERT_EQ(d(u, v), ref[u][v]);
  }
}

TEST(Distance, InvariantCheckerRejectsCorruption) {
  const Graph g = cycle_graph(5);
  DistanceMatrix d = bfs_all_pairs(g);
  d.at(0, 2) = 3;
  EXPECT_FALSE(distance_invariants_hold(g, d));
}
