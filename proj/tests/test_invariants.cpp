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

#include "metricdim/constructions.hpp"
#include "metricdim/invariants.hpp"
#include "oracles.hpp"

using namespace metricdim;

namespace {

Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
    e.emplace_back(i, 5 + i);
  }
  return from_edge_list(10, e);
}

}  // namespace

TEST(Invariants, MaxClique) {
  EXPECT_EQ(max_clique(complete_graph(4)).size(), 4);
  EXPECT_EQ(max_clique(cycle_graph(5)).size(), 2);
  EXPECT_EQ(max_clique(md_complete(2).graph).size(), 4);
  EXPECT_EQ(max_clique(md_complete(3).graph).size(), 8);
}

TEST(Invariants, MaxCliqueIsAClique) {
  const Graph g = md_complete(3).graph;
  const VertexSet c = max_clique(g);
  for (int u : c)
    for (int v : c)
      if (u != v) {
        EXPECT_TRUE(g.adjacent(u, v));
      }
}

TEST(Invariants, MaxCliqueMatchesBruteForce) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = oracle::random_connected(rng, n, 0.5);
    EXPECT_EQ(max_clique(g).size(), oracle::brute_clique(g));
  }
}

TEST(Invariants, MaxStar) {
  EXPECT_EQ(max_star(star_graph(5)), 5);
  EXPECT_EQ(max_star(cycle_graph(6)), 2);
  EXPECT_GE(max_star(edim_star(3).graph), 8);
}

TEST(Invariants, BalancedBiclique) {
  EXPECT_EQ(max_balanced_biclique(complete_bipartite_graph(3, 3), 10), 3);
  EXPECT_EQ(max_balanced_biclique(path_graph(4), 10), 1);
  EXPECT_GE(max_balanced_biclique(edim_biclique(2).graph, 10), 2);
  EXPECT_EQ(max_balanced_biclique(complete_bipartite_graph(3, 5), 10), 3);
}

TEST(Invariants, Degeneracy) {
  EXPECT_EQ(degeneracy(complete_graph(5)), 4);
  EXPECT_EQ(degeneracy(path_graph(6)), 1);
  EXPECT_EQ(degeneracy(star_graph(4)), 1);
  EXPECT_GE(degeneracy(md_complete(2).graph), 2);
  EXPECT_EQ(degeneracy(petersen()), 3);
}

TEST(Invariants, Chromatic) {
  EXPECT_EQ(chromatic_number(complete_graph(4)), 4);
  EXPECT_EQ(chromatic_number(cycle_graph(5)), 3);
  EXPECT_EQ(chromatic_number(cycle_graph(6)), 2);
  EXPECT_EQ(chromatic_number(edim_biclique(2).graph), 2);
  EXPECT_EQ(chromatic_number(petersen()), 3);
}

TEST(Invariants, ChromaticMatchesBruteForce) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Graph g = oracle::random_connected(rng, n, 0.45);
    EXPECT_EQ(chromatic_number(g), oracle::brute_chromatic(g));
  }
}

TEST(Invariants, GreedyColoringIsProper) {
  const Graph g = petersen();
  const auto colors = greedy_coloring(g);
  EXPECT_GE(colors, 3);
  std::vector<int> order(10);
  for (int i = 0; i < 10; ++i) order[i] = i;
  const auto c = greedy_colors(g, order);
  for (const Edge& e : g.edges()) EXPECT_NE(c[e.u], c[e.v]);
}

TEST(Invariants, Limits) {
  EXPECT_THROW(chromatic_number(path_graph(17)), limit_exceeded);
}
