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

#include <sstream>

#include "metricdim/graph.hpp"

using namespace metricdim;

TEST(VertexSet, BasicOps) {
  VertexSet s{1, 5, 63};
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(63));
  EXPECT_FALSE(s.contains(0));
  EXPECT_EQ(s.front(), 1);
  s.erase(1);
  EXPECT_EQ(s.front(), 5);
  EXPECT_EQ((VertexSet{1, 2} | VertexSet{2, 3}), (VertexSet{1, 2, 3}));
  EXPECT_EQ((VertexSet{1, 2} & VertexSet{2, 3}), (VertexSet{2}));
  EXPECT_EQ((VertexSet{1, 2} ^ VertexSet{2, 3}), (VertexSet{1, 3}));
  EXPECT_EQ((VertexSet{1, 2} - VertexSet{2, 3}), (VertexSet{1}));
  EXPECT_TRUE((VertexSet{2}).subset_of(VertexSet{1, 2}));
  EXPECT_EQ(VertexSet::range(64).size(), 64);
  EXPECT_EQ(VertexSet::range(0).size(), 0);
}

TEST(VertexSet, IteratesAscending) {
  const VertexSet s{40, 3, 17, 0};
  EXPECT_EQ(s.to_vector(), (std::vector<int>{0, 3, 17, 40}));
}

TEST(Graph, PathFromEdgeList) {
  const Graph g = from_edge_list(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 2);
  EXPECT_EQ(g.neighbors(1), (VertexSet{0, 2}));
  EXPECT_FALSE(g.adjacent(0, 2));
}

TEST(Graph, SingleVertex) {
  const Graph g = from_edge_list(1, {});
  EXPECT_EQ(g.order(), 1);
  EXPECT_EQ(g.size(), 0);
  EXPECT_TRUE(g.connected());
}

TEST(Graph, CompleteDegrees) {
  const Graph g = complete_graph(4);
  EXPECT_EQ(g.size(), 6);
  for (int v = 0; v < 4; ++v) EXPECT_EQ(g.degree(v), 3);
}

TEST(Graph, Rejections) {
  EXPECT_THROW(from_edge_list(3, {{0, 3}}), vertex_out_of_range);
  EXPECT_THROW(from_edge_list(3, {{1, 1}}), self_loop);
  EXPECT_THROW(from_edge_list(3, {{0, 1}, {1, 0}}), duplicate_edge);
  EXPECT_THROW(Graph(65), limit_exceeded);
  EXPECT_NO_THROW(Graph(64));
}

TEST(Graph, FromRowsRequiresSymmetry) {
  std::vector<VertexSet> rows{VertexSet{1}, VertexSet{}};
  EXPECT_THROW(Graph::from_rows(rows), error);
}

TEST(Graph, Connectivity) {
  EXPECT_TRUE(path_graph(5).connected());
  EXPECT_FALSE(from_edge_list(4, {{0, 1}, {2, 3}}).connected());
  EXPECT_TRUE(Graph(0).connected());
}

TEST(Graph, InducedAndRelabeled) {
  const Graph c = cycle_graph(5);
  const Graph p = c.induced(VertexSet{0, 1, 2, 3});
  EXPECT_EQ(p, path_graph(4));
  const std::vector<int> perm{4, 3, 2, 1, 0};
  const Graph r = c.relabeled(perm);
  EXPECT_EQ(r.size(), 5);
  EXPECT_TRUE(r.adjacent(4, 3));
  EXPECT_TRUE(r.adjacent(0, 4));
}

TEST(Graph, EdgesInLexOrder) {
  const Graph g = from_edge_list(4, {{2, 3}, {0, 3}, {1, 0}});
  const auto e = g.edges();
  ASSERT_EQ(e.size(), 3u);
  EXPECT_EQ(e[0], Edge(0, 1));
  EXPECT_EQ(e[1], Edge(0, 3));
  EXPECT_EQ(e[2], Edge(2, 3));
}

TEST(EdgeList, RoundTrip) {
  const Graph g = complete_bipartite_graph(2, 3);
  EXPECT_EQ(parse_edge_list(format_edge_list(g)), g);
}

TEST(EdgeList, Errors) {
  EXPECT_THROW(parse_edge_list(""), parse_error);
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), parse_error);
  EXPECT_THROW(parse_edge_list("3 1\n0 1\n5"), parse_error);
  EXPECT_THROW(parse_edge_list("3 1\n0 7\n"), vertex_out_of_range);
  EXPECT_THROW(parse_edge_list("70 0\n"), limit_exceeded);
  EXPECT_THROW(parse_edge_list("3 1\n1 1\n"), self_loop);
}
