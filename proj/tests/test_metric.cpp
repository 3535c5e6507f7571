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

#include "metricdim/constructions.hpp"
#include "metricdim/metric.hpp"

using namespace metricdim;

TEST(LandmarkSet, SortedAndValidated) {
  const LandmarkSet s{3, 1, 2};
  EXPECT_EQ(s.ids(), (std::vector<int>{1, 2, 3}));
  EXPECT_THROW(LandmarkSet({1, 1}), domain_error);
  EXPECT_THROW(LandmarkSet({-1}), vertex_out_of_range);
  EXPECT_THROW(s.check_within(3), vertex_out_of_range);
  EXPECT_NO_THROW(s.check_within(4));
}

TEST(Metric, VertexVectors) {
  const DistanceMatrix d = bfs_all_pairs(path_graph(3));
  EXPECT_EQ(vertex_distance_vector(d, 0, LandmarkSet{2}), (DistanceVector{2}));
  EXPECT_EQ(vertex_distance_vector(d, 2, LandmarkSet{2}), (DistanceVector{0}));
}

TEST(Metric, EdgeVectors) {
  const DistanceMatrix d = bfs_all_pairs(path_graph(4));
  EXPECT_EQ(edge_distance_vector(d, {2, 3}, LandmarkSet{0}), (DistanceVector{2}));
  EXPECT_EQ(edge_distance_vector(d, {0, 1}, LandmarkSet{0}), (DistanceVector{0}));
}

TEST(Metric, LabelDigitsInCompleteConstruction) {
  // coordinate i of a clique vertex is one more than its i-th label digit
  const ConstructionOutput out = md_complete(3);
  const DistanceMatrix d = bfs_all_pairs(out.graph);
  for (int v = 0; v < out.graph.order(); ++v) {
    if (out.roles[v] != "clique") continue;
    const int label = std::stoi(out.labels[v], nullptr, 2);
    const DistanceVector vec = vertex_distance_vector(d, v, out.landmarks);
    for (int i = 1; i <= 3; ++i) EXPECT_EQ(vec[i - 1], 1 + digit(label, 2, i));
  }
}

TEST(Metric, WholeVertexSetResolves) {
  const Graph g = cycle_graph(6);
  EXPECT_TRUE(is_vertex_resolving(g, LandmarkSet(g.vertices())));
}

TEST(Metric, MidpointOfP3Fails) {
  const ResolutionResult r = is_vertex_resolving(path_graph(3), LandmarkSet{1});
  EXPECT_FALSE(r);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->first, 0);
  EXPECT_EQ(r.witness->second, 2);
  EXPECT_EQ(r.witness->shared_vector, (DistanceVector{1}));
}

TEST(Metric, EndpointOfP3Resolves) { EXPECT_TRUE(is_vertex_resolving(path_graph(3), LandmarkSet{0})); }

TEST(Metric, SingleEdgeEmptySet) { EXPECT_TRUE(is_edge_resolving(path_graph(2), LandmarkSet{})); }

TEST(Metric, TriangleEdgesCollide) {
  const ResolutionResult r = is_edge_resolving(complete_graph(3), LandmarkSet{0});
  EXPECT_FALSE(r);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->kind, ObjectKind::edge);
  EXPECT_EQ(r.witness->first_edge, Edge(0, 1));
  EXPECT_EQ(r.witness->second_edge, Edge(0, 2));
  EXPECT_EQ(r.witness->shared_vector, (DistanceVector{0}));
}

TEST(Metric, GridCertificates) {
  const Graph g = grid({3, 3});
  EXPECT_TRUE(is_edge_resolving(g, LandmarkSet{grid_index({3, 3}, {0, 0}), grid_index({3, 3}, {2, 0})}));
  EXPECT_TRUE(is_edge_resolving(grid({3, 4}), grid_edge_landmarks({3, 4})));
}

TEST(Metric, Preconditions) {
  EXPECT_THROW(is_vertex_resolving(Graph(2), LandmarkSet{0}), disconnected_graph);
  EXPECT_THROW(is_vertex_resolving(path_graph(3), LandmarkSet{5}), vertex_out_of_range);
}
