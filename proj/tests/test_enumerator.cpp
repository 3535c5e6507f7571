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

#include <algorithm>
#include <random>
#include <set>

#include "metricdim/enumerator.hpp"
#include "oracles.hpp"

using namespace metricdim;

TEST(Canonical, IsomorphismInvariance) {
  const Graph p3 = path_graph(3);
  const std::vector<int> perm{1, 0, 2};
  EXPECT_EQ(canonical_form(p3), canonical_form(p3.relabeled(perm)));
  EXPECT_NE(canonical_form(p3), canonical_form(complete_graph(3)));
}

TEST(Canonical, CycleUnderAllLabelings) {
  const Graph c4 = cycle_graph(4);
  std::vector<int> perm{0, 1, 2, 3};
  std::set<std::uint64_t> forms;
  do {
    forms.insert(canonical_form(c4.relabeled(perm)).bits);
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(forms.size(), 1u);
}

TEST(Canonical, RandomRelabelings) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Graph g = oracle::random_connected(rng, n, 0.35);
    const CanonicalForm f = canonical_form(g);
    const Graph h = g.relabeled(oracle::random_permutation(rng, n));
    EXPECT_EQ(canonical_form(h), f);
    const Graph c = canonical_graph(g);
    EXPECT_TRUE(is_canonical(c));
    EXPECT_EQ(c.size(), g.size());
    EXPECT_EQ(graph_from_canonical(f), c);
  }
}

TEST(Canonical, MinimumOverAllPermutations) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Graph g = oracle::random_connected(rng, n, 0.4);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::uint64_t best = ~std::uint64_t{0};
    do {
      best = std::min(best, detail::adjacency_code(g.relabeled(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_EQ(canonical_form(g).bits, best);
  }
}

TEST(Canonical, Limit) { EXPECT_THROW(canonical_form(path_graph(11)), limit_exceeded); }

TEST(Enumerate, SmallCounts) {
  EXPECT_EQ(enumerate_connected(3).size(), 2u);
  EXPECT_EQ(enumerate_connected(4).size(), 6u);
  EXPECT_EQ(enumerate_connected(7).size(), 853u);
}

TEST(Enumerate, CountsMatchBurnside) {
  const auto expected = oracle::count_connected(8);
  for (int n = 1; n <= 8; ++n)
    EXPECT_EQ(boost::multiprecision::cpp_int(enumerate_connected(n).size()), expected[n]) << n;
  // all graphs, connected or not
  const auto all = enumerate_all_codes(8);
  for (int n = 0; n <= 8; ++n)
    EXPECT_EQ(boost::multiprecision::cpp_int(all[n].size()), oracle::count_graphs(n)) << n;
}

TEST(Enumerate, DistinctCanonicalConnectedOrdered) {
  const auto graphs = enumerate_connected(6);
  std::set<std::uint64_t> seen;
  std::uint64_t prev = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    EXPECT_TRUE(g.connected());
    EXPECT_TRUE(is_canonical(g));
    const std::uint64_t code = canonical_form(g).bits;
    EXPECT_TRUE(seen.insert(code).second);
    if (i) {
      EXPECT_LT(prev, code);
    }
    prev = code;
  }
}

TEST(Enumerate, RangeMatchesSingleOrders) {
  const auto levels = enumerate_connected_range(3, 6);
  ASSERT_EQ(levels.size(), 4u);
  for (int n = 3; n <= 6; ++n) EXPECT_EQ(levels[n - 3], enumerate_connected(n));
}

TEST(Enumerate, Limits) {
  EXPECT_THROW(enumerate_connected(9), limit_exceeded);
  EXPECT_THROW(enumerate_connected(10, {true}), limit_exceeded);
  EXPECT_THROW(enumerate_connected(0), domain_error);
}
