// Copyright 2026 The densedp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "densedp/graph.hpp"

#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "densedp/generators.hpp"
#include "support/graph_oracles.hpp"

namespace densedp {
namespace {

Graph triangle() { return Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}}); }

Graph clique(VertexId k) { return gen_planted_clique(k, k, 0); }

Graph star(VertexId leaves) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph::from_edges(leaves + 1, edges);
}

TEST(GraphTest, BuildsSortedSymmetricRows) {
  const Graph g = Graph::from_edges(4, std::vector<Edge>{{3, 0}, {1, 0}, {2, 3}, {0, 2}});
  EXPECT_EQ(g.num_vertices(), 4u);
  EXPECT_EQ(g.num_edges(), 4u);
  const auto row = g.neighbors(0);
  EXPECT_EQ(std::vector<VertexId>(row.begin(), row.end()), (std::vector<VertexId>{1, 2, 3}));
  EXPECT_TRUE(g.has_edge(3, 2));
  EXPECT_FALSE(g.has_edge(1, 2));
}

TEST(GraphTest, DropsSelfLoopsAndDuplicates) {
  BuildStats stats;
  const Graph g =
      Graph::from_edges(3, std::vector<Edge>{{0, 0}, {0, 1}, {1, 0}, {0, 1}, {1, 2}}, &stats);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(stats.self_loops, 1u);
  EXPECT_EQ(stats.duplicates, 2u);
}

TEST(GraphTest, RejectsOutOfRangeEndpoint) {
  EXPECT_THROW(Graph::from_edges(2, std::vector<Edge>{{0, 2}}), std::out_of_range);
}

TEST(GraphTest, StructuralInvariantsOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = testing::random_small_graph(seed, 1, 60, 0.2);
    EdgeCount degree_sum = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      const auto row = g.neighbors(v);
      EXPECT_EQ(row.size(), g.degree(v));
      degree_sum += g.degree(v);
      for (std::size_t i = 0; i < row.size(); ++i) {
        EXPECT_NE(row[i], v);
        if (i > 0) {
          EXPECT_LT(row[i - 1], row[i]);
        }
        EXPECT_TRUE(g.has_edge(row[i], v));
      }
    }
    EXPECT_EQ(degree_sum, 2 * g.num_edges());
  }
}

TEST(InducedEdgeCountTest, SmallCases) {
  EXPECT_EQ(induced_edge_count(triangle(), VertexSet({0, 1, 2})), 3u);
  EXPECT_EQ(induced_edge_count(triangle(), VertexSet({0, 1})), 1u);
  const Graph k5 = clique(5);
  EXPECT_EQ(induced_edge_count(k5, VertexSet({0, 1, 2, 3})), 6u);
  EXPECT_EQ(induced_edge_count(k5, VertexSet({1, 2, 3, 4})), 6u);
}

TEST(InducedEdgeCountTest, MemberOutOfRangeIsDomainError) {
  EXPECT_THROW(induced_edge_count(triangle(), VertexSet({0, 3})), std::domain_error);
}

TEST(DensityTest, SmallCases) {
  EXPECT_DOUBLE_EQ(density(clique(5), VertexSet::all(5)), 2.0);
  EXPECT_DOUBLE_EQ(density(triangle(), VertexSet::all(3)), 1.0);
  EXPECT_DOUBLE_EQ(density(star(4), VertexSet::all(5)), 0.8);
}

TEST(DensityTest, EmptySetIsDomainError) {
  EXPECT_THROW(density(triangle(), VertexSet()), std::domain_error);
}

TEST(DensityTest, ExactComparisonIsCrossMultiplied) {
  EXPECT_EQ((Density{2, 4}), (Density{1, 2}));
  EXPECT_LT((Density{1, 3}), (Density{1, 2}));
  EXPECT_GT((Density{3, 2}), (Density{4, 3}));
}

TEST(DensityTest, WholeGraphDensityIsEdgesPerVertex) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = testing::random_small_graph(seed, 1, 40, 0.3);
    const Density d = exact_density(g, VertexSet::all(g.num_vertices()));
    EXPECT_EQ(d.edges, g.num_edges());
    EXPECT_EQ(d.vertices, g.num_vertices());
  }
}

// |E(S)| <= |S|(|S|-1)/2, with equality exactly for cliques.
TEST(DensityTest, CliqueBoundHoldsOnRandomSubsets) {
  std::mt19937_64 rng(7);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = testing::random_small_graph(seed, 2, 12, seed % 2 ? 0.9 : 0.4);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<VertexId> members;
      for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (rng() & 1) members.push_back(v);
      }
      if (members.empty()) continue;
      const VertexSet s(members);
      const Density d = exact_density(g, s);
      const std::uint64_t k = s.size();
      EXPECT_LE(2 * d.edges, k * (k - 1));
      bool is_clique = true;
      for (VertexId a : s) {
        for (VertexId b : s) {
          if (a < b && !g.has_edge(a, b)) is_clique = false;
        }
      }
      EXPECT_EQ(2 * d.edges == k * (k - 1), is_clique);
    }
  }
}

TEST(VertexSetTest, SortsAndDeduplicates) {
  const VertexSet s({4, 1, 4, 2});
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(3));
  EXPECT_EQ(std::vector<VertexId>(s.begin(), s.end()), (std::vector<VertexId>{1, 2, 4}));
}

}  // namespace
}  // namespace densedp
