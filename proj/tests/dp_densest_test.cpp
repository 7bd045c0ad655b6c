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

#include "densedp/dp_densest.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "densedp/generators.hpp"
#include "densedp/oracles.hpp"
#include "support/calibration.hpp"
#include "support/graph_oracles.hpp"

namespace densedp {
namespace {

using Rng = std::mt19937_64;

RunOptions noiseless(std::optional<std::int64_t> width = std::nullopt) {
  RunOptions o;
  o.noise = NoiseMode::kZero;
  o.threshold_override = 0;
  o.bucket_width_override = width;
  return o;
}

// Every removed vertex must have had the minimum residual degree.
void expect_min_degree_order(const Graph& g, const std::vector<VertexId>& order) {
  const VertexId n = g.num_vertices();
  ASSERT_EQ(order.size(), n);
  std::vector<std::uint32_t> deg(n);
  std::vector<bool> gone(n, false);
  for (VertexId v = 0; v < n; ++v) deg[v] = g.degree(v);
  for (VertexId v : order) {
    ASSERT_FALSE(gone[v]);
    for (VertexId u = 0; u < n; ++u) {
      if (!gone[u]) {
        ASSERT_LE(deg[v], deg[u]);
      }
    }
    gone[v] = true;
    for (VertexId u : g.neighbors(v)) {
      if (!gone[u]) --deg[u];
    }
  }
}

TEST(NoiselessPeelTest, QuasilinearFollowsCharikarOrder) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = testing::random_small_graph(seed, 1, 50, 0.05 + 0.003 * seed);
    Rng rng(seed);
    const auto budget = PrivacyBudget::make(1.0, 0.01, g.num_vertices());
    RunDetails details;
    const auto r = dp_densest_quasilinear(g, budget, rng, noiseless(), &details);
    PeelTrace charikar;
    charikar_peel(g, &charikar);
    ASSERT_EQ(details.trace.order, charikar.order) << seed;
    // The kept set is the residual set at the first largest removal degree.
    const auto naive = testing::naive_peel(g);
    EXPECT_EQ(details.trace.best_step, testing::max_min_degree_step(naive)) << seed;
    EXPECT_EQ(r.subset, testing::suffix_set(naive.order, details.trace.best_step));
    EXPECT_EQ(r.true_density, exact_density(g, r.subset));
    EXPECT_DOUBLE_EQ(r.noisy_density,
                     std::min(r.true_density.value(), static_cast<double>(r.subset.size())));
  }
}

TEST(NoiselessPeelTest, LinearWithUnitBucketsPeelsByMinimumDegree) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = testing::random_small_graph(seed + 300, 1, 50, 0.05 + 0.003 * seed);
    Rng rng(seed);
    const auto budget = PrivacyBudget::make(1.0, 0.01, g.num_vertices());
    RunDetails details;
    const auto r = dp_densest_linear(g, budget, rng, noiseless(1), &details);
    expect_min_degree_order(g, details.trace.order);
    EXPECT_EQ(details.stats.bucket_width, 1);
    const double charikar = charikar_peel(g).true_density.value();
    EXPECT_LE(r.true_density.value(), charikar + 1e-12);
    EXPECT_NEAR(r.true_density.value(), charikar, 1.0) << seed;
    EXPECT_GE(2 * r.true_density.value(), charikar - 1e-12) << seed;
  }
}

TEST(NoiselessPeelTest, CliquePlusIsolatedVerticesFindsTheClique) {
  std::vector<Edge> edges;
  for (VertexId a = 0; a < 20; ++a) {
    for (VertexId b = a + 1; b < 20; ++b) edges.push_back({a + 50, b + 50});
  }
  const Graph g = Graph::from_edges(100, edges);
  Rng rng(1);
  const auto budget = PrivacyBudget::make(2.0, 0x1p-10, 100);
  for (bool linear : {false, true}) {
    const auto r = linear ? dp_densest_linear(g, budget, rng, noiseless(1))
                          : dp_densest_quasilinear(g, budget, rng, noiseless());
    EXPECT_EQ(r.subset.size(), 20u);
    EXPECT_DOUBLE_EQ(r.true_density.value(), 9.5);
  }
}

TEST(DpDensestTest, SingleEdgeWithLargeEpsilon) {
  const Graph g = Graph::from_edges(2, std::vector<Edge>{{0, 1}});
  const auto budget = PrivacyBudget::make(400.0, 0.01, 2);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    for (bool linear : {false, true}) {
      const auto r = linear ? dp_densest_linear(g, budget, rng)
                            : dp_densest_quasilinear(g, budget, rng);
      EXPECT_TRUE(r.subset.size() == 1 || r.subset.size() == 2);
      EXPECT_NEAR(r.noisy_density, 0.5, 1.0);
      EXPECT_EQ(r.true_density, exact_density(g, r.subset));
    }
  }
}

TEST(DpDensestTest, CliqueAmongIsolatedVerticesMeetsUtilityBound) {
  ASSERT_GT(testing::kUtilityKappa, 0.0);
  std::vector<Edge> edges;
  for (VertexId a = 0; a < 20; ++a) {
    for (VertexId b = a + 1; b < 20; ++b) edges.push_back({a, b});
  }
  const Graph g = Graph::from_edges(100, edges);
  const double sigma = 0x1p-10;
  const auto budget = PrivacyBudget::make(2.0, sigma, 100);
  const double floor =
      9.5 / 2 - testing::kUtilityKappa * testing::utility_slack_unit(2.0, 100, sigma);
  for (bool linear : {false, true}) {
    int good = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      Rng rng(seed);
      const auto r = linear ? dp_densest_linear(g, budget, rng)
                            : dp_densest_quasilinear(g, budget, rng);
      good += r.true_density.value() >= floor;
    }
    EXPECT_GE(good, 95) << linear;
  }
}

TEST(ReleaseDensityTest, Examples) {
  Rng rng(3);
  NoiseSource<Rng> zero(rng, NoiseMode::kZero);
  EXPECT_DOUBLE_EQ(release_density(10, 5, 1.0, zero), 2.0);
  for (double eps : {0.01, 1.0, 100.0}) {
    for (int i = 0; i < 200; ++i) EXPECT_LE(release_density(0, 1, eps, rng), 1.0);
  }
  int close = 0;
  for (int i = 0; i < 10000; ++i) close += std::abs(release_density(45, 10, 1.0, rng) - 4.5) <= 0.7;
  EXPECT_GE(close, 9900);
  EXPECT_THROW(release_density(0, 0, 1.0, rng), std::domain_error);
}

TEST(DpDensestTest, RejectsEmptyGraphAndMismatchedBudget) {
  Rng rng(4);
  const Graph empty;
  const auto one = PrivacyBudget::make(1.0, 0.1, 1);
  EXPECT_THROW(dp_densest_linear(empty, one, rng), std::invalid_argument);
  EXPECT_THROW(dp_densest_quasilinear(empty, one, rng), std::invalid_argument);
  const Graph g = gen_two_cliques(3, 3);
  EXPECT_THROW(dp_densest_linear(g, one, rng), std::invalid_argument);
}

TEST(DpDensestTest, SameSeedSameResult) {
  Rng gen(5);
  const Graph g = gen_gnm(400, 3000, gen);
  const auto budget = PrivacyBudget::make(1.0, 0x1p-10, 400);
  for (bool linear : {false, true}) {
    Rng a(99), b(99);
    RunDetails da, db;
    const auto ra = linear ? dp_densest_linear(g, budget, a, {}, &da)
                           : dp_densest_quasilinear(g, budget, a, {}, &da);
    const auto rb = linear ? dp_densest_linear(g, budget, b, {}, &db)
                           : dp_densest_quasilinear(g, budget, b, {}, &db);
    EXPECT_EQ(ra.subset, rb.subset);
    EXPECT_EQ(ra.noisy_density, rb.noisy_density);
    EXPECT_EQ(da.trace.order, db.trace.order);
    EXPECT_EQ(da.stats.psum_updates, db.stats.psum_updates);
  }
}

// Every released quantity is noised: n degree draws, n initial threshold
// draws, one node draw plus one fresh threshold draw per flush, and one for
// the final release. Crossing times are redrawn on every counter change.
TEST(DpDensestTest, StructuralNoiseAudit) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng gen(seed);
    const Graph g = gen_gnm(300, 2500, gen);
    const auto budget = PrivacyBudget::make(1.0 + seed % 4, 0x1p-10, 300);
    EXPECT_NEAR(budget.accounted_epsilon(), budget.epsilon(), 1e-12);
    for (bool linear : {false, true}) {
      RunOptions opts;
      opts.threshold_override = 1 + seed % 3;
      RunDetails d;
      Rng rng(seed + 1000);
      linear ? dp_densest_linear(g, budget, rng, opts, &d)
             : dp_densest_quasilinear(g, budget, rng, opts, &d);
      const std::uint64_t n = g.num_vertices();
      EXPECT_GT(d.stats.psum_updates, 0u);
      EXPECT_EQ(d.stats.geom_draws, 2 * n + 2 * d.stats.psum_updates + 1);
      EXPECT_EQ(d.stats.crossing_draws, n + g.num_edges() + d.stats.psum_updates);
      EXPECT_EQ(d.stats.steps, n);
      EXPECT_GT(d.stats.invariant_checks, 0u);
    }
  }
}

TEST(DpDensestTest, PrefixSumUpdatesStayWithinFourM) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng gen(seed + 40);
    const Graph g = gen_gnm(500 + 50 * static_cast<VertexId>(seed), 4000, gen);
    const auto budget = PrivacyBudget::make(0.5 + 0.5 * (seed % 8), 0x1p-10, g.num_vertices());
    for (bool linear : {false, true}) {
      RunDetails d;
      Rng rng(seed);
      linear ? dp_densest_linear(g, budget, rng, {}, &d)
             : dp_densest_quasilinear(g, budget, rng, {}, &d);
      EXPECT_LE(d.stats.psum_updates, 4 * g.num_edges());
    }
  }
}

TEST(DpDensestTest, NoisyRunsKeepBookkeepingAndBucketsConsistent) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng gen(seed + 70);
    const Graph g = gen_planted_clique(200, 25, seed);
    const auto budget = PrivacyBudget::make(0.3, 0.1, 200);
    RunOptions opts;
    opts.check_invariants = true;
    opts.threshold_override = seed % 3;
    opts.bucket_width_override = 1 + seed % 5;
    RunDetails d;
    Rng rng(seed);
    EXPECT_NO_THROW(dp_densest_linear(g, budget, rng, opts, &d));
    EXPECT_GT(d.stats.relocations, 0u);
    EXPECT_NO_THROW(dp_densest_quasilinear(g, budget, rng, opts, &d));
    EXPECT_GT(d.stats.invariant_checks, 0u);
  }
}

TEST(DpDensestTest, LargeEpsilonFindsPlantedClique) {
  const Graph g = gen_planted_clique(2000, 80, 9);
  const auto budget = PrivacyBudget::make(64.0, 0x1p-10, 2000);
  for (bool linear : {false, true}) {
    Rng rng(10);
    const auto r = linear ? dp_densest_linear(g, budget, rng)
                          : dp_densest_quasilinear(g, budget, rng);
    EXPECT_GE(r.true_density.value(), 0.9 * 39.5) << linear;
    EXPECT_NEAR(r.noisy_density, r.true_density.value(), 1.0);
  }
}

}  // namespace
}  // namespace densedp
