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

// Plants a 40-clique in a sparse random graph and compares the private
// peels against the exact greedy baseline.

#include <cstdio>
#include <random>
#include <vector>

#include "densedp/densedp.hpp"

int main() {
  std::mt19937_64 rng(2026);
  densedp::Graph noise_graph = densedp::gen_gnm(2000, 6000, rng);
  std::vector<densedp::Edge> edges = noise_graph.edges();
  for (densedp::VertexId a = 0; a < 40; ++a) {
    for (densedp::VertexId b = a + 1; b < 40; ++b) edges.push_back({a * 50, b * 50});
  }
  const auto g = densedp::Graph::from_edges(2000, edges);

  const auto baseline = densedp::charikar_peel(g);
  std::printf("greedy: |S| = %zu, density = %.4f\n", baseline.subset.size(),
              baseline.true_density.value());

  for (double eps : {0.5, 2.0, 8.0}) {
    const auto budget = densedp::PrivacyBudget::make(eps, 1e-6, g.num_vertices());
    const auto linear = densedp::dp_densest_linear(g, budget, rng);
    const auto quasi = densedp::dp_densest_quasilinear(g, budget, rng);
    std::printf("eps %.1f (T = %lld, err = %lld)\n", eps,
                static_cast<long long>(budget.threshold()),
                static_cast<long long>(budget.bucket_width()));
    std::printf("  linear:      |S| = %zu, density = %.4f, released = %.4f\n",
                linear.subset.size(), linear.true_density.value(), linear.noisy_density);
    std::printf("  quasilinear: |S| = %zu, density = %.4f, released = %.4f\n",
                quasi.subset.size(), quasi.true_density.value(), quasi.noisy_density);
  }
  return 0;
}
