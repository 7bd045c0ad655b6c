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

// Synthetic graph families used by the experiments and tests.

#ifndef DENSEDP_GENERATORS_HPP_
#define DENSEDP_GENERATORS_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "densedp/graph.hpp"
#include "densedp/noise.hpp"

namespace densedp {

// Uniform integer in [0, bound) by rejection; identical on every platform,
// unlike std::uniform_int_distribution.
template <Rng64 R>
std::uint64_t uniform_below(std::uint64_t bound, R& rng) {
  if (bound == 0) throw std::invalid_argument("uniform_below(0)");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

// A k-clique on k vertices drawn uniformly from 0..n-1; the rest isolated.
inline Graph gen_planted_clique(VertexId n, VertexId k, std::uint64_t seed) {
  if (k > n) {
    throw std::invalid_argument("clique size " + std::to_string(k) +
                                " exceeds vertex count " + std::to_string(n));
  }
  std::mt19937_64 rng(seed);
  std::vector<VertexId> ids(n);
  for (VertexId v = 0; v < n; ++v) ids[v] = v;
  for (VertexId i = 0; i < k; ++i) {
    const auto j = i + static_cast<VertexId>(uniform_below(n - i, rng));
    std::swap(ids[i], ids[j]);
  }
  std::vector<VertexId> clique(ids.begin(), ids.begin() + k);
  std::sort(clique.begin(), clique.end());
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(k) * (k > 0 ? k - 1 : 0) / 2);
  for (VertexId a = 0; a < k; ++a) {
    for (VertexId b = a + 1; b < k; ++b) edges.push_back({clique[a], clique[b]});
  }
  return Graph::from_sorted_unique(n, edges);
}

// Two disjoint cliques: vertices 0..k1-1 and k1..k1+k2-1.
inline Graph gen_two_cliques(VertexId k1, VertexId k2) {
  if (k1 < 1 || k2 < 1) throw std::invalid_argument("clique sizes must be >= 1");
  std::vector<Edge> edges;
  for (VertexId a = 0; a < k1; ++a) {
    for (VertexId b = a + 1; b < k1; ++b) edges.push_back({a, b});
  }
  for (VertexId a = k1; a < k1 + k2; ++a) {
    for (VertexId b = a + 1; b < k1 + k2; ++b) edges.push_back({a, b});
  }
  return Graph::from_sorted_unique(k1 + k2, edges);
}

// Erdos-Renyi G(n, p), one coin per pair.
template <Rng64 R>
Graph gen_gnp(VertexId n, double p, R& rng) {
  std::vector<Edge> edges;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (uniform_open_closed(rng) <= p) edges.push_back({a, b});
    }
  }
  return Graph::from_sorted_unique(n, edges);
}

// Uniform graph with exactly m distinct edges on n vertices.
template <Rng64 R>
Graph gen_gnm(VertexId n, EdgeCount m, R& rng) {
  const EdgeCount pairs = static_cast<EdgeCount>(n) * (n > 0 ? n - 1 : 0) / 2;
  if (m > pairs) throw std::invalid_argument("more edges than vertex pairs");
  std::vector<Edge> edges;
  edges.reserve(m);
  const auto lex_less = [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  };
  while (edges.size() < m) {
    while (edges.size() < m) {
      auto a = static_cast<VertexId>(uniform_below(n, rng));
      auto b = static_cast<VertexId>(uniform_below(n, rng));
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      edges.push_back({a, b});
    }
    std::sort(edges.begin(), edges.end(), lex_less);
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }
  return Graph::from_sorted_unique(n, edges);
}

}  // namespace densedp

#endif  // DENSEDP_GENERATORS_HPP_
