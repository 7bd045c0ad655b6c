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

// Non-private reference algorithms: exhaustive search, Charikar's greedy
// peel, and the randomized-response baseline.

#ifndef DENSEDP_ORACLES_HPP_
#define DENSEDP_ORACLES_HPP_

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "densedp/graph.hpp"
#include "densedp/noise.hpp"

namespace densedp {

class TooLargeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr VertexId kBruteForceMaxVertices = 22;

// Maximum-density subset by scanning all 2^n - 1 nonempty subsets. Ties go
// to the lexicographically smallest sorted member list.
inline DensityReport exact_densest_bruteforce(const Graph& g) {
  const VertexId n = g.num_vertices();
  if (n == 0) throw std::invalid_argument("densest subgraph of an empty graph");
  if (n > kBruteForceMaxVertices) {
    throw TooLargeError("brute-force densest subgraph is limited to " +
                        std::to_string(kBruteForceMaxVertices) +
                        " vertices, graph has " + std::to_string(n));
  }
  std::vector<std::uint32_t> adj(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId u : g.neighbors(v)) adj[v] |= 1u << u;
  }
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  // edges[mask] = |E(mask)|, filled by peeling the lowest member.
  std::vector<std::uint16_t> edges(static_cast<std::size_t>(full) + 1, 0);

  const auto members = [](std::uint32_t mask) {
    std::vector<VertexId> out;
    for (; mask != 0; mask &= mask - 1) {
      out.push_back(static_cast<VertexId>(std::countr_zero(mask)));
    }
    return out;
  };

  std::uint32_t best = 1;
  Density best_density{0, 1};
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const int low = std::countr_zero(mask);
    const std::uint32_t rest = mask & (mask - 1);
    edges[mask] = static_cast<std::uint16_t>(
        edges[rest] + std::popcount(adj[static_cast<std::size_t>(low)] & rest));
    const Density d{edges[mask], static_cast<std::uint64_t>(std::popcount(mask))};
    if (d > best_density ||
        (d == best_density && members(mask) < members(best))) {
      best = mask;
      best_density = d;
    }
  }
  DensityReport r;
  r.subset = VertexSet(members(best));
  r.true_density = best_density;
  r.noisy_density = best_density.value();
  return r;
}

// Removal order of a greedy peel plus the index of the best prefix: the
// reported set is every vertex not in order[0, best_step).
struct PeelTrace {
  std::vector<VertexId> order;
  std::size_t best_step = 0;
};

// Charikar's peel: repeatedly remove a minimum residual-degree vertex (lowest
// id among ties) and keep the densest residual set seen, the earliest one on
// ties. Degree buckets hold per-bucket min-heaps of ids with lazy deletion,
// so the exact id tie-break costs O((n + m) log n).
inline DensityReport charikar_peel(const Graph& g, PeelTrace* trace = nullptr) {
  const VertexId n = g.num_vertices();
  if (n == 0) throw std::invalid_argument("densest subgraph of an empty graph");
  using MinHeap =
      std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>>;
  std::vector<std::uint32_t> deg(n);
  std::uint32_t max_deg = 0;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }
  std::vector<MinHeap> bins(static_cast<std::size_t>(max_deg) + 1);
  for (VertexId v = 0; v < n; ++v) bins[deg[v]].push(v);
  std::vector<bool> removed(n, false);

  PeelTrace local;
  local.order.reserve(n);
  EdgeCount residual_edges = g.num_edges();
  Density best{residual_edges, n};
  std::uint32_t cur = 0;
  for (VertexId step = 0; step < n; ++step) {
    VertexId v = 0;
    for (;;) {
      while (bins[cur].empty()) ++cur;
      v = bins[cur].top();
      bins[cur].pop();
      if (!removed[v] && deg[v] == cur) break;
    }
    const Density here{residual_edges, static_cast<std::uint64_t>(n - step)};
    if (here > best) {
      best = here;
      local.best_step = step;
    }
    removed[v] = true;
    local.order.push_back(v);
    residual_edges -= deg[v];
    for (VertexId u : g.neighbors(v)) {
      if (removed[u]) continue;
      bins[--deg[u]].push(u);
      cur = std::min(cur, deg[u]);
    }
  }

  std::vector<VertexId> kept(local.order.begin() +
                                 static_cast<std::ptrdiff_t>(local.best_step),
                             local.order.end());
  DensityReport r;
  r.subset = VertexSet(std::move(kept));
  r.true_density = best;
  r.noisy_density = best.value();
  if (trace != nullptr) *trace = std::move(local);
  return r;
}

struct RandomizedResponseOptions {
  // Replaces 1 / (1 + e^epsilon). Test hook.
  std::optional<double> flip_probability;
  // Zeroes the release noise. Test hook.
  NoiseMode release_noise = NoiseMode::kRandom;
};

inline double randomized_response_flip_probability(double epsilon) {
  return 1.0 / (1.0 + std::exp(epsilon));
}

// Flips every vertex pair independently with probability p and returns the
// resulting graph. Flipped pairs are found by geometric skipping over the
// n(n-1)/2 pair indices and merged with the original edges in one pass.
template <Rng64 R>
Graph randomized_response_graph(const Graph& g, double p, R& rng) {
  const VertexId n = g.num_vertices();
  const std::vector<Edge> original = g.edges();
  std::vector<Edge> out;
  out.reserve(original.size() +
              static_cast<std::size_t>(p * 0.5 * n * (n > 0 ? n - 1 : 0) * 1.01));
  auto it = original.begin();
  const auto lex_less = [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  };
  const auto emit_flip = [&](Edge f) {
    while (it != original.end() && lex_less(*it, f)) out.push_back(*it++);
    if (it != original.end() && *it == f) {
      ++it;  // edge present and flipped away
    } else {
      out.push_back(f);
    }
  };
  if (p > 0.0 && n > 1) {
    const double log_miss = std::log1p(-std::min(p, 1.0 - 1e-16));
    VertexId i = 0;
    std::uint64_t j = 1;  // next candidate pair is (i, j)
    for (;;) {
      double skip = p >= 1.0 ? 0.0
                             : std::floor(std::log(uniform_open_closed(rng)) / log_miss);
      while (i + 1 < n && skip >= static_cast<double>(n - j)) {
        skip -= static_cast<double>(n - j);
        ++i;
        j = static_cast<std::uint64_t>(i) + 1;
      }
      if (i + 1 >= n) break;
      j += static_cast<std::uint64_t>(skip);
      emit_flip({i, static_cast<VertexId>(j)});
      if (++j == n) {
        ++i;
        j = static_cast<std::uint64_t>(i) + 1;
        if (i + 1 >= n) break;
      }
    }
  }
  while (it != original.end()) out.push_back(*it++);
  return Graph::from_sorted_unique(n, out);
}

// Randomized-response baseline: perturb every pair, peel the perturbed graph
// (Charikar's 2-approximation stands in for an exact solver), then report the
// chosen set's true density and (|E(S*)| + Geom(e^epsilon)) / |S*|.
template <Rng64 R>
DensityReport randomized_response_densest(const Graph& g, double epsilon, R& rng,
                                          const RandomizedResponseOptions& opts = {}) {
  if (!(epsilon > 0.0)) throw std::domain_error("epsilon must be positive");
  const double p = opts.flip_probability.value_or(
      randomized_response_flip_probability(epsilon));
  DensityReport r;
  {
    const Graph perturbed = randomized_response_graph(g, p, rng);
    r.subset = charikar_peel(perturbed).subset;
  }
  r.true_density = exact_density(g, r.subset);
  NoiseSource<R> noise(rng, opts.release_noise);
  const auto noisy_edges = static_cast<double>(r.true_density.edges) +
                           static_cast<double>(noise.geom(GeomParam::for_epsilon(epsilon)));
  r.noisy_density = noisy_edges / static_cast<double>(r.subset.size());
  return r;
}

}  // namespace densedp

#endif  // DENSEDP_ORACLES_HPP_
