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

// Undirected simple graphs in CSR form, vertex subsets, and exact density
// bookkeeping shared by every densest-subgraph routine in the library.

#ifndef DENSEDP_GRAPH_HPP_
#define DENSEDP_GRAPH_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace densedp {

using VertexId = std::uint32_t;
using EdgeCount = std::uint64_t;

struct Edge {
  VertexId u;
  VertexId v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Counters reported while normalizing raw edges into a simple graph.
struct BuildStats {
  std::uint64_t self_loops = 0;
  std::uint64_t duplicates = 0;
  std::uint64_t dropped() const { return self_loops + duplicates; }
};

// Immutable undirected simple graph. Vertices are 0..n-1 and every adjacency
// row is sorted ascending. Safe to share across threads once built.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  // Builds a graph on `n` vertices. Self-loops and repeated edges (in either
  // orientation) are dropped and counted in `stats` when given.
  static Graph from_edges(VertexId n, std::span<const Edge> edges,
                          BuildStats* stats = nullptr) {
    BuildStats local;
    std::vector<Edge> canon;
    canon.reserve(edges.size());
    for (const Edge& e : edges) {
      if (e.u >= n || e.v >= n) {
        throw std::out_of_range("edge endpoint " +
                                std::to_string(std::max(e.u, e.v)) +
                                " >= vertex count " + std::to_string(n));
      }
      if (e.u == e.v) {
        ++local.self_loops;
        continue;
      }
      canon.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
    }
    std::sort(canon.begin(), canon.end(), [](const Edge& a, const Edge& b) {
      return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    const auto last = std::unique(canon.begin(), canon.end());
    local.duplicates = static_cast<std::uint64_t>(canon.end() - last);
    canon.erase(last, canon.end());
    if (stats != nullptr) *stats = local;
    return from_sorted_unique(n, canon);
  }

  // Fast path for edge lists already in canonical form: u < v, sorted by
  // (u, v), no repeats. Not validated beyond the endpoint range.
  static Graph from_sorted_unique(VertexId n, std::span<const Edge> edges) {
    Graph g;
    g.n_ = n;
    g.m_ = edges.size();
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const Edge& e : edges) {
      if (e.u >= n || e.v >= n) throw std::out_of_range("edge endpoint");
      ++g.offsets_[e.u + 1];
      ++g.offsets_[e.v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
    g.adjacency_.resize(2 * edges.size());
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    // Canonical order makes every row come out sorted: row w first receives
    // the smaller neighbors (as e.v == w, in increasing e.u) and then the
    // larger ones (as e.u == w, in increasing e.v).
    for (const Edge& e : edges) g.adjacency_[fill[e.v]++] = e.u;
    for (const Edge& e : edges) g.adjacency_[fill[e.u]++] = e.v;
    return g;
  }

  VertexId num_vertices() const { return n_; }
  EdgeCount num_edges() const { return m_; }
  bool empty() const { return n_ == 0; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::uint32_t degree(VertexId v) const {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }
  bool has_edge(VertexId u, VertexId v) const {
    const auto row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
  }

  // Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (VertexId u = 0; u < n_; ++u) {
      for (VertexId v : neighbors(u)) {
        if (u < v) out.push_back({u, v});
      }
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  VertexId n_ = 0;
  EdgeCount m_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> adjacency_;
};

// A set of vertex ids, kept sorted and duplicate free.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<VertexId> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  static VertexSet all(VertexId n) {
    std::vector<VertexId> ids(n);
    for (VertexId v = 0; v < n; ++v) ids[v] = v;
    VertexSet s;
    s.members_ = std::move(ids);
    return s;
  }

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(VertexId v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }
  std::span<const VertexId> members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<VertexId> members_;
};

// Exact density |E(S)| / |S| as an integer pair. Comparisons are exact.
struct Density {
  EdgeCount edges = 0;
  std::uint64_t vertices = 1;

  double value() const {
    return static_cast<double>(edges) / static_cast<double>(vertices);
  }
  friend bool operator==(const Density& a, const Density& b) {
    return static_cast<unsigned __int128>(a.edges) * b.vertices ==
           static_cast<unsigned __int128>(b.edges) * a.vertices;
  }
  friend bool operator<(const Density& a, const Density& b) {
    return static_cast<unsigned __int128>(a.edges) * b.vertices <
           static_cast<unsigned __int128>(b.edges) * a.vertices;
  }
  friend bool operator>(const Density& a, const Density& b) { return b < a; }
  friend bool operator<=(const Density& a, const Density& b) { return !(b < a); }
  friend bool operator>=(const Density& a, const Density& b) { return !(a < b); }
};

// Output of every densest-subgraph routine. For the non-private algorithms
// `noisy_density` equals `true_density.value()`.
struct DensityReport {
  VertexSet subset;
  Density true_density;
  double noisy_density = 0.0;
};

// |E(S)| in O(sum of deg(v) over v in S).
inline EdgeCount induced_edge_count(const Graph& g, const VertexSet& s) {
  const VertexId n = g.num_vertices();
  std::vector<bool> in_set(n, false);
  for (VertexId v : s) {
    if (v >= n) {
      throw std::domain_error("vertex " + std::to_string(v) +
                              " is not in a graph of " + std::to_string(n) +
                              " vertices");
    }
    in_set[v] = true;
  }
  EdgeCount twice = 0;
  for (VertexId v : s) {
    for (VertexId u : g.neighbors(v)) twice += in_set[u] ? 1 : 0;
  }
  return twice / 2;
}

inline Density exact_density(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw std::domain_error("density of an empty vertex set");
  return {induced_edge_count(g, s), s.size()};
}

inline double density(const Graph& g, const VertexSet& s) {
  return exact_density(g, s).value();
}

inline DensityReport make_exact_report(const Graph& g, VertexSet s) {
  DensityReport r;
  r.true_density = exact_density(g, s);
  r.noisy_density = r.true_density.value();
  r.subset = std::move(s);
  return r;
}

}  // namespace densedp

#endif  // DENSEDP_GRAPH_HPP_
