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

// Edge-differentially-private densest subgraph by noisy greedy peeling.
//
// Every vertex gets a noisy degree D(v) and a private prefix-sum counter
// PSum(v) of departed neighbors; D(v) - PSum(v) estimates its residual
// degree. Departures accumulate in an outstanding counter Cnt(v) and are
// pushed into PSum(v) only when a noisy threshold test fires (sparse-vector
// style), so each counter receives few updates. The loop repeatedly removes
// the vertex with the smallest estimate and remembers the residual set at
// the step where that minimum was largest.
//
// Two selection structures are provided: a binary heap over the exact
// estimates (O((m + n) log n)) and err-wide buckets scanned from the last
// popped bucket (O(m + n) expected).

#ifndef DENSEDP_DP_DENSEST_HPP_
#define DENSEDP_DP_DENSEST_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "densedp/budget.hpp"
#include "densedp/graph.hpp"
#include "densedp/noise.hpp"
#include "densedp/oracles.hpp"
#include "densedp/peel_structures.hpp"
#include "densedp/prefix_sum.hpp"

namespace densedp {

class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct RunOptions {
  NoiseMode noise = NoiseMode::kRandom;
  // Test hooks replacing the budget-derived T and err.
  std::optional<std::int64_t> threshold_override;
  std::optional<std::int64_t> bucket_width_override;
  // Check the counter bookkeeping identity and bucket placement after every
  // change. Always on in builds without NDEBUG.
  bool check_invariants = false;
};

struct RunStats {
  std::uint64_t steps = 0;
  std::uint64_t psum_updates = 0;
  std::uint64_t zero_increment_updates = 0;
  std::uint64_t heap_pushes = 0;
  std::uint64_t stale_pops = 0;
  std::uint64_t buckets_scanned = 0;
  std::uint64_t relocations = 0;
  std::uint64_t scan_repairs = 0;
  std::uint64_t geom_draws = 0;
  std::uint64_t crossing_draws = 0;
  std::uint64_t invariant_checks = 0;
  std::int64_t d_max = 0;
  std::int64_t threshold = 0;
  std::int64_t bucket_width = 0;
};

struct RunDetails {
  RunStats stats;
  PeelTrace trace;
};

// d* = min((|E(S*)| + Geom(e^eps')) / |S*|, |S*|).
template <Rng64 R>
double release_density(EdgeCount edge_count, std::uint64_t set_size,
                       double epsilon_prime, NoiseSource<R>& noise) {
  if (set_size == 0) throw std::domain_error("release for an empty set");
  const auto noisy = static_cast<double>(edge_count) +
                     static_cast<double>(noise.geom(GeomParam::for_epsilon(epsilon_prime)));
  const auto size = static_cast<double>(set_size);
  return std::min(noisy / size, size);
}

template <Rng64 R>
double release_density(EdgeCount edge_count, std::uint64_t set_size,
                       double epsilon_prime, R& rng) {
  NoiseSource<R> noise(rng);
  return release_density(edge_count, set_size, epsilon_prime, noise);
}

namespace detail {

#ifdef NDEBUG
inline constexpr bool kDebugChecks = false;
#else
inline constexpr bool kDebugChecks = true;
#endif

// State and step logic shared by both selection structures.
template <Rng64 R>
class PeelCore {
 public:
  PeelCore(const Graph& g, const PrivacyBudget& budget, R& rng, const RunOptions& opts)
      : g_(g),
        budget_(budget),
        n_(g.num_vertices()),
        noise_(rng, opts.noise),
        threshold_(opts.threshold_override.value_or(budget.threshold())),
        check_(opts.check_invariants || kDebugChecks),
        degree_param_(GeomParam::for_epsilon(budget.epsilon0(), 2.0)),
        threshold_param_(GeomParam::for_epsilon(budget.epsilon2())),
        schedule_(n_, n_) {
    if (n_ == 0) throw std::invalid_argument("densest subgraph of an empty graph");
    if (budget.n() != n_) {
      throw std::invalid_argument("budget was derived for " + std::to_string(budget.n()) +
                                  " vertices, graph has " + std::to_string(n_));
    }
    if (threshold_ < 0) throw std::invalid_argument("threshold must be >= 0");
    stats_.threshold = threshold_;
    noisy_degree_.resize(n_);
    cnt_.assign(n_, 0);
    persistent_.resize(n_);
    departed_.assign(n_, 0);
    removed_.assign(n_, false);
    psum_.reserve(n_);
    trace_.order.reserve(n_);
    for (VertexId v = 0; v < n_; ++v) {
      noisy_degree_[v] = static_cast<std::int64_t>(g.degree(v)) + noise_.geom(degree_param_);
    }
    for (VertexId v = 0; v < n_; ++v) psum_.emplace_back(n_, budget.epsilon1());
    for (VertexId v = 0; v < n_; ++v) persistent_[v] = noise_.geom(threshold_param_);
    // The first threshold check happens in step 1.
    for (VertexId v = 0; v < n_; ++v) reschedule(v, 0);
  }

  VertexId size() const { return n_; }
  bool removed(VertexId v) const { return removed_[v]; }
  bool checking() const { return check_; }
  RunStats& stats() { return stats_; }

  // D(v) - PSum(v).
  std::int64_t estimate(VertexId v) const { return noisy_degree_[v] - psum_[v].query(); }

  // Steps (b) through (e) for the vertex v chosen at step t (1-based).
  // `on_change(u)` runs after each flush that moved u's estimate.
  template <class OnChange>
  void remove_and_flush(VertexId v, std::uint64_t t, OnChange&& on_change) {
    ++stats_.steps;
    const std::int64_t score = estimate(v);
    if (d_max_ < score) {
      d_max_ = score;
      trace_.best_step = trace_.order.size();
    }
    removed_[v] = true;
    schedule_.unschedule(v);
    trace_.order.push_back(v);
    for (VertexId u : g_.neighbors(v)) {
      if (removed_[u]) continue;
      ++cnt_[u];
      ++departed_[u];
      // Cnt(u) changed during step t; its next check is step t's own.
      reschedule(u, t - 1);
    }
    for (VertexId u = schedule_.take(t); u != kNoVertex; u = schedule_.take(t)) {
      const std::int64_t before = estimate(u);
      psum_[u].update(cnt_[u], noise_);
      ++stats_.psum_updates;
      if (cnt_[u] == 0) ++stats_.zero_increment_updates;
      cnt_[u] = 0;
      persistent_[u] = noise_.geom(threshold_param_);
      reschedule(u, t);
      if (check_) check_bookkeeping(u);
      if (estimate(u) != before) on_change(u);
    }
    if (check_) {
      for (VertexId u : g_.neighbors(v)) {
        if (!removed_[u]) check_bookkeeping(u);
      }
    }
  }

  DensityReport finish(RunDetails* details) {
    const auto begin = trace_.order.begin() + static_cast<std::ptrdiff_t>(trace_.best_step);
    VertexSet best(std::vector<VertexId>(begin, trace_.order.end()));
    DensityReport report;
    report.true_density = exact_density(g_, best);
    report.noisy_density = release_density(report.true_density.edges, best.size(),
                                           budget_.epsilon_prime(), noise_);
    report.subset = std::move(best);
    if (details != nullptr) {
      stats_.d_max = d_max_;
      stats_.geom_draws = noise_.geom_draws();
      stats_.crossing_draws = noise_.crossing_draws();
      details->stats = stats_;
      details->trace = std::move(trace_);
    }
    return report;
  }

 private:
  // Draws the next crossing for u, whose counter last changed with `done`
  // steps fully finished, and files it in the schedule.
  void reschedule(VertexId u, std::uint64_t done) {
    const auto horizon = static_cast<std::int64_t>(n_ - done);
    const std::int64_t tau =
        noise_.crossing_time(cnt_[u], persistent_[u], threshold_, threshold_param_, horizon);
    if (tau == kNever) {
      schedule_.unschedule(u);
    } else {
      schedule_.schedule(u, static_cast<std::int64_t>(done) + tau);
    }
  }

  void check_bookkeeping(VertexId u) {
    ++stats_.invariant_checks;
    if (cnt_[u] < 0 || cnt_[u] + psum_[u].true_sum() != departed_[u]) {
      throw InvariantError("counter bookkeeping broken at vertex " + std::to_string(u));
    }
  }

  const Graph& g_;
  const PrivacyBudget& budget_;
  VertexId n_;
  NoiseSource<R> noise_;
  std::int64_t threshold_;
  bool check_;
  GeomParam degree_param_;
  GeomParam threshold_param_;
  ScheduleTable schedule_;
  std::vector<std::int64_t> noisy_degree_;
  std::vector<PrefixSumMechanism> psum_;
  std::vector<std::int64_t> cnt_;
  std::vector<std::int64_t> persistent_;
  std::vector<std::int64_t> departed_;
  std::vector<bool> removed_;
  std::int64_t d_max_ = 0;
  PeelTrace trace_;
  RunStats stats_;
};

}  // namespace detail

// Quasilinear variant: each step removes the residual vertex with the
// smallest D(v) - PSum(v), lowest id on ties, found with a lazy binary heap.
template <Rng64 R>
DensityReport dp_densest_quasilinear(const Graph& g, const PrivacyBudget& budget, R& rng,
                                     const RunOptions& opts = {},
                                     RunDetails* details = nullptr) {
  detail::PeelCore<R> core(g, budget, rng, opts);
  const VertexId n = core.size();
  // (estimate, id, version); stale entries are skipped on pop.
  using Entry = std::tuple<std::int64_t, VertexId, std::uint32_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  std::vector<std::uint32_t> version(n, 0);
  for (VertexId v = 0; v < n; ++v) heap.emplace(core.estimate(v), v, 0);
  core.stats().heap_pushes = n;

  for (std::uint64_t t = 1; t <= n; ++t) {
    VertexId v = kNoVertex;
    while (v == kNoVertex) {
      const auto [key, id, ver] = heap.top();
      heap.pop();
      if (core.removed(id) || ver != version[id]) {
        ++core.stats().stale_pops;
        continue;
      }
      v = id;
    }
    core.remove_and_flush(v, t, [&](VertexId u) {
      heap.emplace(core.estimate(u), u, ++version[u]);
      ++core.stats().heap_pushes;
    });
  }
  return core.finish(details);
}

// Linear variant: vertices live in err-wide buckets of their estimate. Each
// step scans upward from one below the previously popped bucket (lower if a
// flush dropped a vertex further left) and pops the head of the first
// non-empty bucket.
template <Rng64 R>
DensityReport dp_densest_linear(const Graph& g, const PrivacyBudget& budget, R& rng,
                                const RunOptions& opts = {},
                                RunDetails* details = nullptr) {
  detail::PeelCore<R> core(g, budget, rng, opts);
  const VertexId n = core.size();
  BucketQueue buckets(opts.bucket_width_override.value_or(budget.bucket_width()), n);
  core.stats().bucket_width = buckets.width();
  for (VertexId v = 0; v < n; ++v) buckets.place(v, core.estimate(v));

  const std::int64_t none = buckets.bucket_count() + 1;
  std::int64_t previous = 1;
  std::int64_t lowest_relocated = none;
  const auto check_placement = [&](VertexId u) {
    ++core.stats().invariant_checks;
    if (buckets.bucket_of(u) != buckets.bucket_for(core.estimate(u))) {
      throw InvariantError("vertex " + std::to_string(u) + " sits in the wrong bucket");
    }
  };

  for (std::uint64_t t = 1; t <= n; ++t) {
    std::int64_t b = std::max<std::int64_t>(previous - 1, 1);
    if (lowest_relocated < b) {
      b = lowest_relocated;
      ++core.stats().scan_repairs;
    }
    while (buckets.bucket_empty(b)) {
      ++core.stats().buckets_scanned;
      ++b;
      if (b > buckets.bucket_count()) throw InvariantError("bucket queue ran dry");
    }
    ++core.stats().buckets_scanned;
    const VertexId v = buckets.pop(b);
    if (core.checking() && buckets.bucket_for(core.estimate(v)) != b) {
      throw InvariantError("popped vertex " + std::to_string(v) + " from the wrong bucket");
    }
    previous = b;
    lowest_relocated = none;
    core.remove_and_flush(v, t, [&](VertexId u) {
      const std::int64_t from = buckets.bucket_of(u);
      const std::int64_t to = buckets.place(u, core.estimate(u));
      if (to != from) {
        ++core.stats().relocations;
        lowest_relocated = std::min(lowest_relocated, to);
      }
      if (core.checking()) check_placement(u);
    });
  }
  return core.finish(details);
}

}  // namespace densedp

#endif  // DENSEDP_DP_DENSEST_HPP_
