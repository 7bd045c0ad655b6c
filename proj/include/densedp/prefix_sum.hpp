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

// Continual-release prefix sums under epsilon-DP (the binary-tree mechanism).

#ifndef DENSEDP_PREFIX_SUM_HPP_
#define DENSEDP_PREFIX_SUM_HPP_

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "densedp/noise.hpp"

namespace densedp {

class CapacityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Binary-tree counter over at most `capacity` items. Item t belongs to one
// dyadic block per level; the block at level ctz(t) closes at time t and
// receives its own Geom(exp(epsilon / L)) noise, where L is the level count.
// A +-1 change to one item moves at most L block sums by 1, so the whole
// output stream is epsilon-DP. The released prefix sum at time t adds the
// noisy blocks named by the set bits of t.
//
// Block noise is drawn when a block closes, so construction is O(1) and the
// state grows to O(log t) only as items arrive. Each update closes exactly
// one block and touches ctz(t) + 1 levels, which is O(1) amortized.
class PrefixSumMechanism {
 public:
  PrefixSumMechanism(std::uint64_t capacity, double epsilon)
      : capacity_(capacity),
        levels_(level_count_for(capacity)),
        node_param_(GeomParam::for_epsilon(epsilon, static_cast<double>(levels_))) {}

  // ceil(log2 capacity) + 1.
  static int level_count_for(std::uint64_t capacity) {
    if (capacity < 1) throw std::domain_error("prefix-sum capacity must be >= 1");
    return std::bit_width(capacity - 1) + 1;
  }

  std::uint64_t capacity() const { return capacity_; }
  int level_count() const { return levels_; }
  std::uint64_t items_seen() const { return items_; }
  std::uint64_t blocks_closed() const { return blocks_closed_; }
  const GeomParam& node_param() const { return node_param_; }

  // Current noisy prefix sum. 0 before the first update.
  std::int64_t query() const { return output_; }

  // Exact running sum. Test and audit use only; never released.
  std::int64_t true_sum() const { return true_sum_; }

  template <Rng64 R>
  std::int64_t update(std::int64_t increment, NoiseSource<R>& noise) {
    if (items_ >= capacity_) {
      throw CapacityError("prefix-sum mechanism is full (" +
                          std::to_string(capacity_) + " items)");
    }
    const std::uint64_t t = ++items_;
    const auto level = static_cast<std::size_t>(std::countr_zero(t));
    if (exact_.size() <= level) {
      exact_.resize(level + 1, 0);
      noisy_.resize(level + 1, 0);
    }
    std::int64_t block = increment;
    for (std::size_t j = 0; j < level; ++j) {
      block += exact_[j];
      output_ -= noisy_[j];
      exact_[j] = 0;
      noisy_[j] = 0;
    }
    exact_[level] = block;
    noisy_[level] = block + noise.geom(node_param_);
    ++blocks_closed_;
    output_ += noisy_[level];
    true_sum_ += increment;
    return output_;
  }

 private:
  std::uint64_t capacity_;
  int levels_;
  GeomParam node_param_;
  std::uint64_t items_ = 0;
  std::uint64_t blocks_closed_ = 0;
  std::int64_t output_ = 0;
  std::int64_t true_sum_ = 0;
  // Per level: true and noisy sums of the most recently closed block that is
  // still part of the current dyadic decomposition (zero when none is).
  std::vector<std::int64_t> exact_;
  std::vector<std::int64_t> noisy_;
};

}  // namespace densedp

#endif  // DENSEDP_PREFIX_SUM_HPP_
