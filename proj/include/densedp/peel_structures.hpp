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

// Intrusive linked-list tables used by the private peeling loops: the
// per-step flush schedule and the discretized residual-degree buckets.

#ifndef DENSEDP_PEEL_STRUCTURES_HPP_
#define DENSEDP_PEEL_STRUCTURES_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "densedp/graph.hpp"

namespace densedp {

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

namespace detail {

// A family of doubly-linked lists over vertex ids, each vertex in at most one
// list. List 0 means "not listed". All operations are O(1).
class ListFamily {
 public:
  ListFamily(std::size_t lists, VertexId n)
      : head_(lists + 1, kNoVertex), next_(n, kNoVertex), prev_(n, kNoVertex),
        owner_(n, 0) {}

  std::size_t list_of(VertexId v) const { return owner_[v]; }
  bool list_empty(std::size_t list) const { return head_[list] == kNoVertex; }
  VertexId front(std::size_t list) const { return head_[list]; }
  VertexId next(VertexId v) const { return next_[v]; }
  std::size_t list_count() const { return head_.size() - 1; }

  void push_front(std::size_t list, VertexId v) {
    unlink(v);
    next_[v] = head_[list];
    prev_[v] = kNoVertex;
    if (head_[list] != kNoVertex) prev_[head_[list]] = v;
    head_[list] = v;
    owner_[v] = list;
  }

  void unlink(VertexId v) {
    const std::size_t list = owner_[v];
    if (list == 0) return;
    if (prev_[v] != kNoVertex) {
      next_[prev_[v]] = next_[v];
    } else {
      head_[list] = next_[v];
    }
    if (next_[v] != kNoVertex) prev_[next_[v]] = prev_[v];
    next_[v] = prev_[v] = kNoVertex;
    owner_[v] = 0;
  }

 private:
  std::vector<VertexId> head_;
  std::vector<VertexId> next_;
  std::vector<VertexId> prev_;
  std::vector<std::size_t> owner_;
};

}  // namespace detail

// L[1..steps]: for each future step, the vertices whose next threshold
// crossing falls on it. Each vertex sits in at most one slot.
class ScheduleTable {
 public:
  ScheduleTable(std::size_t steps, VertexId n) : lists_(steps, n) {}

  std::size_t steps() const { return lists_.list_count(); }
  // 0 when unscheduled.
  std::size_t slot_of(VertexId v) const { return lists_.list_of(v); }

  // Moves v to `slot`, or unschedules it when the slot is past the end.
  void schedule(VertexId v, std::int64_t slot) {
    if (slot < 1 || static_cast<std::uint64_t>(slot) > steps()) {
      lists_.unlink(v);
      return;
    }
    lists_.push_front(static_cast<std::size_t>(slot), v);
  }
  void unschedule(VertexId v) { lists_.unlink(v); }

  // Removes and returns some vertex due at `slot`, or kNoVertex.
  VertexId take(std::size_t slot) {
    const VertexId v = lists_.front(slot);
    if (v != kNoVertex) lists_.unlink(v);
    return v;
  }

 private:
  detail::ListFamily lists_;
};

// B buckets of width err over noisy residual degrees. Bucket i holds values
// nearest to (i - 1) * err; values outside the range clamp to 1 or B.
class BucketQueue {
 public:
  BucketQueue(std::int64_t width, VertexId n)
      : width_(width),
        count_(bucket_count_for(width, n)),
        lists_(static_cast<std::size_t>(count_), n) {}

  // ceil(n / err + 1).
  static std::int64_t bucket_count_for(std::int64_t width, VertexId n) {
    if (width < 1) throw std::invalid_argument("bucket width must be >= 1");
    return (static_cast<std::int64_t>(n) + 2 * width - 1) / width;
  }

  std::int64_t width() const { return width_; }
  std::int64_t bucket_count() const { return count_; }

  // Bucket for a noisy residual degree: round(value / err) + 1, halves up,
  // clamped to [1, B].
  std::int64_t bucket_for(std::int64_t value) const {
    const std::int64_t num = 2 * value + width_;
    const std::int64_t den = 2 * width_;
    std::int64_t q = num / den;
    if ((num % den != 0) && (num < 0)) --q;
    return std::clamp<std::int64_t>(q + 1, 1, count_);
  }

  // 0 when v is not queued.
  std::int64_t bucket_of(VertexId v) const {
    return static_cast<std::int64_t>(lists_.list_of(v));
  }
  bool bucket_empty(std::int64_t b) const {
    return lists_.list_empty(static_cast<std::size_t>(b));
  }

  // Places v at the head of the bucket for `value`; returns that bucket.
  std::int64_t place(VertexId v, std::int64_t value) {
    const std::int64_t b = bucket_for(value);
    if (bucket_of(v) != b) lists_.push_front(static_cast<std::size_t>(b), v);
    return b;
  }

  void erase(VertexId v) { lists_.unlink(v); }

  // Removes and returns the head of bucket b (the latest insertion).
  VertexId pop(std::int64_t b) {
    const VertexId v = lists_.front(static_cast<std::size_t>(b));
    if (v != kNoVertex) lists_.unlink(v);
    return v;
  }

 private:
  std::int64_t width_;
  std::int64_t count_;
  detail::ListFamily lists_;
};

}  // namespace densedp

#endif  // DENSEDP_PEEL_STRUCTURES_HPP_
