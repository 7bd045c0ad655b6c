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

// Privacy budget split and the derived integer thresholds used by the
// private peeling algorithms.

#ifndef DENSEDP_BUDGET_HPP_
#define DENSEDP_BUDGET_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "densedp/graph.hpp"
#include "densedp/noise.hpp"

namespace densedp {

// How the total epsilon is divided. Defaults to four equal quarters.
struct BudgetSplit {
  double degree = 0.25;      // noisy initial degrees
  double prefix_sum = 0.25;  // per-vertex prefix-sum counters
  double threshold = 0.25;   // flush threshold comparisons
  double release = 0.25;     // final density release
};

struct BudgetOptions {
  // Threshold constant C in T = (C / eps) ln n ln(1/sigma). When unset, T is
  // the smallest integer meeting Pr[E > T] <= sigma / n for the persistent
  // threshold noise E, and C is reported back from it.
  std::optional<double> threshold_constant;
  // Constant in the bucket width (C_b / eps) ln^2.5 n ln(1/sigma).
  double bucket_constant = 0.05;
  BudgetSplit split;
};

class PrivacyBudget {
 public:
  static PrivacyBudget make(double epsilon, double sigma, VertexId n,
                            const BudgetOptions& opts = {}) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
      throw std::invalid_argument("epsilon must be positive and finite");
    }
    if (!(sigma > 0.0 && sigma < 1.0)) {
      throw std::invalid_argument("sigma must lie in (0, 1)");
    }
    if (n < 1) throw std::invalid_argument("graph must have a vertex");
    const BudgetSplit& s = opts.split;
    if (!(s.degree > 0 && s.prefix_sum > 0 && s.threshold > 0 && s.release > 0)) {
      throw std::invalid_argument("every budget share must be positive");
    }
    PrivacyBudget b;
    b.epsilon_ = epsilon;
    b.sigma_ = sigma;
    b.n_ = n;
    b.epsilon0_ = epsilon * s.degree;
    b.epsilon1_ = epsilon * s.prefix_sum;
    b.epsilon2_ = epsilon * s.threshold;
    b.epsilon_prime_ = epsilon * s.release;
    const double total = b.epsilon0_ + b.epsilon1_ + b.epsilon2_ + b.epsilon_prime_;
    if (std::abs(total - epsilon) > 1e-9 * epsilon) {
      throw std::invalid_argument("budget shares must sum to epsilon");
    }

    const double log_n = std::log(static_cast<double>(n));
    const double log_inv_sigma = -std::log(sigma);
    const double scale = log_n * log_inv_sigma / epsilon;
    const double target = sigma / static_cast<double>(n);
    const auto persistent = GeomParam::for_epsilon(b.epsilon2_);
    if (opts.threshold_constant) {
      const double c = *opts.threshold_constant;
      if (!(c > 0.0)) throw std::invalid_argument("threshold constant must be positive");
      b.threshold_ = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(c * scale)));
      if (persistent.tail_above(b.threshold_) > target) {
        std::ostringstream msg;
        msg << "threshold constant C=" << c << " gives T=" << b.threshold_
            << " with Pr[E > T] above sigma/n; need C >= "
            << minimal_threshold(persistent, target) / scale;
        throw std::invalid_argument(msg.str());
      }
      b.threshold_constant_ = c;
    } else {
      b.threshold_ = minimal_threshold(persistent, target);
      b.threshold_constant_ = scale > 0 ? static_cast<double>(b.threshold_) / scale : 0.0;
    }

    if (!(opts.bucket_constant > 0.0)) {
      throw std::invalid_argument("bucket constant must be positive");
    }
    b.bucket_constant_ = opts.bucket_constant;
    const double width = opts.bucket_constant / epsilon *
                         std::pow(log_n, 2.5) * log_inv_sigma;
    b.bucket_width_ = std::max<std::int64_t>(
        1, static_cast<std::int64_t>(std::min(std::ceil(width), 1e15)));
    return b;
  }

  double epsilon() const { return epsilon_; }
  double epsilon0() const { return epsilon0_; }
  double epsilon1() const { return epsilon1_; }
  double epsilon2() const { return epsilon2_; }
  double epsilon_prime() const { return epsilon_prime_; }
  double sigma() const { return sigma_; }
  VertexId n() const { return n_; }
  double threshold_constant() const { return threshold_constant_; }
  double bucket_constant() const { return bucket_constant_; }
  // Flush threshold T.
  std::int64_t threshold() const { return threshold_; }
  // Bucket width err.
  std::int64_t bucket_width() const { return bucket_width_; }

  // Sum of the four shares; equals epsilon by construction.
  double accounted_epsilon() const {
    return epsilon0_ + epsilon1_ + epsilon2_ + epsilon_prime_;
  }

 private:
  // Smallest T >= 1 with Pr[Geom > T] <= target.
  static std::int64_t minimal_threshold(const GeomParam& p, double target) {
    const double a = p.alpha();
    // alpha^(T+1) / (1 + alpha) <= target
    double guess = (std::log(target) + std::log1p(a)) / -p.log_gamma() - 1.0;
    auto t = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(guess)));
    while (t > 1 && p.tail_above(t - 1) <= target) --t;
    while (p.tail_above(t) > target) ++t;
    return t;
  }

  double epsilon_ = 0, sigma_ = 0;
  VertexId n_ = 0;
  double epsilon0_ = 0, epsilon1_ = 0, epsilon2_ = 0, epsilon_prime_ = 0;
  double threshold_constant_ = 0, bucket_constant_ = 0;
  std::int64_t threshold_ = 1, bucket_width_ = 1;
};

}  // namespace densedp

#endif  // DENSEDP_BUDGET_HPP_
