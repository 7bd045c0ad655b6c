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

// Integer privacy noise: the symmetric geometric distribution, the geometric
// mechanism, and the threshold-crossing-time sampler.
//
// All sampling is inverse-CDF from 53-bit uniforms drawn off a 64-bit engine.
// That carries the usual finite-precision caveat: tail probabilities below
// 2^-53 are not represented exactly, which is standard for floating-point
// samplers and irrelevant at the noise scales used here.

#ifndef DENSEDP_NOISE_HPP_
#define DENSEDP_NOISE_HPP_

#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace densedp {

// Engines must produce full 64-bit words (std::mt19937_64 does).
template <class R>
concept Rng64 = std::uniform_random_bit_generator<R> &&
                (R::min() == 0) &&
                (R::max() == std::numeric_limits<std::uint64_t>::max());

// Parameter of Geom(gamma). Stored as log(gamma) so that very large privacy
// budgets (gamma overflowing a double) still behave: the noise is then 0.
class GeomParam {
 public:
  explicit GeomParam(double gamma) {
    if (!(gamma > 1.0)) {
      throw std::domain_error("geometric noise needs gamma > 1, got " +
                              std::to_string(gamma));
    }
    log_gamma_ = std::log(gamma);
  }

  // gamma = exp(epsilon / sensitivity).
  static GeomParam for_epsilon(double epsilon, double sensitivity = 1.0) {
    if (!(epsilon > 0.0)) {
      throw std::domain_error("epsilon must be positive, got " +
                              std::to_string(epsilon));
    }
    if (!(sensitivity > 0.0)) {
      throw std::domain_error("sensitivity must be positive");
    }
    GeomParam p;
    p.log_gamma_ = epsilon / sensitivity;
    return p;
  }

  double log_gamma() const { return log_gamma_; }
  double gamma() const { return std::exp(log_gamma_); }
  // 1 / gamma, the per-unit decay of the pmf.
  double alpha() const { return std::exp(-log_gamma_); }

  // Pr[N = k] = (gamma - 1)/(gamma + 1) * gamma^-|k|.
  double pmf(std::int64_t k) const {
    const double a = alpha();
    return (1.0 - a) / (1.0 + a) *
           std::exp(-log_gamma_ * static_cast<double>(k < 0 ? -k : k));
  }

  // Pr[N > s]. For s >= 0 this is gamma^-s / (gamma + 1); for s < 0 it is
  // 1 - Pr[N >= -s] by symmetry.
  double tail_above(std::int64_t s) const {
    const double a = alpha();
    if (s >= 0) {
      return std::exp(-log_gamma_ * static_cast<double>(s + 1)) / (1.0 + a);
    }
    return 1.0 - std::exp(-log_gamma_ * static_cast<double>(-s)) / (1.0 + a);
  }

 private:
  GeomParam() = default;
  double log_gamma_ = 0.0;
};

// Uniform double in (0, 1].
template <Rng64 R>
double uniform_open_closed(R& rng) {
  return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

namespace detail {

// One-sided geometric on {0, 1, ...} with Pr[j] = (1 - alpha) alpha^j.
template <Rng64 R>
std::int64_t sample_one_sided(const GeomParam& p, R& rng) {
  const double u = uniform_open_closed(rng);
  const double j = std::floor(-std::log(u) / p.log_gamma());
  constexpr double kCap = 0x1.0p62;
  return static_cast<std::int64_t>(j < kCap ? j : kCap);
}

}  // namespace detail

// Draws from Geom(gamma) in O(1) as the difference of two one-sided
// geometrics, each drawn by inverting its CDF.
template <Rng64 R>
std::int64_t sample_geom(const GeomParam& p, R& rng) {
  const std::int64_t a = detail::sample_one_sided(p, rng);
  const std::int64_t b = detail::sample_one_sided(p, rng);
  return a - b;
}

// f + Geom(exp(epsilon / sensitivity)).
template <Rng64 R>
std::int64_t geometric_mechanism(std::int64_t true_value, std::int64_t sensitivity,
                                 double epsilon, R& rng) {
  if (sensitivity < 1) throw std::domain_error("sensitivity must be >= 1");
  const auto p = GeomParam::for_epsilon(epsilon, static_cast<double>(sensitivity));
  return true_value + sample_geom(p, rng);
}

inline constexpr std::int64_t kNever = std::numeric_limits<std::int64_t>::max();

// Number of fresh threshold checks, counting the next one as 1, until
// cnt + persistent_noise + N > threshold first holds with N ~ Geom(gamma)
// redrawn per check. Values beyond `horizon` come back as kNever.
template <Rng64 R>
std::int64_t sample_crossing_time(std::int64_t cnt, std::int64_t persistent_noise,
                                  std::int64_t threshold, const GeomParam& p,
                                  std::int64_t horizon, R& rng) {
  const double q = p.tail_above(threshold - cnt - persistent_noise);
  if (q >= 1.0) return 1;
  if (!(q > 0.0)) return kNever;
  const double u = uniform_open_closed(rng);
  const double steps = 1.0 + std::floor(std::log(u) / std::log1p(-q));
  if (!(steps <= static_cast<double>(horizon))) return kNever;
  return static_cast<std::int64_t>(steps);
}

enum class NoiseMode {
  kRandom,
  // Every noise draw is 0. Used by tests to compare against the non-private
  // algorithms; never private.
  kZero,
};

// The single gateway through which the private algorithms obtain noise.
// Keeps a count of draws so structural audits can check that released values
// were perturbed.
template <Rng64 R>
class NoiseSource {
 public:
  explicit NoiseSource(R& rng, NoiseMode mode = NoiseMode::kRandom)
      : rng_(&rng), mode_(mode) {}

  NoiseMode mode() const { return mode_; }
  std::uint64_t geom_draws() const { return geom_draws_; }
  std::uint64_t crossing_draws() const { return crossing_draws_; }

  std::int64_t geom(const GeomParam& p) {
    ++geom_draws_;
    if (mode_ == NoiseMode::kZero) return 0;
    return sample_geom(p, *rng_);
  }

  std::int64_t crossing_time(std::int64_t cnt, std::int64_t persistent_noise,
                             std::int64_t threshold, const GeomParam& p,
                             std::int64_t horizon) {
    ++crossing_draws_;
    if (mode_ == NoiseMode::kZero) {
      // With N == 0 the event is deterministic.
      return cnt + persistent_noise > threshold ? 1 : kNever;
    }
    return sample_crossing_time(cnt, persistent_noise, threshold, p, horizon,
                                *rng_);
  }

 private:
  R* rng_;
  NoiseMode mode_;
  std::uint64_t geom_draws_ = 0;
  std::uint64_t crossing_draws_ = 0;
};

}  // namespace densedp

#endif  // DENSEDP_NOISE_HPP_
