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

// Constants measured once by densedp_calibrate on seeds that no test uses,
// then frozen here. Rerun the tool and paste its output to refresh them.

#ifndef DENSEDP_TESTS_SUPPORT_CALIBRATION_HPP_
#define DENSEDP_TESTS_SUPPORT_CALIBRATION_HPP_

#include <cmath>
#include <cstdint>

namespace densedp::testing {

// Prefix-sum error: max_t |noisy_t - true_t| <= c * (1/eps) * ln^1.5 N * ln(100).
inline constexpr double kPrefixSumErrorConstant = 2.75;

// Peeling utility: d(S*) >= OPT/2 - kappa * (1/eps) * ln^2.5 n * ln(1/sigma).
inline constexpr double kUtilityKappa = 0.034;

// Calibration seeds start here; tests draw seeds well below it.
inline constexpr std::uint64_t kCalibrationSeedBase = 0xCA11B000000ULL;

inline double prefix_sum_envelope(double epsilon, std::uint64_t capacity) {
  const double ln_n = std::log(static_cast<double>(capacity));
  return kPrefixSumErrorConstant / epsilon * std::pow(ln_n, 1.5) * std::log(100.0);
}

inline double utility_slack_unit(double epsilon, std::uint64_t n, double sigma) {
  return 1.0 / epsilon * std::pow(std::log(static_cast<double>(n)), 2.5) *
         std::log(1.0 / sigma);
}

}  // namespace densedp::testing

#endif  // DENSEDP_TESTS_SUPPORT_CALIBRATION_HPP_
