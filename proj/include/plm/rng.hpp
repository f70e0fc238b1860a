// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string_view>

namespace plm {

/// Counter-based generator: draw k is the k-th output of SplitMix64 started
/// at `seed`, so any draw can be produced independently of the others.
/// Normal deviates use the inverse CDF (Wichura's AS 241, PPND16).
class CounterRng {
public:
  static constexpr std::string_view algorithm_id = "splitmix64-counter+as241-inverse-normal";

  explicit CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}

  std::uint64_t bits(std::uint64_t counter) const noexcept;

  /// Uniform in the open interval (0, 1), 53-bit resolution.
  double uniform(std::uint64_t counter) const noexcept;

  /// Standard normal deviate.
  double normal(std::uint64_t counter) const noexcept;

  std::uint64_t seed() const noexcept { return seed_; }

private:
  std::uint64_t seed_;
};

/// Quantile function of the standard normal distribution for p in (0, 1).
double inverse_normal_cdf(double p);

} // namespace plm
