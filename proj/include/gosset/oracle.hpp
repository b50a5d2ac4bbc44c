// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

#include "gosset/martingale.hpp"
#include "gosset/pricing.hpp"

namespace gosset {

struct McConfig {
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 0;
  std::uint64_t batch = 65536;
};

struct McEstimate {
  double mean;
  double std_error;  ///< sample_std / sqrt(samples)
  std::uint64_t samples;
};

/// Stream of unbounded standardized t variates via the inverse CDF.
class TVariateStream {
 public:
  TVariateStream(double nu, std::uint64_t seed);

  double next();

 private:
  double nu_;
  std::mt19937_64 rng_;
};

/// Stream of policy-bound t variates. Truncated mode conditions on
/// xi <= x_c by inverting u*p; capped mode clamps draws to min(xi, x_c).
class XiSampler {
 public:
  XiSampler(double nu, const TailPolicy& policy, std::uint64_t seed);

  double next();

 private:
  double nu_;
  TailMode mode_;
  double p_;
  double x_c_;
  std::mt19937_64 rng_;
};

/// Monte Carlo price of a European option under the policy distribution,
/// discounted to present value. Batches are seeded independently from the
/// batch index, so the estimate is reproducible for a fixed seed regardless
/// of how batches are scheduled across threads.
McEstimate mc_price(const MarketParams& market, double nu, const TailPolicy& policy,
                    OptionKind kind, const McConfig& config);

/// Monte Carlo price under the log-normal (Black-Scholes) dynamics.
McEstimate mc_price_black_scholes(const MarketParams& market, OptionKind kind,
                                  const McConfig& config);

}  // namespace gosset
