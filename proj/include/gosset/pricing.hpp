// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "gosset/market.hpp"
#include "gosset/martingale.hpp"

namespace gosset {

enum class OptionKind { Call, Put };

enum class PricingModel { GossetCapped, GossetTruncated, BlackScholes };

/// Priced option with the diagnostics needed to reconstruct the computation:
/// the martingale scale (a_t, Z, denominator, x_c, p) and the integration
/// limit ln(strike/a_t)/sigma_t (lower limit for calls, upper for puts).
struct Quote {
  double price_at_expiry;
  double price_now;
  MartingaleScale scale;
  double lower_limit;
  OptionKind kind;
  PricingModel model;
};

/// European call under the log-t model with the policy's tail handling.
Quote call_price(const MarketParams& market, double nu, const TailPolicy& policy,
                 const QuadratureOptions& opts = {});

/// European put under the log-t model. Both tail modes integrate the payoff
/// over the full lower range; a truncated policy requires the strike to lie
/// below the truncation point.
Quote put_price(const MarketParams& market, double nu, const TailPolicy& policy,
                const QuadratureOptions& opts = {});

/// Closed-form Black-Scholes price; the put follows from put-call parity.
Quote black_scholes_price(const MarketParams& market, OptionKind kind);

/// C0 - P0 - (s0 - strike*exp(-r*T)) for a call/put pair priced under the
/// same model and policy. Zero up to quadrature error.
double parity_gap(const Quote& call, const Quote& put, const MarketParams& market);

/// Present value of a cash amount paid at the given tenor.
double discount(double value_at_tenor, double rate, double tenor);

}  // namespace gosset
