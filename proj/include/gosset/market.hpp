// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

#include "gosset/errors.hpp"

namespace gosset {

/// Market inputs for a European option. Volatility is annualized and scales
/// to the horizon as sigma_t() = sigma * sqrt(tenor).
struct MarketParams {
  double s0;      ///< spot, > 0
  double strike;  ///< strike at expiry, > 0
  double rate;    ///< continuously compounded risk-free rate per year
  double sigma;   ///< annualized volatility, > 0
  double tenor;   ///< years to expiry, > 0

  double sigma_t() const { return sigma * std::sqrt(tenor); }
  double forward() const { return s0 * std::exp(rate * tenor); }
  double discounted_strike() const { return strike * std::exp(-rate * tenor); }

  void validate() const {
    if (!(s0 > 0.0) || !std::isfinite(s0)) throw domain_error("market: s0 must be > 0");
    if (!(strike > 0.0) || !std::isfinite(strike))
      throw domain_error("market: strike must be > 0");
    if (!std::isfinite(rate)) throw domain_error("market: rate must be finite");
    if (!(sigma > 0.0) || !std::isfinite(sigma))
      throw domain_error("market: sigma must be > 0");
    if (!(tenor > 0.0) || !std::isfinite(tenor))
      throw domain_error("market: tenor must be > 0");
  }
};

}  // namespace gosset
