// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "gosset/market.hpp"
#include "gosset/numerics.hpp"

namespace gosset {

/// How the divergent upper tail of the log-t asset distribution is handled.
enum class TailMode {
  Capped,     ///< asset value capped at a_t * exp(sigma_t * x_c)
  Truncated,  ///< density set to zero beyond x_c and renormalized by 1/p
};

/// Tail policy given either as a confidence level p or a critical value x_c.
/// resolve_policy() fills in the other via the t quantile/CDF.
struct TailPolicy {
  TailMode mode;
  std::optional<double> p;
  std::optional<double> x_c;

  static TailPolicy with_p(TailMode mode, double p) { return {mode, p, std::nullopt}; }
  static TailPolicy with_xc(TailMode mode, double x_c) { return {mode, std::nullopt, x_c}; }

  bool resolved() const { return p.has_value() && x_c.has_value(); }
};

/// Risk-neutral scale of the asset under a tail policy. The denominator is
/// what divides s0*exp(r*T): Z + (1-p)*exp(sigma_t*x_c) when capped, Z when
/// truncated. z holds the policy's growth integral (the bare integral when
/// capped, divided by p when truncated).
struct MartingaleScale {
  double a_t;
  double z;
  double denominator;
  double x_c;
  double p;
};

/// Integral of lambda(nu) * exp(sigma_t*xi) * (1 + xi^2/nu)^(-(nu+1)/2) over
/// the domain. The upper limit must be finite: with the exponential weight the
/// full-range integral diverges for finite nu. A zero-width domain yields 0.
double growth_integral(double sigma_t, double nu, Interval domain,
                       const QuadratureOptions& opts = {});

/// Same integral with the standard normal density in place of the t kernel.
double growth_integral_normal(double sigma_t, double upper,
                              const QuadratureOptions& opts = {});

/// Returns the policy with both p and x_c populated and mutually consistent.
TailPolicy resolve_policy(const TailPolicy& policy, double nu);

/// Solves the fair-wager condition E{S_T} = s0*exp(r*T) for a_t under the
/// given tail policy.
MartingaleScale martingale_scale(const MarketParams& market, double nu,
                                 const TailPolicy& policy,
                                 const QuadratureOptions& opts = {});

/// Re-evaluates E{S_T} under the policy distribution by quadrature. Returns
/// s0*exp(r*T) up to quadrature error when the scale is consistent.
double expected_asset_value(const MartingaleScale& scale, const MarketParams& market,
                            double nu, const TailPolicy& policy,
                            const QuadratureOptions& opts = {});

}  // namespace gosset
