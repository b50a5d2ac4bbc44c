// SPDX-License-Identifier: Apache-2.0
#include "gosset/pricing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gosset/distributions.hpp"

namespace gosset {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Quote make_quote(double price_at_expiry, const MarketParams& market,
                 const MartingaleScale& scale, double lower_limit, OptionKind kind,
                 PricingModel model) {
  const double pt = std::max(price_at_expiry, 0.0);
  return {pt, discount(pt, market.rate, market.tenor), scale, lower_limit, kind, model};
}

}  // namespace

Quote call_price(const MarketParams& market, double nu, const TailPolicy& policy,
                 const QuadratureOptions& opts) {
  market.validate();
  const TailPolicy res = resolve_policy(policy, nu);
  const MartingaleScale scale = martingale_scale(market, nu, res, opts);
  const double sigma_t = market.sigma_t();
  const double x_c = scale.x_c;
  const double p = scale.p;
  const double strike = market.strike;
  const double ln_a = std::log(scale.a_t);
  const double ln_lambda = std::log(lambda_nu(nu));
  const double lower = std::log(strike / scale.a_t) / sigma_t;

  auto payoff_integral = [&] {
    auto integrand = [=](double xi) {
      const double lk = ln_lambda + t_log_kernel(xi, nu);
      return std::exp(ln_a + sigma_t * xi + lk) - strike * std::exp(lk);
    };
    return integrate(integrand, {lower, x_c}, opts).value;
  };

  double price_t;
  PricingModel model;
  if (res.mode == TailMode::Capped) {
    model = PricingModel::GossetCapped;
    const double cap_value = std::exp(ln_a + sigma_t * x_c);
    const double q = 1.0 - p;
    if (lower >= x_c) {
      // Strike at or above the cap: only the capped tail can pay off.
      price_t = std::max(cap_value - strike, 0.0) * q;
    } else {
      price_t = payoff_integral() + (cap_value - strike) * q;
    }
  } else {
    model = PricingModel::GossetTruncated;
    price_t = lower >= x_c ? 0.0 : payoff_integral() / p;
  }
  return make_quote(price_t, market, scale, lower, OptionKind::Call, model);
}

Quote put_price(const MarketParams& market, double nu, const TailPolicy& policy,
                const QuadratureOptions& opts) {
  market.validate();
  const TailPolicy res = resolve_policy(policy, nu);
  const MartingaleScale scale = martingale_scale(market, nu, res, opts);
  const double sigma_t = market.sigma_t();
  const double x_c = scale.x_c;
  const double strike = market.strike;
  const double ln_a = std::log(scale.a_t);
  const double ln_lambda = std::log(lambda_nu(nu));
  const double upper = std::log(strike / scale.a_t) / sigma_t;

  auto payoff_integral = [&](double up) {
    auto integrand = [=](double xi) {
      const double lk = ln_lambda + t_log_kernel(xi, nu);
      return strike * std::exp(lk) - std::exp(ln_a + sigma_t * xi + lk);
    };
    return integrate(integrand, {-kInf, up}, opts).value;
  };

  double price_t;
  PricingModel model;
  if (res.mode == TailMode::Capped) {
    model = PricingModel::GossetCapped;
    price_t = payoff_integral(std::min(upper, x_c));
    if (upper > x_c) {
      // Strike above the cap: every capped outcome pays strike minus the cap.
      const double cap_value = std::exp(ln_a + sigma_t * x_c);
      price_t += (strike - cap_value) * (1.0 - scale.p);
    }
  } else {
    model = PricingModel::GossetTruncated;
    if (!(x_c > upper))
      throw domain_error(
          "put_price: truncated policy requires x_c > ln(strike/a_t)/sigma_t "
          "(strike lies above the truncation point)");
    price_t = payoff_integral(upper) / scale.p;
  }
  return make_quote(price_t, market, scale, upper, OptionKind::Put, model);
}

Quote black_scholes_price(const MarketParams& market, OptionKind kind) {
  market.validate();
  const double st = market.sigma_t();
  const double d1 =
      (std::log(market.s0 / market.strike) + market.rate * market.tenor + 0.5 * st * st) / st;
  const double d2 = d1 - st;
  const double k0 = market.discounted_strike();
  double price0 = market.s0 * normal_cdf(d1) - k0 * normal_cdf(d2);
  if (kind == OptionKind::Put) price0 += k0 - market.s0;
  price0 = std::max(price0, 0.0);

  // Log-normal pathway: Z = exp(sigma_t^2/2), x_c = +inf, p = 1.
  const double z = std::exp(0.5 * st * st);
  const MartingaleScale scale{market.forward() / z, z, z, kInf, 1.0};
  const double limit = std::log(market.strike / scale.a_t) / st;
  return {price0 * std::exp(market.rate * market.tenor), price0, scale, limit, kind,
          PricingModel::BlackScholes};
}

double parity_gap(const Quote& call, const Quote& put, const MarketParams& market) {
  market.validate();
  if (call.kind != OptionKind::Call || put.kind != OptionKind::Put)
    throw domain_error("parity_gap: expected a call quote and a put quote");
  if (call.model != put.model)
    throw domain_error("parity_gap: quotes were priced under different models");
  if (call.scale.x_c != put.scale.x_c || call.scale.p != put.scale.p ||
      call.scale.a_t != put.scale.a_t)
    throw domain_error("parity_gap: quotes were priced under different policies");
  return call.price_now - put.price_now - (market.s0 - market.discounted_strike());
}

double discount(double value_at_tenor, double rate, double tenor) {
  if (std::isnan(tenor) || tenor < 0.0) throw domain_error("discount: tenor must be >= 0");
  return value_at_tenor * std::exp(-rate * tenor);
}

}  // namespace gosset
