// SPDX-License-Identifier: Apache-2.0
#include "gosset/martingale.hpp"

#include <cmath>
#include <limits>

#include "gosset/distributions.hpp"

namespace gosset {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_sigma_t(double sigma_t) {
  if (!(sigma_t > 0.0) || !std::isfinite(sigma_t))
    throw domain_error("sigma_t must be > 0");
}

}  // namespace

double growth_integral(double sigma_t, double nu, Interval domain,
                       const QuadratureOptions& opts) {
  require_sigma_t(sigma_t);
  if (std::isnan(nu) || !(nu > 0.0)) throw domain_error("growth_integral: nu must be > 0");
  if (std::isnan(domain.lower) || std::isnan(domain.upper))
    throw domain_error("growth_integral: NaN domain endpoint");
  if (domain.upper == kInf)
    throw domain_error(
        "growth_integral: the exponential-weighted integral diverges at +inf; "
        "the upper limit must be finite");
  if (domain.lower == domain.upper) return 0.0;

  const double ln_lambda = std::log(lambda_nu(nu));
  auto integrand = [=](double xi) {
    return std::exp(ln_lambda + sigma_t * xi + t_log_kernel(xi, nu));
  };
  return integrate(integrand, domain, opts).value;
}

double growth_integral_normal(double sigma_t, double upper, const QuadratureOptions& opts) {
  require_sigma_t(sigma_t);
  if (std::isnan(upper) || upper == kInf)
    throw domain_error("growth_integral_normal: upper limit must be finite");
  auto integrand = [=](double xi) {
    return std::exp(sigma_t * xi - 0.5 * xi * xi) * 0.3989422804014326779;
  };
  return integrate(integrand, {-kInf, upper}, opts).value;
}

TailPolicy resolve_policy(const TailPolicy& policy, double nu) {
  if (policy.p.has_value() == policy.x_c.has_value() && !policy.resolved())
    throw domain_error("tail policy: exactly one of p and x_c must be given");
  TailPolicy out = policy;
  if (out.p) {
    if (!(*out.p > 0.0 && *out.p < 1.0))
      throw domain_error("tail policy: p must lie in (0, 1)");
    if (!out.x_c) out.x_c = t_quantile(*out.p, nu);
  } else {
    if (!std::isfinite(*out.x_c))
      throw domain_error("tail policy: x_c must be finite");
    out.p = t_cdf(*out.x_c, nu);
  }
  if (!std::isfinite(*out.x_c)) throw domain_error("tail policy: x_c must be finite");
  return out;
}

MartingaleScale martingale_scale(const MarketParams& market, double nu,
                                 const TailPolicy& policy, const QuadratureOptions& opts) {
  market.validate();
  const TailPolicy res = resolve_policy(policy, nu);
  const double sigma_t = market.sigma_t();
  const double x_c = *res.x_c;
  const double p = *res.p;

  const double z_bare = growth_integral(sigma_t, nu, {-kInf, x_c}, opts);
  double z;
  double denominator;
  if (res.mode == TailMode::Capped) {
    const double q = 1.0 - p;
    // The tail weight is combined in log space; exp(sigma_t*x_c) alone can
    // overflow long before the product does.
    const double tail = q > 0.0 ? std::exp(std::log(q) + sigma_t * x_c) : 0.0;
    z = z_bare;
    denominator = z_bare + tail;
  } else {
    z = z_bare / p;
    denominator = z;
  }
  const double a_t = market.forward() / denominator;
  return {a_t, z, denominator, x_c, p};
}

double expected_asset_value(const MartingaleScale& scale, const MarketParams& market,
                            double nu, const TailPolicy& policy,
                            const QuadratureOptions& opts) {
  market.validate();
  const TailPolicy res = resolve_policy(policy, nu);
  const double sigma_t = market.sigma_t();
  const double x_c = *res.x_c;
  const double ln_a = std::log(scale.a_t);

  const double z_bare = growth_integral(sigma_t, nu, {-kInf, x_c}, opts);
  if (res.mode == TailMode::Truncated) return scale.a_t * z_bare / *res.p;

  const double tail_mass =
      integrate([=](double xi) { return t_pdf(xi, nu); }, {x_c, kInf}, opts).value;
  return scale.a_t * z_bare + std::exp(ln_a + sigma_t * x_c) * tail_mass;
}

}  // namespace gosset
